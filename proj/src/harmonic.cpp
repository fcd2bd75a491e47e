#include "qsdd/harmonic.hpp"

namespace qsdd {

Rat d_pairing(const XPoly& f, const LPoly& g) {
    Rat r = 0;
    for (auto& [c, a] : f.terms()) {
        Rat b = g.coefficient(c);
        if (b == 0) continue;
        r += Rat(a * code_factorial(c)) * b;
    }
    return r;
}

LPoly adjoint_r(const LPoly& g, int i, MParam m) {
    if (i < 1) throw std::invalid_argument("adjoint index must be >= 1");
    LPoly r;
    for (auto& [c, a] : g.terms()) {
        Code nc;
        for (int p = 1; p <= (int)c.size(); ++p) {
            if (c[p - 1] == 0) continue;
            int q = p >= i ? p + m.value() : p;
            code_set(nc, q, c[p - 1]);
        }
        r.add_term(std::move(nc), a);
    }
    return r;
}

LPoly adjoint_t(const LPoly& g, int i, MParam m) {
    if (i < 1) throw std::invalid_argument("adjoint index must be >= 1");
    const int mm = m.value();
    LPoly r;
    for (auto& [c, a] : g.terms()) {
        // substitute: slot i becomes the integration variable, slots
        // above i move up by m (vacating i+1..i+m)
        Code rest;
        int e = 0;
        for (int p = 1; p <= (int)c.size(); ++p) {
            if (c[p - 1] == 0) continue;
            if (p == i) e = c[p - 1];
            else code_set(rest, p > i ? p + mm : p, c[p - 1]);
        }
        // integral of z^e dz from lambda_{i+m} to lambda_i
        Rat coeff = a / Rat(e + 1);
        Code hi = rest, lo = rest;
        code_set(hi, i, e + 1);
        code_set(lo, i + mm, code_at(lo, i + mm) + e + 1);
        r.add_term(std::move(hi), coeff);
        r.add_term(std::move(lo), -coeff);
    }
    return r;
}

LPoly volume_polynomial(const IndexedForest& F, VolumeMethod method) {
    if (method == VolumeMethod::Recursive) {
        if (F.empty()) return LPoly(Rat(1));
        int i = *terminal_flags_from_code(F.code(), F.m()).begin();
        return adjoint_t(volume_polynomial(trim_forest(F, i), method), i, F.m());
    }
    ForestShape shape = analyze(F);
    const int k = (int)shape.nodes.size();
    if (k > 30) throw std::invalid_argument("volume_polynomial: forest too large");
    LPoly r;
    for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
        Code d = path_lengths(shape, mask);
        Rat coeff(__builtin_popcountll(mask) % 2 == 0 ? 1 : -1, 1);
        coeff /= Rat(code_factorial(d));
        r.add_term(std::move(d), coeff);
    }
    return r;
}

std::vector<LPoly> harmonic_basis(int n, MParam m) {
    std::vector<LPoly> out;
    for (auto& F : enumerate_class(ForestClass::FullySupported, n, m, n))
        out.push_back(volume_polynomial(F));
    return out;
}

bool is_harmonic(const LPoly& g, int n, MParam m) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (g.max_variable() > n)
        throw std::invalid_argument("polynomial uses a variable beyond lambda_" +
                                    std::to_string(n));
    long d = g.degree();
    for (long k = 1; k <= d; ++k)
        for (auto& a : enumerate_qseq(n, m, (int)k))
            if (!apply_as_differential(slide_polynomial(a, m), g).is_zero()) return false;
    return true;
}

LPoly lambda_difference_product(const Code& c, MParam m) {
    LPoly r{Rat(1)};
    for (int i = 1; i <= (int)c.size(); ++i) {
        if (c[i - 1] == 0) continue;
        LPoly diff = LPoly::variable(i) - LPoly::variable(i + m.value());
        for (int j = 0; j < c[i - 1]; ++j) r *= diff;
    }
    return r;
}

DifferenceCoeffs lambda_difference_coeffs(const LPoly& g, MParam m) {
    DifferenceCoeffs out;
    LPoly rest = g;
    while (!rest.is_zero()) {
        auto [c, a] = rest.leading_term();
        if (c.empty()) {
            out[Code{}] = a;
            rest -= LPoly(a);
            continue;
        }
        // the leading term of prod (l_i - l_{i+m})^{d_i} is
        // (-1)^{|d|} lambda^{shift_m(d)}, so d is c shifted left by m
        bool blocked = false;
        for (int p = 1; p <= m.value(); ++p)
            if (code_at(c, p) != 0) blocked = true;
        if (blocked)
            throw std::invalid_argument(
                "not in the difference subring; residual term with exponents " +
                code_to_string(c));
        Code d(c.begin() + m.value(), c.end());
        Rat b = code_weight(c) % 2 == 0 ? a : -a;
        out[d] = b;
        rest -= lambda_difference_product(d, m) * b;
    }
    return out;
}

} // namespace qsdd
