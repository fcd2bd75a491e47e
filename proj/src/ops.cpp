#include "qsdd/ops.hpp"

namespace qsdd {

XPoly bergeron_sottile(const XPoly& f, int i, MParam m) {
    if (i < 1) throw std::invalid_argument("R_i needs i >= 1");
    const int mm = m.value();
    XPoly r;
    for (auto& [c, a] : f.terms()) {
        bool killed = false;
        for (int p = i; p < i + mm; ++p)
            if (code_at(c, p) != 0) { killed = true; break; }
        if (killed) continue;
        Code nc;
        nc.reserve(c.size());
        for (int p = 1; p <= (int)c.size(); ++p) {
            if (p >= i && p < i + mm) continue;
            nc.push_back(c[p - 1]);
        }
        r.add_term(std::move(nc), a);
    }
    return r;
}

XPoly divided_difference(const XPoly& f, int i, MParam m) {
    if (i < 1) throw std::invalid_argument("partial_i needs i >= 1");
    const int j = i + m.value();
    XPoly r;
    for (auto& [c, coef] : f.terms()) {
        int a = code_at(c, i), b = code_at(c, j);
        if (a == b) continue;
        Code rest = c;
        code_set(rest, i, 0);
        code_set(rest, j, 0);
        canonicalize(rest);
        // (x^a y^b - x^b y^a)/(x - y), summed termwise.
        int lo = std::min(a, b), hi = std::max(a, b);
        Int sign = a > b ? coef : -coef;
        for (int t = lo; t < hi; ++t) {
            Code nc = rest;
            if (t > 0) code_set(nc, i, code_at(nc, i) + t);
            int u = a + b - 1 - t;
            if (u > 0) code_set(nc, j, code_at(nc, j) + u);
            r.add_term(std::move(nc), sign);
        }
    }
    return r;
}

XPoly divide_by_variable(const XPoly& f, int i) {
    XPoly r;
    for (auto& [c, a] : f.terms()) {
        if (code_at(c, i) < 1)
            throw std::logic_error("internal error: division by x_" + std::to_string(i) +
                                   " is not exact");
        Code nc = c;
        nc[i - 1] -= 1;
        canonicalize(nc);
        r.add_term(std::move(nc), a);
    }
    return r;
}

XPoly trim(const XPoly& f, int i, MParam m) {
    return trim_via(f, i, m, TrimRoute::RatioOfR);
}

XPoly trim_via(const XPoly& f, int i, MParam m, TrimRoute route) {
    if (i < 1) throw std::invalid_argument("T_i needs i >= 1");
    switch (route) {
        case TrimRoute::RatioOfR:
            return divide_by_variable(bergeron_sottile(f, i + 1, m) - bergeron_sottile(f, i, m),
                                      i);
        case TrimRoute::RThenDiff:
            return bergeron_sottile(divided_difference(f, i, m), i, m);
        case TrimRoute::RNextThenDiff:
            return bergeron_sottile(divided_difference(f, i, m), i + 1, m);
    }
    throw std::logic_error("unreachable");
}

XPoly hivert_sigma(const XPoly& f, int i) {
    if (i < 1) throw std::invalid_argument("sigma_i needs i >= 1");
    XPoly r;
    for (auto& [c, a] : f.terms()) {
        int ci = code_at(c, i), cj = code_at(c, i + 1);
        if (ci == 0 || cj == 0) {
            Code nc = c;
            code_set(nc, i, cj);
            code_set(nc, i + 1, ci);
            canonicalize(nc);
            r.add_term(std::move(nc), a);
        } else {
            r.add_term(c, a);
        }
    }
    return r;
}

bool is_quasisymmetric(const XPoly& f, int n, MParam m) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (f.max_variable() > n)
        throw std::invalid_argument("polynomial uses a variable beyond x_" + std::to_string(n));
    for (int i = 1; i + m.value() <= n; ++i)
        if (!trim(f, i, m).is_zero()) return false;
    return true;
}

Code revlex_leading(const XPoly& f) {
    return f.leading_term().first;
}

XPoly rename_variables(const XPoly& f, const std::function<int(int)>& perm) {
    XPoly r;
    for (auto& [c, a] : f.terms()) {
        Code nc;
        for (int p = 1; p <= (int)c.size(); ++p) {
            if (c[p - 1] == 0) continue;
            int q = perm(p);
            if (q < 1) throw std::invalid_argument("variable map must stay >= 1");
            code_set(nc, q, code_at(nc, q) + c[p - 1]);
        }
        r.add_term(std::move(nc), a);
    }
    return r;
}

XPoly reverse_variables(const XPoly& f, int n) {
    if (f.max_variable() > n)
        throw std::invalid_argument("rev_n needs f in Poly_n");
    return rename_variables(f, [n](int i) { return n + 1 - i; });
}

} // namespace qsdd
