#include "qsdd/lpoly.hpp"

#include "qsdd/xpoly.hpp"

namespace qsdd {

LPoly parse_lpoly(const std::string& text) {
    return PolyParser<Rat>(text, 'l', /*rational=*/true).parse();
}

std::string format_lpoly(const LPoly& g) {
    return format_poly(g, 'l');
}

LPoly derivative(const LPoly& g, int i) {
    if (i < 1) throw std::invalid_argument("derivative index must be >= 1");
    LPoly r;
    for (auto& [c, a] : g.terms()) {
        int e = code_at(c, i);
        if (e == 0) continue;
        Code nc = c;
        nc[i - 1] -= 1;
        canonicalize(nc);
        r.add_term(std::move(nc), a * e);
    }
    return r;
}

LPoly apply_as_differential(const XPoly& f, const LPoly& g) {
    LPoly r;
    for (auto& [c, coef] : f.terms()) {
        for (auto& [d, b] : g.terms()) {
            // partial^c applied to b*lambda^d
            bool ok = true;
            Int scale = 1;
            for (int i = 1; i <= (int)c.size() && ok; ++i) {
                int k = c[i - 1];
                if (k == 0) continue;
                int e = code_at(d, i);
                if (e < k) { ok = false; break; }
                for (int j = 0; j < k; ++j) scale *= (e - j);
            }
            if (!ok) continue;
            Code nd = d;
            for (int i = 1; i <= (int)c.size(); ++i)
                if (c[i - 1] > 0) nd[i - 1] -= c[i - 1];
            canonicalize(nd);
            r.add_term(std::move(nd), b * Rat(coef * scale));
        }
    }
    return r;
}

LPoly truncate(const LPoly& g, int n) {
    LPoly r;
    for (auto& [c, a] : g.terms())
        if (code_max_support(c) <= n) r.add_term(c, a);
    return r;
}

} // namespace qsdd
