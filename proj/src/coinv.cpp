#include "qsdd/coinv.hpp"

#include <json.hpp>

#include "qsdd/ops.hpp"

namespace qsdd {

bool ideal_membership(const XPoly& f, const IdealSpec& spec) {
    if (spec.k < 0) throw std::invalid_argument("k must be >= 0");
    if (f.max_variable() > spec.n)
        throw std::invalid_argument("polynomial uses a variable beyond x_" +
                                    std::to_string(spec.n));
    if (spec.k == 0) return true;  // I_{0,n} = Poly_n
    Expansion e = forest_expand(f, spec.m);
    for (auto& [c, a] : e.terms()) {
        auto fact = support_factorization(IndexedForest::from_code(c, spec.m), spec.n);
        if (fact.zigzag.size() < spec.k) return false;
    }
    return true;
}

Expansion coinv_reduce(const XPoly& f, int n, MParam m) {
    if (f.max_variable() > n)
        throw std::invalid_argument("polynomial uses a variable beyond x_" + std::to_string(n));
    Expansion e = forest_expand(f, m);
    Expansion reduced(m);
    for (auto& [c, a] : e.terms())
        if (is_fully_supported(IndexedForest::from_code(c, m), n)) reduced.add(c, a);
    return reduced;
}

bool rev_mirror_check(const IndexedForest& F, int n) {
    if (F.m().value() != 1)
        throw std::invalid_argument("rev_mirror_check is defined for m = 1");
    if (!is_fully_supported(F, n))
        throw std::invalid_argument("rev_mirror_check needs F in Supp_n");
    Expansion lhs = coinv_reduce(reverse_variables(forest_polynomial(F), n), n, F.m());
    Expansion rhs(F.m());
    rhs.add(mirror(F, n).code(), F.size() % 2 == 0 ? Int(1) : Int(-1));
    return lhs == rhs;
}

std::string VerificationReport::to_text() const {
    std::string out;
    for (auto& r : relations) {
        out += "RELATION " + r.name + ": " + (r.pass ? "PASS" : "FAIL");
        if (!r.pass) out += " (counterexample: " + r.counterexample + ")";
        out += "\n";
    }
    return out;
}

std::string VerificationReport::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (auto& r : relations) {
        nlohmann::json j{{"name", r.name}, {"pass", r.pass}, {"checks", r.checks}};
        if (!r.pass) j["counterexample"] = r.counterexample;
        arr.push_back(j);
    }
    return nlohmann::json{{"relations", arr}, {"all_pass", all_pass()}}.dump();
}

XPoly random_xpoly(std::mt19937_64& rng, int nvars, int maxdeg, int terms) {
    XPoly f;
    for (int t = 0; t < terms; ++t) {
        Code c;
        int d = (int)(rng() % (maxdeg + 1));
        for (int j = 0; j < d; ++j) {
            int v = 1 + (int)(rng() % nvars);
            code_set(c, v, code_at(c, v) + 1);
        }
        f.add_term(std::move(c), Int((long)(rng() % 19) - 9));
    }
    return f;
}

XPoly random_quasisymmetric(std::mt19937_64& rng, int n, MParam m, int maxdeg) {
    XPoly f;
    for (int parts = 0; parts < 3; ++parts) {
        int len = 1 + (int)(rng() % maxdeg);
        std::vector<int> a;
        int top = n - (int)(rng() % m.value());
        a.push_back(std::max(1, top));
        for (int j = 1; j < len; ++j) {
            int next = a.back() - (int)(rng() % (m.value() + 1));
            if (next < 1) break;
            a.push_back(next);
        }
        long coeff = (long)(rng() % 7) - 3;
        f += slide_polynomial(a, m) * Int(coeff);
    }
    return f;
}

namespace {

using Op = std::function<XPoly(const XPoly&)>;

void run_relation(VerificationReport& report, const std::string& name, int trials,
                  std::mt19937_64& rng, int nvars,
                  const std::function<std::pair<XPoly, XPoly>(std::mt19937_64&, const XPoly&)>& eval) {
    RelationReport r;
    r.name = name;
    for (int t = 0; t < trials && r.pass; ++t) {
        XPoly f = random_xpoly(rng, nvars, 4, 4);
        auto [lhs, rhs] = eval(rng, f);
        ++r.checks;
        if (lhs != rhs) {
            r.pass = false;
            r.counterexample = format_poly(f);
        }
    }
    report.relations.push_back(std::move(r));
}

} // namespace

VerificationReport verify_nilhecke(int n, MParam m, int trials, unsigned long seed) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    const int mm = m.value();
    VerificationReport report;
    std::mt19937_64 rng(seed);
    auto T = [&](const XPoly& f, int i) { return trim(f, i, m); };
    auto R1 = [&](const XPoly& f) { return bergeron_sottile(f, 1, MParam(1)); };
    auto R1m = [&](XPoly f) {
        for (int j = 0; j < mm; ++j) f = R1(f);
        return f;
    };
    auto X = [&](int i, const XPoly& f) { return XPoly::variable(i) * f; };
    auto rnd_i = [&](std::mt19937_64& r) { return 1 + (int)(r() % std::max(1, n - 1)); };

    run_relation(report, "T_i R_1 = R_1 T_{i+1}", trials, rng, n,
                 [&](std::mt19937_64& r, const XPoly& f) {
                     int i = rnd_i(r);
                     return std::pair{T(R1(f), i), R1(T(f, i + 1))};
                 });
    run_relation(report, "R_1 x_i = x_{i-1} R_1 (i > 1)", trials, rng, n,
                 [&](std::mt19937_64& r, const XPoly& f) {
                     int i = 2 + (int)(r() % std::max(1, n - 1));
                     return std::pair{R1(X(i, f)), X(i - 1, R1(f))};
                 });
    run_relation(report, "T_i x_j = x_j T_i (j < i)", trials, rng, n,
                 [&](std::mt19937_64& r, const XPoly& f) {
                     int i = 2 + (int)(r() % std::max(1, n - 1));
                     int j = 1 + (int)(r() % (i - 1));
                     return std::pair{T(X(j, f), i), X(j, T(f, i))};
                 });
    run_relation(report, "T_i x_j = x_{j-m} T_i (j > i+m)", trials, rng, n,
                 [&](std::mt19937_64& r, const XPoly& f) {
                     int i = rnd_i(r);
                     int j = i + mm + 1 + (int)(r() % 3);
                     return std::pair{T(X(j, f), i), X(j - mm, T(f, i))};
                 });
    run_relation(report, "T_i T_j = T_j T_{i+m} (i > j)", trials, rng, n,
                 [&](std::mt19937_64& r, const XPoly& f) {
                     int j = rnd_i(r);
                     int i = j + 1 + (int)(r() % 3);
                     return std::pair{T(T(f, j), i), T(T(f, i + mm), j)};
                 });
    run_relation(report, "R_1 x_1 = 0", trials, rng, n,
                 [&](std::mt19937_64&, const XPoly& f) {
                     return std::pair{R1(X(1, f)), XPoly()};
                 });
    if (mm > 1)
        run_relation(report, "T_i x_{i+j} = 0 (1 <= j <= m-1)", trials, rng, n,
                     [&](std::mt19937_64& r, const XPoly& f) {
                         int i = rnd_i(r);
                         int j = 1 + (int)(r() % (mm - 1));
                         return std::pair{T(X(i + j, f), i), XPoly()};
                     });
    run_relation(report, "T_i x_i = R_1^m + x_1 T_1 + ... + x_i T_i", trials, rng, n,
                 [&](std::mt19937_64& r, const XPoly& f) {
                     int i = rnd_i(r);
                     XPoly rhs = R1m(f);
                     for (int l = 1; l <= i; ++l) rhs += X(l, T(f, l));
                     return std::pair{T(X(i, f), i), rhs};
                 });
    run_relation(report, "T_i x_{i+m} = -(R_1^m + x_1 T_1 + ... + x_{i-1} T_{i-1})", trials,
                 rng, n, [&](std::mt19937_64& r, const XPoly& f) {
                     int i = rnd_i(r);
                     XPoly rhs = R1m(f);
                     for (int l = 1; l < i; ++l) rhs += X(l, T(f, l));
                     return std::pair{T(X(i + mm, f), i), -rhs};
                 });

    // T_H(gh) = R_1^{m|H|}(g) T_H(h) for quasisymmetric g, H in Supp_n
    {
        RelationReport r;
        r.name = "T_H(gh) = R_1^{m|H|}(g) T_H(h)";
        auto supp = enumerate_class(ForestClass::FullySupported, n, m, n);
        for (int t = 0; t < trials && r.pass; ++t) {
            XPoly g = random_quasisymmetric(rng, n, m, 3);
            XPoly h = random_xpoly(rng, n, 3, 3);
            const IndexedForest& H = supp[rng() % supp.size()];
            XPoly lhs = trim_composite(g * h, H);
            XPoly rg = g;
            for (long j = 0; j < mm * H.size(); ++j) rg = R1(rg);
            ++r.checks;
            if (lhs != rg * trim_composite(h, H)) {
                r.pass = false;
                r.counterexample =
                    "g = " + format_poly(g) + ", h = " + format_poly(h) +
                    ", H = " + code_to_string(H.code());
            }
        }
        report.relations.push_back(std::move(r));
    }
    return report;
}

} // namespace qsdd
