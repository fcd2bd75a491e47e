#include "qsdd/checks.hpp"

#include <sstream>

#include "qsdd/cli.hpp"
#include "qsdd/linalg.hpp"

namespace qsdd::checks {

namespace {

std::vector<IndexedForest> forests_in_window(int window, long max_size, MParam m) {
    std::vector<IndexedForest> out;
    Code cur(window, 0);
    auto gen = [&](auto&& self, int pos, long remaining) -> void {
        if (pos > window) {
            out.push_back(IndexedForest::from_code(canonical(cur), m));
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            cur[pos - 1] = v;
            self(self, pos + 1, remaining - v);
        }
        cur[pos - 1] = 0;
    };
    gen(gen, 1, max_size);
    std::sort(out.begin(), out.end());
    return out;
}

std::string count_detail(long ok, long total, const std::string& what) {
    return std::to_string(ok) + "/" + std::to_string(total) + " " + what;
}

} // namespace

SuiteResult duality(long max_size, int flag_window) {
    SuiteResult r;
    r.name = "duality";
    MParam m(1);
    auto all = forests_in_window(flag_window, max_size, m);
    std::vector<XPoly> polys;
    polys.reserve(all.size());
    for (auto& F : all) polys.push_back(forest_polynomial(F));
    long ok = 0, total = 0;
    for (size_t i = 0; i < all.size(); ++i) {
        for (size_t j = 0; j < all.size(); ++j) {
            ++total;
            Int ct = trim_composite(polys[j], all[i]).constant_term();
            if (ct == (i == j ? 1 : 0)) {
                ++ok;
            } else if (r.pass) {
                r.pass = false;
                r.detail = "first failure at F = " + code_to_string(all[i].code()) +
                           ", G = " + code_to_string(all[j].code());
            }
        }
    }
    r.checks = total;
    if (r.pass) r.detail = count_detail(ok, total, "pairs");
    return r;
}

SuiteResult trim_theorem(MParam m, long max_size, int flag_window) {
    SuiteResult r;
    r.name = "trim-theorem(m=" + std::to_string(m.value()) + ")";
    long ok = 0, total = 0;
    for (auto& F : forests_in_window(flag_window, max_size, m)) {
        XPoly p = forest_polynomial(F);
        auto flags = terminal_flags(F);
        for (int i = 1; i <= flag_window + m.value() + 1; ++i) {
            ++total;
            XPoly lhs = trim(p, i, m);
            bool good = flags.count(i) ? lhs == forest_polynomial(trim_forest(F, i))
                                       : lhs.is_zero();
            if (good) {
                ++ok;
            } else if (r.pass) {
                r.pass = false;
                r.detail = "first failure at F = " + code_to_string(F.code()) +
                           ", i = " + std::to_string(i);
            }
        }
    }
    r.checks = total;
    if (r.pass) r.detail = count_detail(ok, total, "trims");
    return r;
}

SuiteResult positivity(long size_budget, int flag_window) {
    SuiteResult r;
    r.name = "positivity";
    MParam m(1);
    ForestPolyTable table(m);
    auto all = forests_in_window(flag_window, size_budget, m);
    long ok = 0, total = 0;
    for (auto& F : all) {
        for (auto& G : all) {
            if (F.size() + G.size() > size_budget) continue;
            if (revlex_less(G.code(), F.code())) continue;  // products commute
            ++total;
            Expansion e = forest_expand(table.get(F.code()) * table.get(G.code()), m, &table);
            bool good = true;
            for (auto& [c, a] : e.terms())
                if (a < 0) good = false;
            if (good) {
                ++ok;
            } else if (r.pass) {
                r.pass = false;
                r.detail = "negative coefficient in P_" + code_to_string(F.code()) + " * P_" +
                           code_to_string(G.code());
            }
        }
    }
    r.checks = total;
    if (r.pass) r.detail = count_detail(ok, total, "products");
    return r;
}

SuiteResult monk(int max_i, long max_size, int flag_window) {
    SuiteResult r;
    r.name = "monk";
    MParam m(1);
    ForestPolyTable table(m);
    long ok = 0, total = 0;
    for (int i = 1; i <= max_i; ++i) {
        XPoly gen = forest_polynomial(IndexedForest::generator(i, m));
        for (auto& F : forests_in_window(flag_window, max_size, m)) {
            ++total;
            Expansion e = forest_expand(gen * table.get(F.code()), m, &table);
            bool good = true;
            for (auto& [c, a] : e.terms())
                if (a != 1) good = false;
            if (good) {
                ++ok;
            } else if (r.pass) {
                r.pass = false;
                r.detail = "multiplicity in P_underline(" + std::to_string(i) + ") * P_" +
                           code_to_string(F.code());
            }
        }
    }
    r.checks = total;
    if (r.pass) r.detail = count_detail(ok, total, "Monk products");
    return r;
}

SuiteResult coinv_dims(int max_n_m1, int max_n_higher) {
    SuiteResult r;
    r.name = "coinv-dims";
    long ok = 0, total = 0;
    std::ostringstream dims;
    for (int m = 1; m <= 3; ++m) {
        int top = m == 1 ? max_n_m1 : max_n_higher;
        for (int n = 0; n <= top; ++n) {
            ++total;
            long count =
                (long)enumerate_class(ForestClass::FullySupported, n, MParam(m), n).size();
            if (Int(count) == raney_count(n, MParam(m))) {
                ++ok;
                if (m == 1) dims << (n ? "," : "") << count;
            } else if (r.pass) {
                r.pass = false;
                r.detail = "dimension mismatch at m = " + std::to_string(m) +
                           ", n = " + std::to_string(n);
            }
        }
    }
    r.checks = total;
    if (r.pass) r.detail = count_detail(ok, total, "dimensions; m=1 gives " + dims.str());
    return r;
}

SuiteResult nilhecke(int n, int trials, unsigned long seed) {
    SuiteResult r;
    r.name = "nilhecke";
    for (int m = 1; m <= 2; ++m) {
        auto report = verify_nilhecke(n, MParam(m), trials, seed + m);
        r.log += report.to_text();
        for (auto& rel : report.relations) {
            r.checks += rel.checks;
            if (!rel.pass && r.pass) {
                r.pass = false;
                r.detail = "m = " + std::to_string(m) + ", " + rel.name + ": " +
                           rel.counterexample;
            }
        }
    }
    if (r.pass) r.detail = count_detail(r.checks, r.checks, "relation instances");
    return r;
}

SuiteResult volume_methods(long max_size_m1, long max_size_m2, int flag_window) {
    SuiteResult r;
    r.name = "volume-methods";
    long ok = 0, total = 0;
    for (int m = 1; m <= 2; ++m) {
        long cap = m == 1 ? max_size_m1 : max_size_m2;
        for (auto& F : forests_in_window(flag_window, cap, MParam(m))) {
            ++total;
            if (volume_polynomial(F, VolumeMethod::Recursive) ==
                volume_polynomial(F, VolumeMethod::Paths)) {
                ++ok;
            } else if (r.pass) {
                r.pass = false;
                r.detail = "method mismatch at m = " + std::to_string(m) + ", F = " +
                           code_to_string(F.code());
            }
        }
    }
    r.checks = total;
    if (r.pass) r.detail = count_detail(ok, total, "forests");
    return r;
}

SuiteResult worked_volume() {
    SuiteResult r;
    r.name = "worked-volume";
    r.checks = 1;
    IndexedForest F = forest_of_code(Code{0, 2, 0, 1, 0, 0, 1, 0, 0, 0, 2}, MParam(1));
    LPoly expect = (parse_lpoly("1/2*l2^2 - 1/2*l3^2") * parse_lpoly("l4 - l5") -
                    parse_lpoly("1/2*l2 - 1/2*l3") * parse_lpoly("l4^2 - l5^2")) *
                   parse_lpoly("l7 - l8") *
                   (parse_lpoly("1/2*l11^2 - 1/2*l12^2") -
                    parse_lpoly("l11 - l12") * parse_lpoly("l13"));
    if (volume_polynomial(F) == expect && volume_polynomial(F, VolumeMethod::Paths) == expect) {
        r.detail = "product form reproduced";
    } else {
        r.pass = false;
        r.detail = "worked volume mismatch";
    }
    return r;
}

SuiteResult volume_duality(long max_size, int flag_window) {
    SuiteResult r;
    r.name = "volume-duality";
    long ok = 0, total = 0;
    for (int m = 1; m <= 2; ++m) {
        auto all = forests_in_window(flag_window, max_size, MParam(m));
        std::vector<LPoly> vols;
        vols.reserve(all.size());
        for (auto& F : all) vols.push_back(volume_polynomial(F));
        for (size_t i = 0; i < all.size(); ++i) {
            XPoly p = forest_polynomial(all[i]);
            for (size_t j = 0; j < all.size(); ++j) {
                ++total;
                if (d_pairing(p, vols[j]) == (i == j ? 1 : 0)) {
                    ++ok;
                } else if (r.pass) {
                    r.pass = false;
                    r.detail = "duality mismatch at m = " + std::to_string(m) + ", G = " +
                               code_to_string(all[i].code()) + ", F = " +
                               code_to_string(all[j].code());
                }
            }
        }
    }
    r.checks = total;
    if (r.pass) r.detail = count_detail(ok, total, "pairs");
    return r;
}

SuiteResult volume(long max_size_m1, long max_size_m2, int flag_window, long duality_size) {
    SuiteResult r;
    r.name = "volume";
    for (SuiteResult part : {volume_methods(max_size_m1, max_size_m2, flag_window),
                             worked_volume(), volume_duality(duality_size, flag_window)}) {
        r.checks += part.checks;
        if (!part.pass && r.pass) {
            r.pass = false;
            r.detail = part.name + ": " + part.detail;
        }
    }
    if (r.pass) r.detail = count_detail(r.checks, r.checks, "volume checks");
    return r;
}

SuiteResult harmonic(int max_n, int span_n) {
    SuiteResult r;
    r.name = "harmonic";
    long ok = 0, total = 0;
    auto fail = [&](const std::string& what) {
        if (r.pass) {
            r.pass = false;
            r.detail = what;
        }
    };
    for (int m = 1; m <= 2; ++m)
        for (int n = 1; n <= max_n; ++n)
            for (auto& F : enumerate_class(ForestClass::FullySupported, n, MParam(m), n)) {
                ++total;
                if (is_harmonic(volume_polynomial(F), n, MParam(m)))
                    ++ok;
                else
                    fail("V_F not harmonic at m = " + std::to_string(m) + ", n = " +
                         std::to_string(n) + ", F = " + code_to_string(F.code()));
            }
    // spanning by derivatives of the top degree (m = 1)
    MParam m1(1);
    for (int n = 2; n <= span_n; ++n) {
        auto supp = enumerate_class(ForestClass::FullySupported, n, m1, n);
        std::vector<LPoly> top;
        for (auto& F : supp)
            if (F.size() == n - 1) top.push_back(volume_polynomial(F));
        for (long d = 0; d < n - 1; ++d) {
            auto monos = forests_in_window(n, d, m1);  // codes of weight <= d
            std::vector<Code> degree_d;
            for (auto& M : monos)
                if (M.size() == d) degree_d.push_back(M.code());
            auto coords = [&](const LPoly& g) {
                Int scale = 1;
                for (auto& c : degree_d) scale *= Int(denominator(g.coefficient(c)));
                std::vector<Int> row;
                for (auto& c : degree_d) row.push_back(numerator(g.coefficient(c) * Rat(scale)));
                return row;
            };
            std::vector<std::vector<Int>> rows;
            for (auto& g : top) {
                std::vector<Code> ds;
                for (auto& M : forests_in_window(n, n - 1 - d, m1))
                    if (M.size() == n - 1 - d) ds.push_back(M.code());
                for (auto& c : ds)
                    rows.push_back(coords(apply_as_differential(XPoly::monomial(c), g)));
            }
            for (auto& F : supp) {
                if (F.size() != d) continue;
                ++total;
                if (in_row_span(rows, coords(volume_polynomial(F))))
                    ++ok;
                else
                    fail("V_F outside the derivative span at n = " + std::to_string(n) +
                         ", F = " + code_to_string(F.code()));
            }
        }
    }
    r.checks = total;
    if (r.pass) r.detail = count_detail(ok, total, "harmonic checks");
    return r;
}

SuiteResult epsilon(long max_weight, int window) {
    SuiteResult r;
    r.name = "epsilon";
    MParam m(1);
    long ok = 0, total = 0;
    for (auto& C : forests_in_window(window, max_weight, m)) {
        const Code& c = C.code();
        ++total;
        Expansion e = monomial_to_forest(c, m);
        bool good = e.reconstruct() == XPoly::monomial(c);
        if (c == Code{0, 2, 1}) {
            long plus = 0, minus = 0;
            for (auto& [g, a] : e.terms()) {
                if (a == 1) ++plus;
                else if (a == -1) ++minus;
                else good = false;
            }
            good = good && plus == 1 && minus == 2 && e.terms().size() == 3;
        }
        if (good) {
            ++ok;
        } else if (r.pass) {
            r.pass = false;
            r.detail = "reconstruction failed for x^" + code_to_string(c);
        }
    }
    r.checks = total;
    if (r.pass) r.detail = count_detail(ok, total, "monomials");
    return r;
}

SuiteResult theta(int max_n, long max_size) {
    SuiteResult r;
    r.name = "theta";
    long ok = 0, total = 0;
    for (int m = 1; m <= 2; ++m)
        for (int n = 2; n <= max_n; ++n) {
            auto lter = enumerate_class(ForestClass::LeftTerminal, n, MParam(m), max_size);
            std::set<std::pair<Code, Code>> image;
            bool good = true;
            for (auto& F : lter) {
                auto [G, H] = support_factorization(F, n);
                auto back = support_composition(G, H, n);
                if (!is_zigzag(G, n) || !is_fully_supported(H, n) || !back.has_value() ||
                    !(*back == F))
                    good = false;
                image.insert({G.code(), H.code()});
            }
            good = good && image.size() == lter.size();
            // surjectivity onto admissible pairs within the size budget
            long admissible = 0;
            for (auto& G : enumerate_class(ForestClass::Zigzag, n, MParam(m), max_size))
                for (auto& H :
                     enumerate_class(ForestClass::FullySupported, n, MParam(m), n)) {
                    if (G.size() + H.size() > max_size) continue;
                    if (!G.empty() && G.min_support() <= (long)m * H.size()) continue;
                    ++admissible;
                    if (!image.count({G.code(), H.code()})) good = false;
                }
            good = good && admissible == (long)image.size();
            ++total;
            if (good) {
                ++ok;
            } else if (r.pass) {
                r.pass = false;
                r.detail = "bijection failure at m = " + std::to_string(m) + ", n = " +
                           std::to_string(n);
            }
        }
    r.checks = total;
    if (r.pass) r.detail = count_detail(ok, total, "(m,n) windows");
    return r;
}

namespace {

// The pinned n = 5, m = 1 table: all 42 fully supported forests with
// their polynomials, exactly.
const std::vector<std::pair<Code, const char*>>& pinned_table() {
    static const std::vector<std::pair<Code, const char*>> rows = {
        {{}, "1"},
        {{1}, "x1"},
        {{0, 1}, "x1 + x2"},
        {{0, 0, 1}, "x1 + x2 + x3"},
        {{0, 0, 0, 1}, "x1 + x2 + x3 + x4"},
        {{2}, "x1^2"},
        {{1, 1}, "x1*x2"},
        {{1, 0, 1}, "x1^2 + x1*x2 + x1*x3"},
        {{1, 0, 0, 1}, "x1^2 + x1*x2 + x1*x3 + x1*x4"},
        {{0, 2}, "x1^2 + x1*x2 + x2^2"},
        {{0, 1, 1}, "x1*x2 + x1*x3 + x2*x3"},
        {{0, 1, 0, 1}, "x1^2 + 2*x1*x2 + x2^2 + x1*x3 + x2*x3 + x1*x4 + x2*x4"},
        {{0, 0, 2}, "x1^2 + x1*x2 + x2^2 + x1*x3 + x2*x3 + x3^2"},
        {{0, 0, 1, 1}, "x1*x2 + x1*x3 + x2*x3 + x1*x4 + x2*x4 + x3*x4"},
        {{3}, "x1^3"},
        {{2, 1}, "x1^2*x2"},
        {{2, 0, 1}, "x1^2*x2 + x1^2*x3"},
        {{2, 0, 0, 1}, "x1^3 + x1^2*x2 + x1^2*x3 + x1^2*x4"},
        {{1, 2}, "x1*x2^2"},
        {{1, 1, 1}, "x1*x2*x3"},
        {{1, 1, 0, 1}, "x1^2*x2 + x1*x2^2 + x1*x2*x3 + x1*x2*x4"},
        {{1, 0, 2}, "x1^3 + x1^2*x2 + x1*x2^2 + x1^2*x3 + x1*x2*x3 + x1*x3^2"},
        {{1, 0, 1, 1}, "x1^2*x2 + x1^2*x3 + x1*x2*x3 + x1^2*x4 + x1*x2*x4 + x1*x3*x4"},
        {{0, 3}, "x1^3 + x1^2*x2 + x1*x2^2 + x2^3"},
        {{0, 2, 1}, "x1^2*x2 + x1^2*x3 + x1*x2*x3 + x2^2*x3"},
        {{0, 2, 0, 1},
         "x1^2*x2 + x1*x2^2 + x1^2*x3 + x1*x2*x3 + x2^2*x3 + x1^2*x4 + x1*x2*x4 + x2^2*x4"},
        {{0, 1, 2}, "x1*x2^2 + x1*x2*x3 + x1*x3^2 + x2*x3^2"},
        {{0, 1, 1, 1}, "x1*x2*x3 + x1*x2*x4 + x1*x3*x4 + x2*x3*x4"},
        {{4}, "x1^4"},
        {{3, 1}, "x1^3*x2"},
        {{3, 0, 1}, "x1^3*x2 + x1^3*x3"},
        {{3, 0, 0, 1}, "x1^3*x2 + x1^3*x3 + x1^3*x4"},
        {{2, 2}, "x1^2*x2^2"},
        {{2, 1, 1}, "x1^2*x2*x3"},
        {{2, 1, 0, 1}, "x1^2*x2^2 + x1^2*x2*x3 + x1^2*x2*x4"},
        {{2, 0, 2}, "x1^2*x2^2 + x1^2*x2*x3 + x1^2*x3^2"},
        {{2, 0, 1, 1}, "x1^2*x2*x3 + x1^2*x2*x4 + x1^2*x3*x4"},
        {{1, 3}, "x1*x2^3"},
        {{1, 2, 1}, "x1*x2^2*x3"},
        {{1, 2, 0, 1}, "x1*x2^2*x3 + x1*x2^2*x4"},
        {{1, 1, 2}, "x1*x2*x3^2"},
        {{1, 1, 1, 1}, "x1*x2*x3*x4"},
    };
    return rows;
}

} // namespace

SuiteResult appendix_table() {
    SuiteResult r;
    r.name = "appendix-table";
    auto& rows = pinned_table();
    r.checks = (long)rows.size();

    // Drive the real command surface: parse the emitted rows back.
    cli::CommandConfig cfg;
    cfg.m = 1;
    cfg.n = 5;
    auto result = cli::cmd_table(cfg);
    std::map<Code, XPoly> emitted;
    std::istringstream lines(result.output);
    std::string line;
    while (std::getline(lines, line)) {
        auto tab = line.find('\t');
        if (tab == std::string::npos) continue;
        emitted[code_from_string(line.substr(0, tab))] = parse_poly(line.substr(tab + 1));
    }
    if (result.exit_code != 0 || emitted.size() != rows.size()) {
        r.pass = false;
        r.detail = "expected 42 rows, found " + std::to_string(emitted.size());
        return r;
    }
    long ok = 0;
    for (auto& [c, text] : rows) {
        auto it = emitted.find(c);
        if (it != emitted.end() && it->second == parse_poly(text)) {
            ++ok;
        } else if (r.pass) {
            r.pass = false;
            r.detail = "row mismatch at " + code_to_string(c);
        }
    }
    if (r.pass) r.detail = count_detail(ok, (long)rows.size(), "rows");
    return r;
}

SuiteResult fundamental_example() {
    SuiteResult r;
    r.name = "fundamental-example";
    r.checks = 1;
    XPoly f =
        parse_poly("2*x1^2*x2 + 2*x1^2*x3 + 2*x2^2*x3 + x1*x2^2 + x1*x3^2 + x2*x3^2");
    auto e = fundamental_expand(f, 3, MParam(1));
    FundamentalExpansion want;
    want[{3, 3, 2}] = 1;
    want[{3, 2, 2}] = 2;
    want[{3, 2, 1}] = -3;
    XPoly back;
    for (auto& [a, coeff] : e) back += slide_polynomial(a, MParam(1)) * coeff;
    if (e == want && back == f) {
        r.detail = "332: 1, 322: 2, 321: -3";
    } else {
        r.pass = false;
        r.detail = "coefficients differ from {332:1, 322:2, 321:-3}";
    }
    return r;
}

SuiteResult slides(int max_n, int max_degree) {
    SuiteResult r;
    r.name = "slides";
    long ok = 0, total = 0;
    auto expect_eq = [&](const XPoly& a, const XPoly& b, const std::string& what) {
        ++total;
        if (a == b) {
            ++ok;
        } else if (r.pass) {
            r.pass = false;
            r.detail = what;
        }
    };
    // pinned expansions
    {
        XPoly f422;
        for (auto& seq : std::vector<std::vector<int>>{{4, 2, 2},
                                                       {4, 1, 1},
                                                       {3, 2, 2},
                                                       {3, 1, 1},
                                                       {2, 1, 1},
                                                       {4, 2, 1},
                                                       {3, 2, 1}}) {
            Code c;
            for (int x : seq) code_set(c, x, code_at(c, x) + 1);
            f422.add_term(std::move(c), Int(1));
        }
        expect_eq(slide_polynomial({4, 2, 2}, MParam(1)), f422, "F_422 mismatch");
        expect_eq(slide_polynomial({5, 4, 3, 3, 2}, MParam(1)),
                  parse_poly("x2*x3^2*x4*x5 + x1*x3^2*x4*x5 + x1*x2*x3*x4*x5 + "
                             "x1*x2^2*x4*x5 + x1*x2^2*x3*x5 + x1*x2^2*x3*x4"),
                  "F_54332 mismatch");
        expect_eq(slide_polynomial({6, 5, 3, 3}, MParam(2)),
                  parse_poly("x3^2*x5*x6 + x1*x3*x5*x6 + x1^2*x5*x6 + x1^2*x3*x6 + "
                             "x1^2*x3*x4"),
                  "2-slide F_6533 mismatch");
    }
    // P_Z = F_a across the stated window
    for (int m = 1; m <= 2; ++m)
        for (int n = 1; n <= max_n; ++n)
            for (int len = 0; len <= max_degree; ++len)
                for (auto& a : enumerate_qseq(n, MParam(m), len)) {
                    QSeq q(a, n, MParam(m));
                    expect_eq(forest_polynomial(qseq_zigzag(q)),
                              slide_polynomial(a, MParam(m)),
                              "slide != zigzag forest polynomial at n = " +
                                  std::to_string(n));
                }
    r.checks = total;
    if (r.pass) r.detail = count_detail(ok, total, "slide identities");
    return r;
}

SuiteResult rev_mirror(int max_n) {
    SuiteResult r;
    r.name = "rev-mirror";
    MParam m(1);
    long ok = 0, total = 0;
    for (int n = 1; n <= max_n; ++n)
        for (auto& F : enumerate_class(ForestClass::FullySupported, n, m, n)) {
            ++total;
            if (rev_mirror_check(F, n)) {
                ++ok;
            } else if (r.pass) {
                r.pass = false;
                r.detail = "failure at n = " + std::to_string(n) + ", F = " +
                           code_to_string(F.code());
            }
        }
    r.checks = total;
    if (r.pass) r.detail = count_detail(ok, total, "forests");
    return r;
}

std::vector<std::string> suite_names() {
    return {"duality", "trim-theorem", "positivity", "monk",   "coinv-dims",
            "nilhecke", "volume",       "harmonic",   "epsilon", "theta"};
}

SuiteResult run_suite(const std::string& name, int n, long max_size, unsigned long seed) {
    auto size_or = [&](long dflt) { return max_size >= 0 ? max_size : dflt; };
    auto n_or = [&](int dflt) { return n > 0 ? n : dflt; };
    if (name == "duality") return duality(size_or(4), n_or(8));
    if (name == "trim-theorem") {
        SuiteResult combined;
        combined.name = "trim-theorem";
        for (int m = 1; m <= 3; ++m) {
            SuiteResult one = trim_theorem(MParam(m), size_or(m == 1 ? 5 : 4), n_or(8));
            combined.checks += one.checks;
            if (!one.pass && combined.pass) {
                combined.pass = false;
                combined.detail = one.detail;
            }
        }
        if (combined.pass)
            combined.detail = count_detail(combined.checks, combined.checks, "trims");
        return combined;
    }
    if (name == "positivity") return positivity(size_or(5), n_or(6));
    if (name == "monk") return monk(5, size_or(4), n_or(6));
    if (name == "coinv-dims") return coinv_dims(n_or(7), n_or(8));
    if (name == "nilhecke") return nilhecke(n_or(6), 100, seed);
    if (name == "volume") return volume(size_or(5), std::min<long>(size_or(4), 4), n_or(8),
                                        std::min<long>(size_or(4), 4));
    if (name == "harmonic") return harmonic(n_or(5), std::min(n_or(4), 4));
    if (name == "epsilon") return epsilon(size_or(5), n_or(5));
    if (name == "theta") return theta(n_or(6), size_or(6));
    throw std::invalid_argument("unknown suite: " + name);
}

} // namespace qsdd::checks
