// Acceptance suite: runs every gate criterion at its stated bounds and
// prints one PASS/FAIL line per criterion.  Exit code 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <vector>

#include "qsdd/checks.hpp"

using namespace qsdd;

namespace {

struct Criterion {
    const char* label;
    checks::SuiteResult (*run)();
};

checks::SuiteResult merged(const char* name, std::vector<checks::SuiteResult> parts) {
    checks::SuiteResult r;
    r.name = name;
    for (auto& p : parts) {
        r.checks += p.checks;
        if (!p.pass && r.pass) {
            r.pass = false;
            r.detail = p.name + ": " + p.detail;
        }
    }
    if (r.pass) r.detail = std::to_string(r.checks) + " checks";
    return r;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"1 Appendix table reproduction (n=5, m=1, 42 rows)",
         [] { return checks::appendix_table(); }},
        {"2 Duality ct T_F P_G = delta (|F|,|G| <= 4, flags <= 8, m=1)",
         [] { return checks::duality(4, 8); }},
        {"3 Trim theorem (m=1 size<=5; m=2,3 size<=4; flags <= 8)",
         [] {
             return merged("trim-theorem",
                           {checks::trim_theorem(MParam(1), 5, 8),
                            checks::trim_theorem(MParam(2), 4, 8),
                            checks::trim_theorem(MParam(3), 4, 8)});
         }},
        {"4 Fundamental expansion example {332:1, 322:2, 321:-3}",
         [] { return checks::fundamental_example(); }},
        {"5 Coinvariant dimensions (Catalan n<=7; Raney m=2,3 n<=8)",
         [] { return checks::coinv_dims(7, 8); }},
        {"6 Positivity of products (|F|+|G| <= 5) and Monk multiplicity-freeness",
         [] {
             return merged("positivity+monk",
                           {checks::positivity(5, 6), checks::monk(5, 4, 6)});
         }},
        {"7 Volume duality <P_G, V_F> = delta (|F|,|G| <= 4, m=1,2)",
         [] { return checks::volume_duality(4, 8); }},
        {"8 Volume method equivalence (m=1 size<=5; m=2 size<=4)",
         [] { return checks::volume_methods(5, 4, 8); }},
        {"9 Worked volume of the size-6 running example",
         [] { return checks::worked_volume(); }},
        {"10 Harmonicity (n<=5, m=1,2) and derivative spanning (n<=4, m=1)",
         [] { return checks::harmonic(5, 4); }},
        {"11 Nil-Hecke relations on 100 seeded random polynomials (n=6, m=1,2)",
         [] { return checks::nilhecke(6, 100, 20240101); }},
        {"12 Monomial <-> forest expansions (|c| <= 5, incl. the (0,2,1) case)",
         [] { return checks::epsilon(5, 5); }},
        {"13 Slide expansions (F_422, F_54332, F^2_6533) and slide = zigzag sweep",
         [] { return checks::slides(6, 5); }},
        {"14 rev/mirror involution over Supp_n (n <= 5)",
         [] { return checks::rev_mirror(5); }},
    };

    int failures = 0;
    for (auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        checks::SuiteResult r = c.run();
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                          .count();
        if (!r.pass) ++failures;
        std::printf("%s criterion %s: %s  [%.2fs]\n", r.pass ? "PASS" : "FAIL", c.label,
                    r.detail.c_str(), secs);
        std::fflush(stdout);
    }
    if (failures) {
        std::printf("%d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}
