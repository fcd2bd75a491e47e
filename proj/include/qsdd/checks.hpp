#pragma once

#include <string>
#include <vector>

#include "qsdd/coinv.hpp"
#include "qsdd/harmonic.hpp"

namespace qsdd::checks {

struct SuiteResult {
    std::string name;
    bool pass = true;
    long checks = 0;
    std::string detail;  // "N/N pairs" style summary, or the first counterexample
    std::string log;     // per-relation lines for the nilhecke suite

    std::string line() const {
        std::string s = name + ": " + (pass ? "PASS" : "FAIL") + " " + detail;
        return s;
    }
};

/// ct T_F P_G = delta_{F,G} over all F, G with the given size and flag
/// bounds (m = 1).
SuiteResult duality(long max_size = 4, int flag_window = 8);

/// T^m_i P_F = [i in terminal flags] P_{F/i} for every F within bounds
/// and every i up to flag_window + m + 1.
SuiteResult trim_theorem(MParam m, long max_size, int flag_window = 8);

/// Products P_F P_G expand with nonnegative coefficients (m = 1).
SuiteResult positivity(long size_budget = 5, int flag_window = 6);

/// Monk products P_underline(i) P_F expand with coefficients in {0,1}.
SuiteResult monk(int max_i = 5, long max_size = 4, int flag_window = 6);

/// Coinvariant dimensions: Catalan numbers for m = 1 (n <= 7), Raney
/// numbers for m in {2,3} (n <= 8), by basis enumeration.
SuiteResult coinv_dims(int max_n_m1 = 7, int max_n_higher = 8);

/// Nil-Hecke relations on seeded random polynomials, m in {1,2}.
SuiteResult nilhecke(int n = 6, int trials = 100, unsigned long seed = 20240101);

/// <P_G, V_F> = delta_{F,G} over all forests within bounds, m in {1,2}.
SuiteResult volume_duality(long max_size = 4, int flag_window = 8);

/// Recursive integration equals the signed path expansion.
SuiteResult volume_methods(long max_size_m1 = 5, long max_size_m2 = 4, int flag_window = 8);

/// The volume of the running example matches its displayed product form.
SuiteResult worked_volume();

/// Union of the three volume checks above (the CLI suite).
SuiteResult volume(long max_size_m1 = 5, long max_size_m2 = 4, int flag_window = 8,
                   long duality_size = 4);

/// Volumes are harmonic (n <= max_n, m in {1,2}); derivatives of the
/// top-degree volumes span the harmonics (m = 1, n <= span_n).
SuiteResult harmonic(int max_n = 5, int span_n = 4);

/// x^c = sum_G epsilon_G(c) P_G for all codes with |c| <= max_weight on
/// [window], including the three-term signed example at c = (0,2,1).
SuiteResult epsilon(long max_weight = 5, int window = 5);

/// The support factorization is a bijection onto its stated image.
SuiteResult theta(int max_n = 6, long max_size = 6);

/// Appendix-style table reproduction: the n = 5, m = 1 table has
/// exactly 42 rows equal to the pinned code -> polynomial pairs.
SuiteResult appendix_table();

/// The worked fundamental expansion with coefficients {332:1, 322:2, 321:-3}.
SuiteResult fundamental_example();

/// Pinned slide expansions and the slide = zigzag forest polynomial sweep.
SuiteResult slides(int max_n = 6, int max_degree = 5);

/// rev_n(P_F) = (-1)^{|F|} P_{mir(F)} mod the ideal, exhaustively.
SuiteResult rev_mirror(int max_n = 5);

/// The named CLI suites in order.
std::vector<std::string> suite_names();

/// Runs one named suite (as listed by suite_names); throws on unknown names.
SuiteResult run_suite(const std::string& name, int n, long max_size, unsigned long seed);

} // namespace qsdd::checks
