#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qsdd {

// Exact arithmetic everywhere: integer coefficients on the x-side,
// rationals on the lambda-side.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int factorial(long n) {
    Int r = 1;
    for (long k = 2; k <= n; ++k) r *= k;
    return r;
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (long j = 1; j <= k; ++j) {
        r *= (n - k + j);
        r /= j;
    }
    return r;
}

} // namespace qsdd
