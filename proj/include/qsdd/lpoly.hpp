#pragma once

#include <string>

#include "qsdd/poly.hpp"
#include "qsdd/xpoly.hpp"

namespace qsdd {

/// Polynomials in lambda_1, lambda_2, ... with exact rational
/// coefficients; the dual side of the D-pairing.
using LPoly = SparsePoly<Rat>;

/// Same grammar as the x-side with variable prefix 'l' and rational
/// coefficients "p/q", e.g. "1/2*l2^2 - 1/2*l3^2".
LPoly parse_lpoly(const std::string& text);
std::string format_lpoly(const LPoly& g);

/// d/dlambda_i.
LPoly derivative(const LPoly& g, int i);

/// Applies f(d/dlambda_1, d/dlambda_2, ...) to g.
LPoly apply_as_differential(const XPoly& f, const LPoly& g);

/// Truncation P_n: sets lambda_i = 0 for all i > n.
LPoly truncate(const LPoly& g, int n);

} // namespace qsdd
