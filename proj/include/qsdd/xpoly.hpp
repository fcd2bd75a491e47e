#pragma once

#include <string>

#include "qsdd/poly.hpp"

namespace qsdd {

/// Polynomials in x_1, x_2, ... with arbitrary-precision integer
/// coefficients: the ring Poly, with Poly_n the subring on x_1..x_n.
using XPoly = SparsePoly<Int>;

/// Parses the grammar from the module interface ("2*x1^2*x2 + x3").
XPoly parse_poly(const std::string& text);

/// Canonical text: terms ascending in revlex, '*' products, '^' powers.
std::string format_poly(const XPoly& f);

/// {"terms":[{"coeff":"<decimal>","code":[...]}]}
std::string xpoly_to_json(const XPoly& f);
XPoly xpoly_from_json(const std::string& json);

} // namespace qsdd
