#pragma once

#include <map>

#include "qsdd/basis.hpp"
#include "qsdd/lpoly.hpp"

namespace qsdd {

/// D-pairing <x^c, lambda^d> = delta_{c,d} c!, extended bilinearly.
Rat d_pairing(const XPoly& f, const LPoly& g);

/// Adjoint of the Bergeron--Sottile map under the D-pairing: shifts
/// lambda_j -> lambda_{j+m} for j >= i, opening m empty slots at i.
LPoly adjoint_r(const LPoly& g, int i, MParam m = MParam(1));

/// Adjoint of trimming: substitutes z for the lambda_i..lambda_{i+m}
/// block and integrates z from lambda_{i+m} to lambda_i, exactly.
LPoly adjoint_t(const LPoly& g, int i, MParam m = MParam(1));

enum class VolumeMethod { Recursive, Paths };

/// Volume of the forest polytope as a polynomial in lambda: either by
/// recursive exact integration over terminal nodes, or from the signed
/// path expansion sum_c epsilon_F(c) lambda^c / c!.
LPoly volume_polynomial(const IndexedForest& F,
                        VolumeMethod method = VolumeMethod::Recursive);

/// {V_F : F in Supp^m_n}, ordered like enumerate_class.
std::vector<LPoly> harmonic_basis(int n, MParam m);

/// True iff every positive-degree fundamental generator of QSym^m_n
/// annihilates g as a differential operator.
bool is_harmonic(const LPoly& g, int n, MParam m = MParam(1));

using DifferenceCoeffs = std::map<Code, Rat, SizeRevlexLess>;

/// Coefficients of g in the basis prod_i (lambda_i - lambda_{i+m})^{c_i};
/// throws (naming the residual term) when g is not in that subring.
DifferenceCoeffs lambda_difference_coeffs(const LPoly& g, MParam m = MParam(1));

/// prod_i (lambda_i - lambda_{i+m})^{c_i}.
LPoly lambda_difference_product(const Code& c, MParam m = MParam(1));

} // namespace qsdd
