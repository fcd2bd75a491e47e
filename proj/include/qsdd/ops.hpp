#pragma once

#include <functional>

#include "qsdd/xpoly.hpp"

namespace qsdd {

/// The color count m >= 1 of the m-quasisymmetric theory; m = 1 is the
/// plain quasisymmetric case.
class MParam {
public:
    explicit MParam(int m = 1) : m_(m) {
        if (m < 1) throw std::invalid_argument("m must be >= 1");
    }
    int value() const { return m_; }
    friend bool operator==(MParam a, MParam b) { return a.m_ == b.m_; }

private:
    int m_;
};

/// Bergeron--Sottile map R^m_i: sets x_i,...,x_{i+m-1} to zero and
/// shifts x_j -> x_{j-m} for j >= i+m.  A ring homomorphism.
XPoly bergeron_sottile(const XPoly& f, int i, MParam m = MParam(1));

/// Long-range divided difference (f - swap_{i,i+m} f)/(x_i - x_{i+m}),
/// computed termwise so the division is exact by construction.
XPoly divided_difference(const XPoly& f, int i, MParam m = MParam(1));

/// Trimming operator T^m_i = (R^m_{i+1} f - R^m_i f)/x_i, the
/// quasisymmetric divided difference.  Aborts with std::logic_error if
/// the division by x_i is not exact (an arithmetic bug, never input).
XPoly trim(const XPoly& f, int i, MParam m = MParam(1));

/// The three defining expressions for T^m_i; they agree on all inputs
/// and the redundancy is kept for property tests.
enum class TrimRoute { RatioOfR, RThenDiff, RNextThenDiff };
XPoly trim_via(const XPoly& f, int i, MParam m, TrimRoute route);

/// Hivert's quasisymmetrizing action of s_i (m = 1 only); an involution.
XPoly hivert_sigma(const XPoly& f, int i);

/// True iff T^m_i f = 0 for 1 <= i <= n-m.  Rejects polynomials using a
/// variable index beyond n.
bool is_quasisymmetric(const XPoly& f, int n, MParam m = MParam(1));

/// Exponent code of the revlex-leading term of a nonzero polynomial.
Code revlex_leading(const XPoly& f);

/// x_i -> x_{perm(i)} for an injective index map.
XPoly rename_variables(const XPoly& f, const std::function<int(int)>& perm);

/// rev_n: x_i -> x_{n+1-i} on Poly_n.
XPoly reverse_variables(const XPoly& f, int n);

/// Exact division by x_i; std::logic_error if any term lacks x_i.
XPoly divide_by_variable(const XPoly& f, int i);

} // namespace qsdd
