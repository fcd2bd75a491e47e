#pragma once

#include <map>

#include "qsdd/forest.hpp"
#include "qsdd/xpoly.hpp"

namespace qsdd {

struct SizeRevlexLess {
    bool operator()(const Code& a, const Code& b) const { return size_revlex_less(a, b); }
};

/// Integer combination of forest polynomials, keyed by forest codes.
class Expansion {
public:
    using Terms = std::map<Code, Int, SizeRevlexLess>;

    explicit Expansion(MParam m) : m_(m) {}

    MParam m() const { return m_; }
    const Terms& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    void add(Code forest_code, const Int& coeff) {
        if (coeff == 0) return;
        canonicalize(forest_code);
        auto [it, fresh] = terms_.try_emplace(std::move(forest_code), coeff);
        if (!fresh) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Int coefficient(const Code& c) const {
        auto it = terms_.find(canonical(c));
        return it == terms_.end() ? Int(0) : it->second;
    }

    /// Sum coeff(F) * P_F, exactly.
    XPoly reconstruct() const;

    std::string to_text() const;
    std::string to_json() const;

    friend bool operator==(const Expansion& a, const Expansion& b) {
        return a.m_ == b.m_ && a.terms_ == b.terms_;
    }

private:
    MParam m_;
    Terms terms_;
};

/// Memoized forest polynomials; the expansion routines hit the same
/// forests repeatedly.
class ForestPolyTable {
public:
    explicit ForestPolyTable(MParam m) : m_(m) {}
    MParam m() const { return m_; }
    const XPoly& get(const Code& c);

private:
    MParam m_;
    std::map<Code, XPoly> cache_;
};

/// The m-forest polynomial: generating function of compatible fillings
/// kappa of internal(F), enumerated by depth-first search in prefix
/// order.  Homogeneous of degree |F| with revlex leading term x^{c(F)}.
XPoly forest_polynomial(const IndexedForest& F);

/// Composite trimming operator T_F applied to f; independent of the
/// word chosen for F.
XPoly trim_composite(const XPoly& f, const IndexedForest& F);

/// Expands f in the forest polynomial basis by repeatedly stripping the
/// revlex-leading term.  Exact: reconstruct() returns f.
Expansion forest_expand(const XPoly& f, MParam m, ForestPolyTable* table = nullptr);

/// Same expansion computed from the coefficient formula: the
/// coefficient of F is the constant term of T_F f.  Kept as an
/// independent route for cross-checking.
Expansion forest_expand_by_trims(const XPoly& f, MParam m);

/// A sequence indexing a fundamental m-quasisymmetric polynomial:
/// weakly decreasing, n >= a_1 >= n-m+1, consecutive gaps at most m.
class QSeq {
public:
    QSeq(std::vector<int> entries, int n, MParam m);

    const std::vector<int>& entries() const { return entries_; }
    int n() const { return n_; }
    MParam m() const { return m_; }
    size_t length() const { return entries_.size(); }

private:
    std::vector<int> entries_;
    int n_;
    MParam m_;
};

/// Generating function of m-compatible sequences of a (entries >= 1).
XPoly slide_polynomial(const std::vector<int>& a, MParam m);

/// All sequences in QSeq^m_n of the given length, descending lex order.
std::vector<std::vector<int>> enumerate_qseq(int n, MParam m, int length);

/// The bijection QSeq^m_n -> Zigzag^m_n, a |-> a_k ... a_1.
IndexedForest qseq_zigzag(const QSeq& a);
QSeq zigzag_qseq(const IndexedForest& Z, int n);

/// Coefficients of a homogeneous (or degree-split) quasisymmetric f in
/// the fundamental basis, keyed by sequences in descending lex order.
using FundamentalExpansion = std::map<std::vector<int>, Int, std::greater<std::vector<int>>>;
FundamentalExpansion fundamental_expand(const XPoly& f, int n, MParam m);

/// Path-length vector d(P) of the L/R assignment encoded by mask (bit v
/// set means node v picks its rightmost child in the binarized forest).
Code path_lengths(const ForestShape& shape, unsigned long mask);

/// The sign epsilon_F(c): +-1 when some L/R assignment on the binarized
/// forest has path-length vector c, else 0.  Enumerates all 2^|F|
/// assignments; exponential, fine at the scale this library targets.
int epsilon_sign(const IndexedForest& F, const Code& c);

/// x^c = sum_G epsilon_G(c) P_G over forests G with |G| = |c|.
Expansion monomial_to_forest(const Code& c, MParam m);

} // namespace qsdd
