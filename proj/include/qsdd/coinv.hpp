#pragma once

#include <random>
#include <string>

#include "qsdd/basis.hpp"

namespace qsdd {

/// The ideal I_{k,n} of Poly_n generated by homogeneous m-quasisymmetric
/// polynomials of degree at least k; k = 1 is the full coinvariant ideal.
struct IdealSpec {
    int n;
    MParam m = MParam(1);
    int k = 1;
};

/// Membership via the forest basis: expand f and test that every forest
/// in the support factors with a zigzag part of size >= k.  No Groebner
/// machinery is involved.
bool ideal_membership(const XPoly& f, const IdealSpec& spec);

/// The canonical representative of f modulo I_{1,n}: the part of its
/// forest expansion supported on Supp^m_n.
Expansion coinv_reduce(const XPoly& f, int n, MParam m = MParam(1));

/// Checks rev_n(P_F) = (-1)^{|F|} P_{mirror(F)} modulo the ideal (m=1).
bool rev_mirror_check(const IndexedForest& F, int n);

struct RelationReport {
    std::string name;
    bool pass = true;
    long checks = 0;
    std::string counterexample;  // empty when pass
};

struct VerificationReport {
    std::vector<RelationReport> relations;
    bool all_pass() const {
        for (auto& r : relations)
            if (!r.pass) return false;
        return true;
    }
    std::string to_text() const;
    std::string to_json() const;
};

/// Evaluates the defining relations of the algebra generated by R_1,
/// T^m_i and multiplication by x_i on seeded random polynomials, plus
/// the full-trim module identity T_H(gh) = R_1^{m|H|}(g) T_H(h).
VerificationReport verify_nilhecke(int n, MParam m, int trials, unsigned long seed);

/// Deterministic random polynomial: up to `terms` monomials of degree
/// <= maxdeg in x_1..x_nvars, coefficients in [-9, 9].
XPoly random_xpoly(std::mt19937_64& rng, int nvars, int maxdeg, int terms);

/// Random integer combination of m-slide polynomials: quasisymmetric in
/// QSym^m_n by construction.
XPoly random_quasisymmetric(std::mt19937_64& rng, int n, MParam m, int maxdeg);

} // namespace qsdd
