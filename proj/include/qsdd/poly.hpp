#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "qsdd/code.hpp"
#include "qsdd/numbers.hpp"

namespace qsdd {

/// Sparse polynomial with exact coefficients, terms keyed by exponent
/// codes in revlex order.  No zero coefficients are ever stored, so two
/// polynomials are equal iff their term maps are equal.
template <class C>
class SparsePoly {
public:
    using Terms = std::map<Code, C, RevlexLess>;

    SparsePoly() = default;
    explicit SparsePoly(const C& constant) {
        if (constant != 0) terms_[Code{}] = constant;
    }
    explicit SparsePoly(long constant) : SparsePoly(C(constant)) {}

    static SparsePoly monomial(Code c, C coeff = C(1)) {
        SparsePoly p;
        canonicalize(c);
        if (coeff != 0) p.terms_[std::move(c)] = std::move(coeff);
        return p;
    }

    /// x_i^e (or lambda_i^e on the rational side).
    static SparsePoly variable(int i, int e = 1) {
        if (i < 1) throw std::invalid_argument("variable index must be >= 1");
        if (e < 1) throw std::invalid_argument("exponent must be >= 1");
        Code c(i, 0);
        c[i - 1] = e;
        return monomial(std::move(c));
    }

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    C coefficient(const Code& c) const {
        auto it = terms_.find(canonical(c));
        return it == terms_.end() ? C(0) : it->second;
    }

    /// Constant term f(0,0,...).
    C constant_term() const { return coefficient(Code{}); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }

    long degree() const {  // degree of 0 is -1 by convention
        long d = -1;
        for (auto& [c, a] : terms_) d = std::max(d, code_weight(c));
        return d;
    }

    bool is_homogeneous() const {
        long d = -2;
        for (auto& [c, a] : terms_) {
            long w = code_weight(c);
            if (d == -2) d = w;
            else if (d != w) return false;
        }
        return true;
    }

    /// Largest variable index appearing; 0 for constants.
    int max_variable() const {
        int n = 0;
        for (auto& [c, a] : terms_) n = std::max(n, code_max_support(c));
        return n;
    }

    SparsePoly homogeneous_component(long d) const {
        SparsePoly r;
        for (auto& [c, a] : terms_)
            if (code_weight(c) == d) r.terms_[c] = a;
        return r;
    }

    void add_term(Code c, const C& a) {
        if (a == 0) return;
        canonicalize(c);
        auto [it, fresh] = terms_.try_emplace(std::move(c), a);
        if (!fresh) {
            it->second += a;
            if (it->second == 0) terms_.erase(it);
        }
    }

    SparsePoly& operator+=(const SparsePoly& g) {
        for (auto& [c, a] : g.terms_) add_term(c, a);
        return *this;
    }
    SparsePoly& operator-=(const SparsePoly& g) {
        for (auto& [c, a] : g.terms_) add_term(c, C(-a));
        return *this;
    }
    friend SparsePoly operator+(SparsePoly f, const SparsePoly& g) { return f += g; }
    friend SparsePoly operator-(SparsePoly f, const SparsePoly& g) { return f -= g; }
    friend SparsePoly operator-(const SparsePoly& f) {
        SparsePoly r;
        for (auto& [c, a] : f.terms_) r.terms_[c] = -a;
        return r;
    }

    friend SparsePoly operator*(const SparsePoly& f, const SparsePoly& g) {
        SparsePoly r;
        for (auto& [cf, af] : f.terms_)
            for (auto& [cg, ag] : g.terms_) {
                Code c(std::max(cf.size(), cg.size()), 0);
                for (size_t i = 0; i < cf.size(); ++i) c[i] += cf[i];
                for (size_t i = 0; i < cg.size(); ++i) c[i] += cg[i];
                r.add_term(std::move(c), af * ag);
            }
        return r;
    }
    SparsePoly& operator*=(const SparsePoly& g) { return *this = *this * g; }

    SparsePoly& operator*=(const C& a) {
        if (a == 0) { terms_.clear(); return *this; }
        for (auto& [c, v] : terms_) v *= a;
        return *this;
    }
    friend SparsePoly operator*(SparsePoly f, const C& a) { return f *= a; }
    friend SparsePoly operator*(const C& a, SparsePoly f) { return f *= a; }

    SparsePoly pow(long e) const {
        if (e < 0) throw std::invalid_argument("negative power");
        SparsePoly r(C(1));
        for (long k = 0; k < e; ++k) r *= *this;
        return r;
    }

    friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

    /// The revlex-largest term; only defined for nonzero polynomials.
    std::pair<Code, C> leading_term() const {
        if (terms_.empty()) throw std::invalid_argument("zero polynomial has no leading term");
        auto it = std::prev(terms_.end());
        return {it->first, it->second};
    }

private:
    Terms terms_;
};

namespace detail {

inline std::string coeff_to_string(const Int& a) { return a.str(); }
inline std::string coeff_to_string(const Rat& a) {
    if (denominator(a) == 1) return numerator(a).str();
    return numerator(a).str() + "/" + denominator(a).str();
}

} // namespace detail

/// Canonical text form, terms ascending in revlex: "x1^2*x2 + 2*x2^3 - x3".
template <class C>
std::string format_poly(const SparsePoly<C>& f, char prefix) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto& [c, a] : f.terms()) {
        C mag = a < 0 ? C(-a) : a;
        if (first) {
            if (a < 0) out += '-';
            first = false;
        } else {
            out += a < 0 ? " - " : " + ";
        }
        std::string coeff = detail::coeff_to_string(mag);
        bool wrote = false;
        if (coeff != "1" || c.empty()) {
            out += coeff;
            wrote = true;
        }
        for (size_t i = 0; i < c.size(); ++i) {
            if (c[i] == 0) continue;
            if (wrote) out += '*';
            out += prefix;
            out += std::to_string(i + 1);
            if (c[i] > 1) out += '^' + std::to_string(c[i]);
            wrote = true;
        }
    }
    return out;
}

/// Recursive-descent parser for the shared grammar
///   poly   := ['+'|'-'] term (('+'|'-') term)*
///   term   := [coeff '*'] factor ('*' factor)* | coeff
///   factor := <prefix> index ['^' exponent]
/// with integer coefficients on the x-side and rationals "p/q" on the
/// lambda-side; whitespace is insignificant.
template <class C>
class PolyParser {
public:
    PolyParser(const std::string& text, char prefix, bool rational)
        : s_(text), prefix_(prefix), rational_(rational) {}

    SparsePoly<C> parse() {
        SparsePoly<C> r = parse_poly();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return r;
    }

private:
    const std::string& s_;
    size_t pos_ = 0;
    char prefix_;
    bool rational_;

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("parse error at position " + std::to_string(pos_) + ": " + msg);
    }
    void skip() {
        while (pos_ < s_.size() && isspace((unsigned char)s_[pos_])) ++pos_;
    }
    bool eat(char ch) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == ch) { ++pos_; return true; }
        return false;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Int parse_nat() {
        skip();
        if (pos_ >= s_.size() || !isdigit((unsigned char)s_[pos_])) fail("expected integer");
        Int v = 0;
        while (pos_ < s_.size() && isdigit((unsigned char)s_[pos_]))
            v = v * 10 + (s_[pos_++] - '0');
        return v;
    }

    C parse_coeff() {
        Int p = parse_nat();
        if (rational_ && eat('/')) {
            Int q = parse_nat();
            if (q == 0) fail("zero denominator");
            return C(Rat(p, q));
        }
        return C(p);
    }

    long parse_small(const char* what) {
        Int v = parse_nat();
        if (v > 1000000) fail(std::string(what) + " too large");
        return (long)v;
    }

    // factor := prefix index ['^' exponent]; appends into the code.
    void parse_factor(Code& c) {
        skip();
        if (peek() != prefix_) fail(std::string("expected variable '") + prefix_ + "'");
        ++pos_;
        long idx = parse_small("variable index");
        if (idx < 1) fail("variable index must be >= 1");
        long e = 1;
        if (eat('^')) {
            e = parse_small("exponent");
            if (e < 1) fail("exponent must be >= 1");
        }
        code_set(c, (int)idx, code_at(c, (int)idx) + (int)e);
    }

    SparsePoly<C> parse_term() {
        C coeff(1);
        Code c;
        bool have_factor = false;
        skip();
        if (pos_ < s_.size() && isdigit((unsigned char)s_[pos_])) {
            coeff = parse_coeff();
            if (!eat('*')) {
                return SparsePoly<C>::monomial(Code{}, coeff);  // bare constant
            }
        }
        parse_factor(c);
        have_factor = true;
        while (true) {
            size_t save = pos_;
            if (!eat('*')) break;
            if (peek() != prefix_) { pos_ = save; break; }
            parse_factor(c);
        }
        (void)have_factor;
        return SparsePoly<C>::monomial(std::move(c), coeff);
    }

    SparsePoly<C> parse_poly() {
        SparsePoly<C> r;
        skip();
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        SparsePoly<C> t = parse_term();
        r += neg ? -t : t;
        while (true) {
            skip();
            if (pos_ >= s_.size()) break;
            if (eat('-')) neg = true;
            else if (eat('+')) neg = false;
            else break;
            t = parse_term();
            r += neg ? -t : t;
        }
        return r;
    }
};

} // namespace qsdd
