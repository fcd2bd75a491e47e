#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qsdd/numbers.hpp"

namespace qsdd {

/// A finitely supported sequence of nonnegative integers, 1-indexed.
/// Canonical form has no trailing zeros.  Codes identify both indexed
/// forests and exponent vectors of monomials.
using Code = std::vector<int>;

inline void canonicalize(Code& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

inline Code canonical(Code c) {
    canonicalize(c);
    return c;
}

/// Entry at 1-indexed position i (0 beyond the stored length).
inline int code_at(const Code& c, int i) {
    return (i >= 1 && i <= (int)c.size()) ? c[i - 1] : 0;
}

inline void code_set(Code& c, int i, int v) {
    if ((int)c.size() < i) c.resize(i, 0);
    c[i - 1] = v;
}

/// Sum of entries (the degree of x^c, the size of the forest).
inline long code_weight(const Code& c) {
    long s = 0;
    for (int e : c) s += e;
    return s;
}

/// Largest position with a nonzero entry; 0 for the empty code.
inline int code_max_support(const Code& c) {
    return (int)c.size();
}

/// Smallest position with a nonzero entry; 0 for the empty code.
inline int code_min_support(const Code& c) {
    for (int i = 0; i < (int)c.size(); ++i)
        if (c[i] != 0) return i + 1;
    return 0;
}

/// c! = prod c_i!
inline Int code_factorial(const Code& c) {
    Int r = 1;
    for (int e : c) r *= factorial(e);
    return r;
}

/// The revlex order: c > d iff at the largest position where they
/// differ, c has the larger entry.
inline bool revlex_less(const Code& a, const Code& b) {
    size_t n = std::max(a.size(), b.size());
    for (size_t p = n; p-- > 0;) {
        int av = p < a.size() ? a[p] : 0;
        int bv = p < b.size() ? b[p] : 0;
        if (av != bv) return av < bv;
    }
    return false;
}

struct RevlexLess {
    bool operator()(const Code& a, const Code& b) const { return revlex_less(a, b); }
};

/// (size, revlex) order used for listing forests.
inline bool size_revlex_less(const Code& a, const Code& b) {
    long wa = code_weight(a), wb = code_weight(b);
    if (wa != wb) return wa < wb;
    return revlex_less(a, b);
}

/// "[c1,c2,...]" with no padding; the canonical serialized form.
inline std::string code_to_string(const Code& c) {
    std::string s = "[";
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(c[i]);
    }
    s += ']';
    return s;
}

/// "(c1,...,cn)" padded with zeros to width n (table notation).
inline std::string code_to_string_padded(const Code& c, int n) {
    std::string s = "(";
    int w = std::max<int>(n, (int)c.size());
    for (int i = 1; i <= w; ++i) {
        if (i > 1) s += ',';
        s += std::to_string(code_at(c, i));
    }
    s += ')';
    return s;
}

/// Parses "[c1,c2,...]" or "(c1,c2,...)"; entries must be nonnegative.
inline Code code_from_string(const std::string& s) {
    Code c;
    size_t i = 0;
    auto skip = [&] { while (i < s.size() && isspace((unsigned char)s[i])) ++i; };
    skip();
    char close = 0;
    if (i < s.size() && (s[i] == '[' || s[i] == '(')) {
        close = s[i] == '[' ? ']' : ')';
        ++i;
    }
    skip();
    while (i < s.size() && s[i] != close) {
        if (!isdigit((unsigned char)s[i]))
            throw std::invalid_argument("bad code entry at position " + std::to_string(i));
        int v = 0;
        while (i < s.size() && isdigit((unsigned char)s[i])) v = v * 10 + (s[i++] - '0');
        c.push_back(v);
        skip();
        if (i < s.size() && s[i] == ',') { ++i; skip(); }
    }
    if (close) {
        if (i >= s.size() || s[i] != close)
            throw std::invalid_argument("unterminated code literal");
        ++i;
        skip();
        if (i != s.size())
            throw std::invalid_argument("trailing characters after code literal");
    }
    canonicalize(c);
    return c;
}

} // namespace qsdd
