#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qsdd/xpoly.hpp"

using namespace qsdd;

namespace {

XPoly random_poly(std::mt19937_64& rng, int nvars, int maxdeg, int nterms) {
    XPoly f;
    for (int t = 0; t < nterms; ++t) {
        Code c;
        int d = (int)(rng() % (maxdeg + 1));
        for (int j = 0; j < d; ++j) {
            int v = 1 + (int)(rng() % nvars);
            code_set(c, v, code_at(c, v) + 1);
        }
        long a = (long)(rng() % 19) - 9;
        f.add_term(std::move(c), Int(a));
    }
    return f;
}

} // namespace

TEST_CASE("parser denotes codes directly") {
    XPoly f = parse_poly("x1^2*x2");
    CHECK(f.term_count() == 1);
    CHECK(f.coefficient(Code{2, 1}) == 1);

    CHECK(parse_poly("0").is_zero());
    CHECK(parse_poly("  0 ").is_zero());
    CHECK(parse_poly("3").constant_term() == 3);
    CHECK(parse_poly("x1 - x1").is_zero());

    XPoly g = parse_poly("2*x1^2*x2 + 2*x1^2*x3 + 2*x2^2*x3 + x1*x2^2 + x1*x3^2 + x2*x3^2");
    CHECK(g.term_count() == 6);
    CHECK(g.coefficient(Code{2, 1}) == 2);
    CHECK(g.coefficient(Code{2, 0, 1}) == 2);
    CHECK(g.coefficient(Code{0, 2, 1}) == 2);
    CHECK(g.coefficient(Code{1, 2}) == 1);
    CHECK(g.coefficient(Code{1, 0, 2}) == 1);
    CHECK(g.coefficient(Code{0, 1, 2}) == 1);
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_poly("x0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("x1^0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("x1 +"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("y1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly(""), std::invalid_argument);
}

TEST_CASE("format/parse round trips") {
    std::mt19937_64 rng(20240601);
    for (int t = 0; t < 200; ++t) {
        XPoly f = random_poly(rng, 5, 5, 6);
        CHECK(parse_poly(format_poly(f)) == f);
    }
    // format(parse(t)) is canonical
    CHECK(format_poly(parse_poly("x2 + x1")) == "x1 + x2");
    CHECK(format_poly(parse_poly("0")) == "0");
    CHECK(format_poly(parse_poly("1*x1^1")) == "x1");
    CHECK(format_poly(parse_poly("x3*x1")) == "x1*x3");
}

TEST_CASE("multiplication: binomial square and identity") {
    XPoly s = parse_poly("x1 + x2");
    CHECK(s * s == parse_poly("x1^2 + 2*x1*x2 + x2^2"));
    XPoly one(1);
    std::mt19937_64 rng(7);
    for (int t = 0; t < 20; ++t) {
        XPoly f = random_poly(rng, 4, 4, 5);
        CHECK(f * one == f);
    }
}

TEST_CASE("product of two basis rows, checked by hand") {
    XPoly p02 = parse_poly("x1^2 + x1*x2 + x2^2");
    XPoly p11 = parse_poly("x1*x2");
    CHECK(p02 * p11 == parse_poly("x1^3*x2 + x1^2*x2^2 + x1*x2^3"));
}

TEST_CASE("commutative ring axioms on random instances") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 60; ++t) {
        XPoly f = random_poly(rng, 4, 3, 4);
        XPoly g = random_poly(rng, 4, 3, 4);
        XPoly h = random_poly(rng, 4, 3, 4);
        CHECK(f + g == g + f);
        CHECK(f * g == g * f);
        CHECK((f + g) + h == f + (g + h));
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK(f - f == XPoly());
    }
}

TEST_CASE("json round trip") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 40; ++t) {
        XPoly f = random_poly(rng, 5, 4, 5);
        CHECK(xpoly_from_json(xpoly_to_json(f)) == f);
    }
    CHECK(xpoly_to_json(XPoly()) == R"({"terms":[]})");
}

TEST_CASE("revlex order of codes") {
    CHECK(revlex_less(Code{2}, Code{0, 1}));        // position 2 differs, 1 > 0
    CHECK(revlex_less(Code{1, 1}, Code{0, 2}));
    CHECK(!revlex_less(Code{0, 2, 1}, Code{1, 2}));
    CHECK(revlex_less(Code{}, Code{1}));
}
