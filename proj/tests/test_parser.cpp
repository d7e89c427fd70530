#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fmethod/parser.hpp"

using namespace fmethod;

namespace {

const std::vector<std::string> kVars = {"x", "y"};
const std::vector<std::string> kParams = {"k"};

WeylElement term(const ExpVec& z, const ExpVec& d, const BigRat& c,
                 const std::vector<std::string>& params = {}) {
    WeylElement t(kVars, params);
    t.add_term(z, d, FiberMatrix::scalar(RatFunc::constant(params, c)));
    return t;
}

WeylElement random_weyl(std::mt19937_64& rng) {
    WeylElement t(kVars, kParams);
    size_t nt = 1 + rng() % 3;
    for (size_t k = 0; k < nt; ++k) {
        ExpVec z = {static_cast<uint32_t>(rng() % 3), static_cast<uint32_t>(rng() % 3)};
        ExpVec d = {static_cast<uint32_t>(rng() % 3), static_cast<uint32_t>(rng() % 3)};
        long c = static_cast<long>(rng() % 9) - 4;
        if (c == 0) c = 3;
        t.add_term(z, d, FiberMatrix::scalar(RatFunc::constant(kParams, BigRat(c))));
    }
    return t;
}

} // namespace

TEST_CASE("positions, derivatives, powers and rational literals") {
    WeylElement got = parse_weyl("x*dx + 3*dy^2 - 1/2", kVars);
    WeylElement want = term({1, 0}, {1, 0}, BigRat(1)) + term({0, 0}, {0, 2}, BigRat(3)) +
                       term({0, 0}, {0, 0}, BigRat(-1, 2));
    CHECK(got == want);
}

TEST_CASE("products are normal ordered while parsing") {
    // dx * x = x dx + 1.
    WeylElement got = parse_weyl("dx*x", kVars);
    WeylElement want = term({1, 0}, {1, 0}, BigRat(1)) + term({0, 0}, {0, 0}, BigRat(1));
    CHECK(got == want);

    // Powers of non-commuting products expand correctly too.
    CHECK(parse_weyl("(x*dx)^2", kVars) ==
          term({2, 0}, {2, 0}, BigRat(1)) + term({1, 0}, {1, 0}, BigRat(1)));
}

TEST_CASE("parameters appear as symbolic coefficients") {
    WeylElement got = parse_weyl("k*dx - x", kVars, kParams);
    WeylElement want(kVars, kParams);
    want.add_term({0, 0}, {1, 0},
                  FiberMatrix::scalar(RatFunc::variable(kParams, 0)));
    want.add_term({1, 0}, {0, 0},
                  FiberMatrix::scalar(RatFunc::constant(kParams, BigRat(-1))));
    CHECK(got == want);
}

TEST_CASE("parentheses, unary minus, whitespace") {
    CHECK(parse_weyl("-(x - y)*dx", kVars) ==
          term({1, 0}, {1, 0}, BigRat(-1)) + term({0, 1}, {1, 0}, BigRat(1)));
    CHECK(parse_weyl("  x  *  dx  ", kVars) == term({1, 0}, {1, 0}, BigRat(1)));
    CHECK(parse_weyl("2^3*x", kVars) == term({1, 0}, {0, 0}, BigRat(8)));
}

TEST_CASE("errors carry a 1-based position") {
    CHECK_THROWS_WITH_AS(parse_weyl("x + dz", kVars),
                         "unknown symbol 'dz' at position 5", ParseError);
    CHECK_THROWS_AS(parse_weyl("", kVars), ParseError);
    CHECK_THROWS_AS(parse_weyl("x + ", kVars), ParseError);
    CHECK_THROWS_AS(parse_weyl("(x", kVars), ParseError);
    CHECK_THROWS_AS(parse_weyl("x^", kVars), ParseError);
    CHECK_THROWS_AS(parse_weyl("x y", kVars), ParseError); // implicit products rejected
    CHECK_THROWS_AS(parse_weyl("k*dx", kVars), ParseError); // k unknown without params
}

TEST_CASE("rendered elements parse back to themselves") {
    std::mt19937_64 rng(71);
    for (int i = 0; i < 80; ++i) {
        WeylElement t = random_weyl(rng);
        CHECK(parse_weyl(t.to_string(), kVars, kParams) == t);
    }
}
