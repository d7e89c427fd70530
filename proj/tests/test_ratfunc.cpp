#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fmethod/ratfunc.hpp"
#include "fmethod/util.hpp"

using namespace fmethod;

namespace {

const std::vector<std::string> kVars = {"s", "t"};

MPoly random_poly(std::mt19937_64& rng, size_t max_terms = 4, uint32_t max_exp = 2) {
    MPoly p(kVars);
    size_t nt = rng() % (max_terms + 1);
    for (size_t i = 0; i < nt; ++i) {
        ExpVec e(kVars.size());
        for (auto& x : e) x = static_cast<uint32_t>(rng() % (max_exp + 1));
        long num = static_cast<long>(rng() % 11) - 5;
        p.set_coeff(e, p.coeff(e) + BigRat(num));
    }
    return p;
}

// Denominators are kept sparse and low degree: chained sums multiply them
// together, and the axiom checks would otherwise spend their time in huge
// dense gcds instead of exercising the arithmetic.
RatFunc random_ratfunc(std::mt19937_64& rng) {
    MPoly num = random_poly(rng);
    MPoly den = random_poly(rng, 2, 1);
    while (den.is_zero()) den = random_poly(rng, 2, 1);
    return RatFunc(num, den);
}

} // namespace

TEST_CASE("construction cancels common factors and normalizes the denominator") {
    MPoly s = MPoly::variable(kVars, 0), t = MPoly::variable(kVars, 1);
    MPoly one = MPoly::constant(kVars, BigRat(1));

    RatFunc r((s * s - t * t), (s - t)); // common factor s - t
    CHECK(r.num() == s + t);
    CHECK(r.den() == one);
    CHECK(r.is_polynomial());

    // Denominator is normalized monic, so equal fractions compare equal
    // structurally.
    MPoly m2 = s - t;
    m2.scale(BigRat(-2));
    MPoly n2 = one;
    n2.scale(BigRat(-2));
    CHECK(RatFunc(m2, n2) == RatFunc(s - t, one));

    CHECK_THROWS_AS(RatFunc(s, MPoly(kVars)), DomainError);
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(29);
    RatFunc zero = RatFunc::constant(kVars, BigRat(0));
    RatFunc one = RatFunc::constant(kVars, BigRat(1));
    for (int i = 0; i < 60; ++i) {
        RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng), c = random_ratfunc(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + zero == a);
        CHECK(a * one == a);
        CHECK(a - a == zero);
        if (!a.is_zero()) CHECK(a / a == one);
    }
}

TEST_CASE("division by zero is a domain error") {
    RatFunc zero = RatFunc::constant(kVars, BigRat(0));
    RatFunc one = RatFunc::constant(kVars, BigRat(1));
    CHECK_THROWS_AS(one / zero, DomainError);
}

TEST_CASE("evaluation matches num/den and reports poles") {
    MPoly s = MPoly::variable(kVars, 0), t = MPoly::variable(kVars, 1);
    RatFunc r(s + t, s - t);
    std::map<std::string, BigRat> at = {{"s", BigRat(3)}, {"t", BigRat(1)}};
    CHECK(r.eval(at) == BigRat(2));
    std::map<std::string, BigRat> pole = {{"s", BigRat(1)}, {"t", BigRat(1)}};
    CHECK_THROWS_AS(r.eval(pole), PoleError);
}

TEST_CASE("evaluation is a field homomorphism away from poles") {
    std::mt19937_64 rng(31);
    std::map<std::string, BigRat> at = {{"s", BigRat(5)}, {"t", BigRat(-7, 3)}};
    int done = 0;
    while (done < 50) {
        RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng);
        BigRat va, vb;
        try {
            va = a.eval(at);
            vb = b.eval(at);
        } catch (const PoleError&) {
            continue; // hit a pole, draw again
        }
        CHECK((a + b).eval(at) == va + vb);
        CHECK((a * b).eval(at) == va * vb);
        ++done;
    }
}

TEST_CASE("polynomial detection and conversion") {
    MPoly s = MPoly::variable(kVars, 0), t = MPoly::variable(kVars, 1);
    RatFunc poly = RatFunc(s * t + s, MPoly::constant(kVars, BigRat(2)));
    CHECK(poly.is_polynomial());
    // A polynomial-valued fraction carries denominator 1, so num() is the
    // polynomial it represents.
    CHECK(poly.den() == MPoly::constant(kVars, BigRat(1)));
    MPoly want = s * t + s;
    want.scale(BigRat(1, 2));
    CHECK(poly.num() == want);

    RatFunc frac(s, t);
    CHECK_FALSE(frac.is_polynomial());
    CHECK(frac.num() == s);
    CHECK(frac.den() == t);
}

TEST_CASE("string rendering keeps fractions explicit") {
    MPoly s = MPoly::variable(kVars, 0), t = MPoly::variable(kVars, 1);
    CHECK(RatFunc(s + t, MPoly::constant(kVars, BigRat(1))).to_string() == "s + t");
    CHECK(RatFunc(s, t).to_string() == "(s)/(t)");
}
