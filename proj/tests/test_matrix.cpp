#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fmethod/matrix.hpp"

using namespace fmethod;

namespace {

const std::vector<std::string> kParams = {"u"};

RatFunc rf_const(long c) { return RatFunc::constant(kParams, BigRat(c)); }

RatFunc rf_u() { return RatFunc::variable(kParams, 0); }

ExactMatrix random_matrix(std::mt19937_64& rng, size_t rows, size_t cols, int density_pct) {
    ExactMatrix m(rows, cols, kParams);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) {
            if (static_cast<int>(rng() % 100) >= density_pct) continue;
            long c = static_cast<long>(rng() % 9) - 4;
            RatFunc e = rf_const(c);
            if (rng() % 3 == 0) e = e * rf_u();     // linear in the parameter
            if (rng() % 5 == 0) e = e + rf_const(1); // affine
            m.at(i, j) = e;
        }
    return m;
}

bool same_result(const NullspaceResult& a, const NullspaceResult& b) {
    if (a.rank != b.rank || a.basis.size() != b.basis.size()) return false;
    for (size_t k = 0; k < a.basis.size(); ++k)
        for (size_t j = 0; j < a.basis[k].size(); ++j)
            if (!(a.basis[k][j] == b.basis[k][j])) return false;
    return true;
}

} // namespace

TEST_CASE("kernel of a rank-one parametric matrix") {
    // [[1, u], [2, 2u]] has rank 1; the kernel is spanned by (u, -1) in
    // canonical form (first nonzero entry with positive leading coefficient).
    ExactMatrix m(2, 2, kParams);
    m.at(0, 0) = rf_const(1);
    m.at(0, 1) = rf_u();
    m.at(1, 0) = rf_const(2);
    m.at(1, 1) = rf_const(2) * rf_u();

    NullspaceResult res = nullspace(m);
    CHECK(res.rank == 1);
    REQUIRE(res.basis.size() == 1);
    CHECK(res.basis[0][0] == rf_u());
    CHECK(res.basis[0][1] == rf_const(-1));
    CHECK(same_result(res, nullspace_reference(m)));
}

TEST_CASE("identity has trivial kernel, zero matrix has full kernel") {
    ExactMatrix id(3, 3, kParams);
    for (size_t i = 0; i < 3; ++i) id.at(i, i) = rf_const(1);
    NullspaceResult r1 = nullspace(id);
    CHECK(r1.rank == 3);
    CHECK(r1.basis.empty());

    ExactMatrix z(2, 3, kParams);
    NullspaceResult r2 = nullspace(z);
    CHECK(r2.rank == 0);
    REQUIRE(r2.basis.size() == 3);
    // One canonical unit vector per free column.
    for (size_t k = 0; k < 3; ++k)
        for (size_t j = 0; j < 3; ++j)
            CHECK(r2.basis[k][j] == (j == k ? rf_const(1) : rf_const(0)));
}

TEST_CASE("parallel and reference elimination agree exactly on random matrices") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 40; ++trial) {
        size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
        ExactMatrix m = random_matrix(rng, rows, cols, 45);
        NullspaceResult a = nullspace(m);
        NullspaceResult b = nullspace_reference(m);
        CHECK(same_result(a, b));
        CHECK(a.rank + a.basis.size() == cols);
        // Every basis vector really lies in the kernel.
        for (const auto& v : a.basis) {
            auto mv = m.mul_vector(v);
            for (const auto& e : mv) CHECK(e.is_zero());
        }
    }
}

TEST_CASE("linear solve on a known system") {
    // [[2, 0], [1, 1]] x = (4, 5) has the unique solution (2, 3).
    ExactMatrix m(2, 2, kParams);
    m.at(0, 0) = rf_const(2);
    m.at(1, 0) = rf_const(1);
    m.at(1, 1) = rf_const(1);
    auto x = linear_solve(m, {rf_const(4), rf_const(5)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == rf_const(2));
    CHECK((*x)[1] == rf_const(3));

    auto mv = m.mul_vector(*x);
    CHECK(mv[0] == rf_const(4));
    CHECK(mv[1] == rf_const(5));
}

TEST_CASE("linear solve reports inconsistency") {
    // Two contradictory copies of the same row.
    ExactMatrix m(2, 2, kParams);
    m.at(0, 0) = rf_const(1);
    m.at(0, 1) = rf_u();
    m.at(1, 0) = rf_const(2);
    m.at(1, 1) = rf_const(2) * rf_u();
    auto x = linear_solve(m, {rf_const(1), rf_const(3)});
    CHECK_FALSE(x.has_value());
}

TEST_CASE("linear solve solutions satisfy random consistent systems") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
        ExactMatrix m = random_matrix(rng, rows, cols, 50);
        // Build b = M * y for a random y, so the system is consistent by
        // construction even when M is singular.
        std::vector<RatFunc> y;
        for (size_t j = 0; j < cols; ++j)
            y.push_back(rf_const(static_cast<long>(rng() % 7) - 3));
        auto b = m.mul_vector(y);
        auto x = linear_solve(m, b);
        REQUIRE(x.has_value());
        auto mx = m.mul_vector(*x);
        for (size_t i = 0; i < rows; ++i) CHECK(mx[i] == b[i]);
    }
}

TEST_CASE("vector normalization produces the canonical representative") {
    // (-2u, 4u^2): clear nothing, strip gcd 2u, flip sign -> (1, -2u).
    RatFunc u = rf_u();
    std::vector<RatFunc> v = {rf_const(-2) * u, rf_const(4) * u * u};
    auto n = normalize_vector(v, kParams);
    CHECK(n[0] == rf_const(1));
    CHECK(n[1] == rf_const(-2) * u);

    // Fractions are cleared first: (1/u, 1) -> (1, u).
    std::vector<RatFunc> w = {rf_const(1) / u, rf_const(1)};
    auto nw = normalize_vector(w, kParams);
    CHECK(nw[0] == rf_const(1));
    CHECK(nw[1] == u);

    // Scaling by any nonzero rational function leaves the form unchanged.
    std::vector<RatFunc> scaled = {v[0] * (u + rf_const(1)), v[1] * (u + rf_const(1))};
    auto ns = normalize_vector(scaled, kParams);
    CHECK(ns[0] == n[0]);
    CHECK(ns[1] == n[1]);
}
