#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fmethod/solver.hpp"

using namespace fmethod;

namespace {

// Scalar coefficient of psi at exponent e, as an MPoly in the parameters.
MPoly coeff_poly(const FSetting& s, const FiberPoly& psi, const ExpVec& e) {
    FiberMatrix c = psi.coeff(e);
    if (c.is_zero()) return MPoly(s.params);
    REQUIRE(c.is_scalar());
    REQUIRE(c.scalar_value().is_polynomial());
    return c.scalar_value().num();
}

} // namespace

TEST_CASE("candidate degrees honor delta, cap and parity") {
    SolveOptions opt;
    opt.degree_max = 5;
    CHECK(candidate_degrees(opt) == std::vector<uint32_t>{0, 1, 2, 3, 4, 5});
    opt.parity = Parity::Even;
    CHECK(candidate_degrees(opt) == std::vector<uint32_t>{0, 2, 4});
    opt.parity = Parity::Odd;
    CHECK(candidate_degrees(opt) == std::vector<uint32_t>{1, 3, 5});
    opt.delta = 3;
    CHECK(candidate_degrees(opt) == std::vector<uint32_t>{3});
    opt.delta = 0;
    CHECK(candidate_degrees(opt) == std::vector<uint32_t>{0});
}

TEST_CASE("homogeneous monomial bases: size and grlex order") {
    // C(d + nvars - 1, nvars - 1) exponents of total degree d.
    CHECK(homogeneous_monomials(2, 3).size() == 4);
    CHECK(homogeneous_monomials(3, 4).size() == 15);
    CHECK(homogeneous_monomials(1, 7) == std::vector<ExpVec>{{7}});
    auto mons = homogeneous_monomials(2, 2);
    CHECK(mons == std::vector<ExpVec>{{0, 2}, {1, 1}, {2, 0}});
    GrlexLess less;
    auto big = homogeneous_monomials(4, 3);
    CHECK(big.size() == 20);
    for (size_t i = 0; i + 1 < big.size(); ++i) CHECK(less(big[i], big[i + 1]));
}

TEST_CASE("first-order solution of the two-factor setting, exactly") {
    FSetting s = builtin_setting("rankin_cohen");
    SolveOptions opt;
    opt.delta = 1;
    SolveOutcome out = solve_singular_vectors(s, opt);
    REQUIRE(out.solutions.size() == 1);
    const SingularVector& sol = out.solutions[0];
    CHECK(sol.degree == 1);

    // psi = -k2 zeta1 + k1 zeta2 in canonical normalization.
    MPoly k1 = MPoly::variable(s.params, 0), k2 = MPoly::variable(s.params, 1);
    CHECK(coeff_poly(s, sol.psi, {1, 0}) == -k2);
    CHECK(coeff_poly(s, sol.psi, {0, 1}) == k1);

    // nu on the diagonal sl2: h eigenvalue k1 + k2 + 2 delta.
    CHECK(sol.nu.value("h") == k1 + k2 + MPoly::constant(s.params, BigRat(2)));
}

TEST_CASE("solutions are annihilated by the raising generators, via the Weyl action") {
    for (const auto& [name, n, dmax] : std::vector<std::tuple<std::string, size_t, uint32_t>>{
             {"rankin_cohen", 0, 3}, {"juhl", 3, 4}}) {
        FSetting s = builtin_setting(name, n);
        RepWeight mu = mu_from_lambda(s.algebra, s.lambda);
        SolveOptions opt;
        opt.degree_max = dmax;
        SolveOutcome out = solve_singular_vectors(s, opt);
        CHECK(!out.solutions.empty());
        for (const auto& sol : out.solutions) {
            // Transformed grade +1 generators of the subalgebra must kill psi.
            const GradedLie& sub = s.sub_algebra;
            for (size_t k = 0; k < sub.dim(); ++k) {
                if (sub.grade(k) != 1) continue;
                LieVec y = s.algebra.combo_vec(s.algebra.sub().combos[k], s.coord_vars);
                WeylElement t = dpi_hat(s.algebra, mu, y, s.coord_vars, s.dual_vars);
                CHECK(apply(t, sol.psi).is_zero());
            }
            // Grade-0 subalgebra generators: t.psi = -nu(name) * psi. The
            // invariance generators carry nu = 0, so this same line also
            // states their annihilation condition.
            for (size_t k = 0; k < sub.dim(); ++k) {
                if (sub.grade(k) != 0) continue;
                LieVec y = s.algebra.combo_vec(s.algebra.sub().combos[k], s.coord_vars);
                WeylElement t = dpi_hat(s.algebra, mu, y, s.coord_vars, s.dual_vars);
                FiberPoly got = apply(t, sol.psi);
                FiberPoly want = sol.psi;
                MPoly ev = -sol.nu.value(sub.basis(k).name);
                want.scale(RatFunc(ev));
                CHECK(got == want);
            }
        }
    }
}

TEST_CASE("one solution per admissible degree") {
    FSetting rc = builtin_setting("rankin_cohen");
    SolveOptions opt;
    opt.degree_max = 4;
    SolveOutcome out = solve_singular_vectors(rc, opt);
    CHECK(out.degrees_searched == std::vector<uint32_t>{0, 1, 2, 3, 4});
    CHECK(out.multiplicity == std::vector<size_t>{1, 1, 1, 1, 1});

    FSetting ju = builtin_setting("juhl", 3);
    SolveOutcome out2 = solve_singular_vectors(ju, opt);
    // One per degree here as well; odd degrees carry the odd operator
    // family (degree 1 is plain zeta3).
    CHECK(out2.multiplicity == std::vector<size_t>{1, 1, 1, 1, 1});
    CHECK(out2.solutions[1].psi.to_string() == "zeta3");
}

TEST_CASE("invariant-subspace reduction changes nothing but the work") {
    for (const auto& [name, n] :
         std::vector<std::pair<std::string, size_t>>{{"rankin_cohen", 0}, {"juhl", 3}}) {
        FSetting s = builtin_setting(name, n);
        SolveOptions fast, slow;
        fast.degree_max = slow.degree_max = 4;
        slow.reduce = false;
        SolveOutcome a = solve_singular_vectors(s, fast);
        SolveOutcome b = solve_singular_vectors(s, slow);
        REQUIRE(a.solutions.size() == b.solutions.size());
        for (size_t i = 0; i < a.solutions.size(); ++i) {
            CHECK(a.solutions[i].degree == b.solutions[i].degree);
            CHECK(a.solutions[i].psi == b.solutions[i].psi);
            CHECK(a.solutions[i].nu.values() == b.solutions[i].nu.values());
        }
    }
}

TEST_CASE("second-order conformal solution with the symbolic parameter") {
    FSetting s = builtin_setting("juhl", 3);
    SolveOptions opt;
    opt.delta = 2;
    SolveOutcome out = solve_singular_vectors(s, opt);
    REQUIRE(out.solutions.size() == 1);
    const SingularVector& sol = out.solutions[0];

    // psi = zeta1^2 + zeta2^2 + 2 lambda zeta3^2.
    MPoly lam = MPoly::variable(s.params, 0);
    MPoly two_lam = lam;
    two_lam.scale(BigRat(2));
    CHECK(coeff_poly(s, sol.psi, {2, 0, 0}) == MPoly::constant(s.params, BigRat(1)));
    CHECK(coeff_poly(s, sol.psi, {0, 2, 0}) == MPoly::constant(s.params, BigRat(1)));
    CHECK(coeff_poly(s, sol.psi, {0, 0, 2}) == two_lam);
    CHECK(coeff_poly(s, sol.psi, {1, 1, 0}).is_zero());

    // nu(E) = lambda + delta.
    CHECK(sol.nu.value("E") == lam + MPoly::constant(s.params, BigRat(2)));
}

TEST_CASE("parallel and reference system assembly agree entry by entry") {
    for (const auto& [name, n, deg] : std::vector<std::tuple<std::string, size_t, uint32_t>>{
             {"rankin_cohen", 0, 5}, {"juhl", 3, 4}}) {
        FSetting s = builtin_setting(name, n);
        ExactMatrix a = build_system(s, deg);
        ExactMatrix b = build_system_reference(s, deg);
        REQUIRE(a.rows() == b.rows());
        REQUIRE(a.cols() == b.cols());
        for (size_t i = 0; i < a.rows(); ++i)
            for (size_t j = 0; j < a.cols(); ++j) CHECK(a.at(i, j) == b.at(i, j));
    }
}

TEST_CASE("repeated solves are bit-for-bit identical") {
    FSetting s = builtin_setting("juhl", 3);
    SolveOptions opt;
    opt.degree_max = 4;
    SolveOutcome a = solve_singular_vectors(s, opt);
    SolveOutcome b = solve_singular_vectors(s, opt);
    REQUIRE(a.solutions.size() == b.solutions.size());
    for (size_t i = 0; i < a.solutions.size(); ++i) {
        CHECK(a.solutions[i].psi == b.solutions[i].psi);
        CHECK(a.solutions[i].psi.to_string() == b.solutions[i].psi.to_string());
    }
}

TEST_CASE("pinned parameters flow through the solve") {
    FSetting s = specialize_setting(builtin_setting("rankin_cohen"),
                                    {{"k1", BigRat(2)}, {"k2", BigRat(3)}});
    SolveOptions opt;
    opt.delta = 3;
    SolveOutcome out = solve_singular_vectors(s, opt);
    REQUIRE(out.solutions.size() == 1);
    const FiberPoly& psi = out.solutions[0].psi;
    // Canonical form: primitive integer coefficients,
    // -5 zeta1^3 + 20 zeta1^2 zeta2 - 15 zeta1 zeta2^2 + 2 zeta2^3.
    CHECK(coeff_poly(s, psi, {3, 0}) == MPoly::constant(s.params, BigRat(-5)));
    CHECK(coeff_poly(s, psi, {2, 1}) == MPoly::constant(s.params, BigRat(20)));
    CHECK(coeff_poly(s, psi, {1, 2}) == MPoly::constant(s.params, BigRat(-15)));
    CHECK(coeff_poly(s, psi, {0, 3}) == MPoly::constant(s.params, BigRat(2)));
    CHECK(out.solutions[0].nu.value("h").constant_value() == BigRat(11));
}
