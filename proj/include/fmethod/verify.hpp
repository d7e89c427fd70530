#ifndef FMETHOD_VERIFY_HPP
#define FMETHOD_VERIFY_HPP

#include "fmethod/solver.hpp"

namespace fmethod {

// The differential operator a singular vector induces: a constant-coefficient
// operator in the big coordinates followed by restriction to the small flat.
// Acting on a polynomial f: D f = restrict(op f).
struct DiffOperator {
    uint32_t degree = 0;            // order of op = degree of the source vector
    WeylElement op;                 // over coord_vars, monomial exponents of psi as derivatives
    std::vector<MPoly> restriction; // big coordinate -> polynomial in the small coordinates
    std::vector<std::string> sub_coord_vars;
    RepWeight nu;                   // bundle weight on the subalgebra side
};

DiffOperator emit_operator(const FSetting& s, const SingularVector& sv);

// Substitutes images[i] (a polynomial in the small coordinates) for the i-th
// variable of f; fiber coefficients are untouched.
FiberPoly restrict_poly(const FiberPoly& f, const std::vector<MPoly>& images);

struct EquivarianceOptions {
    uint32_t test_degree = 3; // check on all monomials of total degree <= this
    size_t samples = 3;       // distinct rational parameter specializations
    uint64_t seed = 20260818; // deterministic sample generation
    bool negative_controls = true;
};

struct EquivarianceReport {
    bool passed = false;
    size_t checks = 0;             // (sample, generator, monomial) identities verified
    size_t controls_failed = 0;    // perturbed operators that correctly broke the identity
    size_t controls_expected = 0;
    std::string detail;            // first violation, empty when passed
};

// Checks the intertwining identity
//
//   restrict(op(dpi_lambda(Z) f)) = dpi_nu(Z)(restrict(op f))
//
// for every subalgebra generator Z, every monomial f up to the test degree
// and several rational parameter specializations; then perturbs the operator
// and demands the identity break (a control against vacuous checks).
EquivarianceReport verify_equivariance(const FSetting& s, const DiffOperator& d,
                                       const EquivarianceOptions& opt = {});

struct ComparisonReport {
    bool matched = false;
    std::string detail; // expected/actual rendering on mismatch
};

// Compares a solved singular vector against the classical bilinear-bracket
// coefficient sequence: expected coefficient of zeta1^(n-j) zeta2^j is
//   (-1)^j binom(n,j) prod_{i=0}^{j-1}(k1+n-j+i) prod_{i=0}^{n-j-1}(k2+j+i),
// up to one overall rational factor (cross-multiplication, exact).
ComparisonReport compare_rankin_cohen(const FSetting& s, const SingularVector& sv);

// Compares against the classical conformally covariant family on the
// codimension-one flat: expected vector for even degree d is
//   sum_j c_j (zeta_1^2+...+zeta_{n-1}^2)^j zeta_n^(d-2j),
//   c_j = [2^j j! (d-2j)!]^{-1} prod_{i=1}^{d/2-j} (2 lambda + d - n - 1 + 2i),
// up to one overall factor.  Throws UnsupportedError for odd degree: odd
// solutions exist, but this closed coefficient formula only covers the even
// family.
ComparisonReport compare_juhl(const FSetting& s, const SingularVector& sv);

} // namespace fmethod

#endif
