#ifndef FMETHOD_SOLVER_HPP
#define FMETHOD_SOLVER_HPP

#include "fmethod/matrix.hpp"
#include "fmethod/setting.hpp"

#include <optional>

namespace fmethod {

enum class Parity { All, Even, Odd };

struct SolveOptions {
    std::optional<uint32_t> delta; // solve exactly this degree when set
    uint32_t degree_max = 6;       // otherwise sweep 0..degree_max
    Parity parity = Parity::All;   // degree filter for the sweep
    bool reduce = true;            // invariant-subspace pass before the main solve
};

// One singular vector: a homogeneous polynomial in the dual variables,
// annihilated by the grade +1 subalgebra generators (transformed side) and by
// the non-diagonal grade-0 generators, and an eigenvector of the diagonal
// ones.  nu is the weight the matching bundle on the subgroup side must
// carry, keyed by subalgebra basis names.  psi is canonically normalized:
// polynomial coefficients, primitive, first nonzero grlex coefficient
// positive.
struct SingularVector {
    uint32_t degree = 0;
    FiberPoly psi;
    RepWeight nu;
};

struct SolveOutcome {
    std::vector<uint32_t> degrees_searched;
    std::vector<SingularVector> solutions;     // ordered by degree, then basis index
    std::vector<size_t> multiplicity;          // solutions per searched degree
};

// All monomial exponents of total degree d in nvars variables, grlex
// ascending; the shared column order of the linear systems below.
std::vector<ExpVec> homogeneous_monomials(size_t nvars, uint32_t d);

// Degrees to examine.
std::vector<uint32_t> candidate_degrees(const SolveOptions& opt);

// True when the operator acts diagonally on monomials (every term has equal
// position and derivative exponents).  Distinguishes the generators whose
// eigenvalue equations are automatic on homogeneous polynomials from the ones
// that impose genuine invariance rows.
bool is_diagonal_action(const WeylElement& t);

// Matrix of a WeylElement mapping the degree `deg_from` component into the
// degree `deg_to` component, over the monomial bases above.  Throws
// StructuralError when the image leaves that component.
ExactMatrix operator_matrix(const WeylElement& t, uint32_t deg_from, uint32_t deg_to);

// Stacked rows at one degree: images under the transformed grade +1
// generators (mapping to degree-1 lower) and the non-diagonal grade-0
// generators (degree preserving), in subalgebra basis order.  Columns are
// computed under OpenMP; build_system_reference is the serial path kept for
// testing the parallel one, and both return identical matrices.
ExactMatrix build_system(const FSetting& s, uint32_t degree);
ExactMatrix build_system_reference(const FSetting& s, uint32_t degree);

// Kernel at one degree, as normalized singular vectors with their weights.
std::vector<SingularVector> solve_degree(const FSetting& s, uint32_t degree, bool reduce = true);

// Full search over candidate degrees.  Degrees are solved independently (and
// in parallel when OpenMP is enabled); the outcome is ordered by degree, so
// results do not depend on thread count.
SolveOutcome solve_singular_vectors(const FSetting& s, const SolveOptions& opt);

} // namespace fmethod

#endif
