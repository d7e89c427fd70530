#ifndef FMETHOD_SETTING_HPP
#define FMETHOD_SETTING_HPP

#include "fmethod/lie.hpp"

#include <map>
#include <string>
#include <vector>

namespace fmethod {

// Faithful matrix realization of a GradedLie basis.  Rows and columns are
// partitioned into grading blocks, ordered so that grade -1 elements are
// strictly below the block diagonal, grade 0 elements are block diagonal and
// grade +1 elements are strictly above.  This shape is what lets a Gauss
// block factorization of a group element separate the three factors.
struct MatrixRep {
    size_t size = 0;
    std::vector<size_t> block_sizes;
    std::vector<std::vector<BigRat>> mats; // one row-major size*size matrix per basis element
};

// Everything the solver and the verifier need about one geometric situation:
// the ambient graded algebra with its distinguished subalgebra, a faithful
// matrix realization, coordinates on both nilpotent radicals, the parameter
// names, and the bundle weight written in those parameters.
struct FSetting {
    std::string name;
    GradedLie algebra;
    GradedLie sub_algebra; // algebra.subalgebra_algebra()
    MatrixRep rep;
    std::vector<std::string> params;
    std::vector<std::string> coord_vars;     // one per grade -1 basis element
    std::vector<std::string> dual_vars;      // Fourier-dual names for coord_vars
    std::vector<std::string> sub_coord_vars; // one per grade -1 subalgebra element
    RepWeight lambda;                        // bundle weight on the grade-0 part
    std::vector<MPoly> restriction;          // coord_vars[i] -> polynomial in sub_coord_vars

    std::string describe_json() const;
};

// Builds a GradedLie whose structure constants are computed from matrix
// commutators: [b_i, b_j] is expanded in the span of the given matrices.
// Throws StructuralError when the matrices are dependent or the span fails to
// close under commutators.
GradedLie algebra_from_matrices(const std::string& name,
                                std::vector<GradedLie::BasisElement> basis,
                                const std::vector<std::vector<BigRat>>& mats, size_t msize);

// The embedding of the small flat into the big one, coordinate by coordinate:
// since exp is polynomial here, the big coordinate attached to f_i pulls back
// to the linear form sum_k combo_k[i] * t_k in the subalgebra coordinates.
std::vector<MPoly> restriction_map(const GradedLie& g,
                                   const std::vector<std::string>& sub_coords);

// Named built-in situations:
//   "rankin_cohen": two copies of sl2 with the diagonal subalgebra,
//                   parameters k1, k2 (n is ignored);
//   "juhl":         so(n+2, J) in the light-cone basis with the subalgebra
//                   fixing the last direction, parameter lambda; needs n >= 2.
// Throws DomainError for unknown names or unsupported n.
FSetting builtin_setting(const std::string& name, size_t n = 0);

// Pins some or all parameters to rational values.  Substituted parameters
// disappear from the parameter list of every stored weight value.
FSetting specialize_setting(const FSetting& s, const std::map<std::string, BigRat>& values);

} // namespace fmethod

#endif
