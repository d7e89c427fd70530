#ifndef FMETHOD_LIE_HPP
#define FMETHOD_LIE_HPP

#include "fmethod/weyl.hpp"

#include <map>
#include <string>
#include <vector>

namespace fmethod {

// Lie algebra element written in a fixed basis, with coordinates that are
// polynomials in the position variables.  Constant elements use constant
// polynomials; bracketing against the moving point X = sum_j x_j f_j produces
// genuinely polynomial coordinates.
using LieVec = std::vector<MPoly>;

// Finite dimensional Lie algebra with a Z-grading concentrated in degrees
// {-1, 0, +1} and integer-rational structure constants.  Brackets are stored
// sparsely: [b_i, b_j] = sum_k c_k b_k as a map index -> coefficient.
//
// Optionally carries a distinguished graded subalgebra, given by basis
// vectors that are rational combinations of the ambient basis.  Each
// subalgebra basis vector must be homogeneous for the grading, and the span
// must close under the bracket; validate() checks both.
class GradedLie {
public:
    struct BasisElement {
        std::string name;
        int grade = 0;
    };

    struct SubAlgebra {
        std::vector<std::string> names;
        std::vector<std::vector<BigRat>> combos; // combos[k][i]: coefficient of b_i
        bool empty() const { return names.empty(); }
    };

    GradedLie() = default;
    GradedLie(std::string name, std::vector<BasisElement> basis);

    const std::string& name() const { return m_name; }
    size_t dim() const { return m_basis.size(); }
    const std::vector<BasisElement>& basis() const { return m_basis; }
    const BasisElement& basis(size_t i) const { return m_basis.at(i); }
    size_t index_of(const std::string& basis_name) const; // throws DomainError if unknown
    int grade(size_t i) const { return m_basis.at(i).grade; }
    std::vector<size_t> indices_with_grade(int g) const;

    // Sets [b_i, b_j]; the opposite bracket [b_j, b_i] is stored automatically.
    void set_bracket(size_t i, size_t j, const std::map<size_t, BigRat>& result);
    const std::map<size_t, BigRat>& bracket_basis(size_t i, size_t j) const;

    void set_subalgebra(SubAlgebra sub);
    bool has_subalgebra() const { return !m_sub.empty(); }
    const SubAlgebra& sub() const { return m_sub; }
    int sub_grade(size_t k) const; // grade of the k-th subalgebra basis vector

    // Checks antisymmetry, the Jacobi identity on all basis triples, grading
    // additivity (which for grades in {-1,0,+1} forces both nilradicals to be
    // abelian), and, when a subalgebra is present, homogeneity and closure of
    // its span.  Throws StructuralError on the first violation.
    void validate() const;

    LieVec zero_vec(const std::vector<std::string>& vars) const;
    LieVec basis_vec(size_t i, const std::vector<std::string>& vars) const;
    LieVec combo_vec(const std::vector<BigRat>& combo, const std::vector<std::string>& vars) const;
    LieVec bracket(const LieVec& a, const LieVec& b) const;
    LieVec component(const LieVec& a, int g) const; // keep coordinates of one grade

    // The distinguished subalgebra as a Lie algebra in its own right: basis =
    // subalgebra names with their grades, brackets re-expressed in that basis.
    // Throws StructuralError when no subalgebra is present or the span fails
    // to close.
    GradedLie subalgebra_algebra() const;

    static GradedLie from_json_text(const std::string& text);
    std::string to_json_text() const;

private:
    std::string m_name;
    std::vector<BasisElement> m_basis;
    std::vector<std::vector<std::map<size_t, BigRat>>> m_c; // m_c[i][j]
    SubAlgebra m_sub;
};

// Weight (infinitesimal character) of the degree-zero part: a value, written
// as a polynomial in the parameter variables, for every grade-0 basis
// element.  Grade +-1 elements carry no value.
class RepWeight {
public:
    RepWeight() = default;
    RepWeight(std::vector<std::string> params, std::map<std::string, MPoly> values);

    const std::vector<std::string>& params() const { return m_params; }
    const std::map<std::string, MPoly>& values() const { return m_values; }
    bool has(const std::string& basis_name) const;
    const MPoly& value(const std::string& basis_name) const; // throws DomainError

    // A weight exponentiates to a one dimensional representation only when it
    // kills brackets: for grade-0 basis elements a, b the pairing with [a, b]
    // must vanish.  Throws StructuralError otherwise.
    void validate_character(const GradedLie& g) const;

private:
    std::vector<std::string> m_params;
    std::map<std::string, MPoly> m_values;
};

// Parameter of the dual-side module attached to a bundle weight lambda:
// mu(Z) = -lambda(Z) + trace(ad Z restricted to the grade +1 part), per
// grade-0 basis element Z.  Requires lambda to carry a value for every
// grade-0 basis element.
RepWeight mu_from_lambda(const GradedLie& g, const RepWeight& lambda);

// Pulls a weight back to the distinguished subalgebra: the value on a grade-0
// subalgebra basis vector is the matching combination of ambient values.
// Keys of the result are the subalgebra names.
RepWeight restrict_weight(const GradedLie& g, const RepWeight& w);

// Principal series action at the base point, as a first order operator in the
// coordinates of the grade -1 part: for X = sum_j x_j f_j,
//
//   dpi_mu(Y) = mu(alpha(Y, X)) - sum_j beta_j(Y, X) d/dx_j,
//
// where alpha and beta are the grade 0 and grade -1 parts of Ad(exp(-X))Y:
//
//   alpha(Y, X) = Y_0 - [X, Y_+],
//   beta(Y, X)  = Y_- - [X, Y_0] + 1/2 [X, [X, Y_+]].
//
// These closed forms are exact here because both nilradicals are abelian, so
// the adjoint series terminates at the displayed terms.  coord_vars lists one
// variable per grade -1 basis element, in basis order.  The map Y -> dpi(Y)
// is a Lie algebra homomorphism into the Weyl algebra.
WeylElement dpi(const GradedLie& g, const RepWeight& mu, const LieVec& y,
                const std::vector<std::string>& coord_vars);

// Transform of dpi under the algebraic Fourier transform: acts on polynomials
// in the dual variables.  When dual_vars is empty, names are derived from
// coord_vars via dual_var_names.  Always has derivative order at most 2 and
// polynomial coefficients of degree at most 2.
WeylElement dpi_hat(const GradedLie& g, const RepWeight& mu, const LieVec& y,
                    const std::vector<std::string>& coord_vars,
                    std::vector<std::string> dual_vars = {});

} // namespace fmethod

#endif
