#ifndef FMETHOD_MATRIX_HPP
#define FMETHOD_MATRIX_HPP

#include <optional>

#include "fmethod/ratfunc.hpp"

namespace fmethod {

// Dense matrix over the rational-function field. All entries share one
// parameter variable list. Sizes here are small (tens of columns); the cost
// center is exact entry arithmetic, not dimension.
class ExactMatrix {
public:
    ExactMatrix(size_t rows, size_t cols, std::vector<std::string> vars);

    size_t rows() const { return m_rows; }
    size_t cols() const { return m_cols; }
    const std::vector<std::string>& vars() const { return m_vars; }

    RatFunc& at(size_t i, size_t j) { return m_a[i * m_cols + j]; }
    const RatFunc& at(size_t i, size_t j) const { return m_a[i * m_cols + j]; }

    std::vector<RatFunc> mul_vector(const std::vector<RatFunc>& v) const;

private:
    size_t m_rows, m_cols;
    std::vector<std::string> m_vars;
    std::vector<RatFunc> m_a;
};

struct NullspaceResult {
    std::vector<std::vector<RatFunc>> basis; // normalized kernel vectors
    size_t rank = 0;
};

// Kernel basis over the rational-function field via division-based Gaussian
// elimination; the row updates of each elimination step are independent and
// run under OpenMP when enough rows remain. The pivot of each column is the
// first row with a nonzero entry, the same rule the serial reference uses,
// so both return identical results under any thread count.
//
// Vectors are canonical: one per free column (zero at every other free
// column, so independence is structural), denominators cleared, common
// polynomial factor and integer content removed, first nonzero entry with
// positive grlex-leading coefficient. Verifies M*v = 0 and
// rank + nullity = cols on every call.
NullspaceResult nullspace(const ExactMatrix& m);

// Serial reference implementation kept for testing the parallel one:
// straight Gauss elimination over the field, no OpenMP. Same pivot rule,
// same canonical output.
NullspaceResult nullspace_reference(const ExactMatrix& m);

// One solution of M x = b, or nullopt when inconsistent.
std::optional<std::vector<RatFunc>> linear_solve(const ExactMatrix& m,
                                                 const std::vector<RatFunc>& b);

// Canonical form of a nonzero vector up to scale: polynomial entries, no
// common polynomial factor, coprime integer coefficients, first nonzero
// entry with positive grlex-leading coefficient. Same form nullspace() uses.
std::vector<RatFunc> normalize_vector(std::vector<RatFunc> v,
                                      const std::vector<std::string>& vars);

} // namespace fmethod

#endif
