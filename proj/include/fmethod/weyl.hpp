#ifndef FMETHOD_WEYL_HPP
#define FMETHOD_WEYL_HPP

#include "fmethod/ratfunc.hpp"

namespace fmethod {

// Coefficient block attached to a Weyl-algebra term or a polynomial term:
// a small matrix of rational functions in the parameter variables. Scalar
// settings use 1x1 blocks throughout; operations keep a fast path for them.
class FiberMatrix {
public:
    FiberMatrix() : m_rows(0), m_cols(0) {}
    FiberMatrix(size_t rows, size_t cols, std::vector<std::string> params);
    static FiberMatrix scalar(RatFunc v);
    static FiberMatrix identity(size_t n, std::vector<std::string> params);

    size_t rows() const { return m_rows; }
    size_t cols() const { return m_cols; }
    const std::vector<std::string>& params() const { return m_params; }
    RatFunc& at(size_t i, size_t j) { return m_m[i * m_cols + j]; }
    const RatFunc& at(size_t i, size_t j) const { return m_m[i * m_cols + j]; }
    bool is_scalar() const { return m_rows == 1 && m_cols == 1; }
    const RatFunc& scalar_value() const;

    bool is_zero() const;
    FiberMatrix operator-() const;
    FiberMatrix& operator+=(const FiberMatrix& o);
    FiberMatrix& operator-=(const FiberMatrix& o);
    friend FiberMatrix operator+(FiberMatrix a, const FiberMatrix& b) { return a += b; }
    friend FiberMatrix operator-(FiberMatrix a, const FiberMatrix& b) { return a -= b; }
    friend FiberMatrix operator*(const FiberMatrix& a, const FiberMatrix& b);
    FiberMatrix& scale(const RatFunc& c);
    friend bool operator==(const FiberMatrix& a, const FiberMatrix& b);
    friend bool operator!=(const FiberMatrix& a, const FiberMatrix& b) { return !(a == b); }

    FiberMatrix specialize(const std::map<std::string, BigRat>& assignment) const;

private:
    size_t m_rows, m_cols;
    std::vector<std::string> m_params;
    std::vector<RatFunc> m_m;
};

// Polynomial in position variables with FiberMatrix coefficients; used both
// for symbols (polynomials on the Fourier side) and for the sections that
// operators act on. Terms are grlex-ordered and never zero.
class FiberPoly {
public:
    FiberPoly() : m_frows(1), m_fcols(1) {}
    FiberPoly(std::vector<std::string> vars, std::vector<std::string> params,
              size_t frows = 1, size_t fcols = 1);

    // Scalar embedding: position-variable polynomial with constant rational
    // coefficients becomes a 1x1-fiber element.
    static FiberPoly from_scalar(const MPoly& position_poly, std::vector<std::string> params);
    static FiberPoly monomial(std::vector<std::string> vars, const ExpVec& e, FiberMatrix c);

    const std::vector<std::string>& vars() const { return m_vars; }
    const std::vector<std::string>& params() const { return m_params; }
    size_t fiber_rows() const { return m_frows; }
    size_t fiber_cols() const { return m_fcols; }
    const std::map<ExpVec, FiberMatrix, GrlexLess>& terms() const { return m_terms; }

    bool is_zero() const { return m_terms.empty(); }
    uint32_t degree() const;
    bool is_homogeneous() const;
    FiberMatrix coeff(const ExpVec& e) const; // zero matrix if absent
    void add_term(const ExpVec& e, const FiberMatrix& c);

    FiberPoly operator-() const;
    FiberPoly& operator+=(const FiberPoly& o);
    FiberPoly& operator-=(const FiberPoly& o);
    friend FiberPoly operator+(FiberPoly a, const FiberPoly& b) { return a += b; }
    friend FiberPoly operator-(FiberPoly a, const FiberPoly& b) { return a -= b; }
    FiberPoly& scale(const RatFunc& c);
    friend bool operator==(const FiberPoly& a, const FiberPoly& b);
    friend bool operator!=(const FiberPoly& a, const FiberPoly& b) { return !(a == b); }

    FiberPoly specialize(const std::map<std::string, BigRat>& assignment) const;

    std::string to_string() const;

private:
    std::vector<std::string> m_vars, m_params;
    size_t m_frows, m_fcols;
    std::map<ExpVec, FiberMatrix, GrlexLess> m_terms;
};

// Element of the Weyl algebra with FiberMatrix coefficients, kept in normal
// order: every term is z^a d^b (multiplication part left of derivatives).
// Multiplication realizes [d_i, z_j] = delta_ij exactly. Position variables
// are named; elements on different variable spaces do not combine.
class WeylElement {
public:
    struct Key {
        ExpVec z, d;
        bool operator<(const Key& o) const;
        bool operator==(const Key& o) const { return z == o.z && d == o.d; }
    };

    WeylElement() : m_frows(1), m_fcols(1) {}
    WeylElement(std::vector<std::string> vars, std::vector<std::string> params,
                size_t frows = 1, size_t fcols = 1);

    static WeylElement constant(std::vector<std::string> vars, std::vector<std::string> params,
                                const RatFunc& c);
    // z_i as a multiplication operator / d_i as a derivative (1x1 fiber).
    static WeylElement position(std::vector<std::string> vars, std::vector<std::string> params,
                                size_t i);
    static WeylElement derivative(std::vector<std::string> vars, std::vector<std::string> params,
                                  size_t i);

    const std::vector<std::string>& vars() const { return m_vars; }
    const std::vector<std::string>& params() const { return m_params; }
    size_t fiber_rows() const { return m_frows; }
    size_t fiber_cols() const { return m_fcols; }
    const std::map<Key, FiberMatrix>& terms() const { return m_terms; }

    bool is_zero() const { return m_terms.empty(); }
    // Highest derivative multi-degree across terms (operator order).
    uint32_t order() const;
    // Highest position multi-degree across terms.
    uint32_t poly_degree() const;

    void add_term(const ExpVec& z, const ExpVec& d, const FiberMatrix& c);

    WeylElement operator-() const;
    WeylElement& operator+=(const WeylElement& o);
    WeylElement& operator-=(const WeylElement& o);
    friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
    friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
    WeylElement& scale(const RatFunc& c);
    friend bool operator==(const WeylElement& a, const WeylElement& b);
    friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }

    WeylElement specialize(const std::map<std::string, BigRat>& assignment) const;

    std::string to_string() const;

private:
    std::vector<std::string> m_vars, m_params;
    size_t m_frows, m_fcols;
    std::map<Key, FiberMatrix> m_terms;
};

// Noncommutative product with normal-ordering contraction
//   d^b z^c = sum_k prod_v C(b_v,k_v) C(c_v,k_v) k_v! z^(c-k) d^(b-k).
WeylElement weyl_mul(const WeylElement& a, const WeylElement& b);
WeylElement weyl_commutator(const WeylElement& a, const WeylElement& b);

// T acting on a section: z^a d^b . f with exact falling-factorial action on
// monomials; fiber blocks act by matrix multiplication.
FiberPoly apply(const WeylElement& t, const FiberPoly& f);

// Algebraic Fourier transform: z_j -> d_(dual j), d_j -> -(dual z_j); a ring
// homomorphism, with hat(hat(T)) = T with both generator kinds negated. The
// result lives on dual_vars (same count). No imaginary unit appears; every
// structure constant of the transform is an integer.
WeylElement fourier_hat(const WeylElement& t, std::vector<std::string> dual_vars);
// Default dual naming: z<k> <-> zeta<k>; otherwise zeta1..zetaN by position.
std::vector<std::string> dual_var_names(const std::vector<std::string>& vars);

// Symbol of a constant-coefficient operator: d^b -> xi^b on dual_vars.
// Throws DomainError if any term has a nonzero position exponent.
FiberPoly symb(const WeylElement& t, std::vector<std::string> dual_vars);
// Inverse: xi^b -> d^b as a constant-coefficient operator on primal_vars.
WeylElement symb_inv(const FiberPoly& p, std::vector<std::string> primal_vars);

} // namespace fmethod

#endif
