#ifndef FMETHOD_MPOLY_HPP
#define FMETHOD_MPOLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fmethod/rational.hpp"

namespace fmethod {

using ExpVec = std::vector<uint32_t>;

uint32_t total_degree(const ExpVec& e);

// Graded lexicographic order: lower total degree first, ties broken
// lexicographically with earlier variables weighing more. The map below is
// ascending, so rbegin() is the leading term.
struct GrlexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const;
};

// Polynomial in named variables over BigRat. Invariants: every exponent
// vector has size vars().size(); no explicit zero coefficients; terms are
// kept in graded-lex order, which makes iteration, serialization, and
// rendering deterministic. Binary operations require identical variable
// lists and throw StructuralError otherwise.
class MPoly {
public:
    using TermMap = std::map<ExpVec, BigRat, GrlexLess>;

    MPoly() = default;
    explicit MPoly(std::vector<std::string> vars) : m_vars(std::move(vars)) {}

    static MPoly constant(std::vector<std::string> vars, const BigRat& c);
    static MPoly variable(std::vector<std::string> vars, size_t index);
    static MPoly monomial(std::vector<std::string> vars, const ExpVec& e, const BigRat& c);

    const std::vector<std::string>& vars() const { return m_vars; }
    const TermMap& terms() const { return m_terms; }

    bool is_zero() const { return m_terms.empty(); }
    bool is_constant() const;
    // Constant term (zero if absent); for is_constant() polys this is the value.
    BigRat constant_value() const;
    uint32_t degree() const; // total degree; 0 for the zero polynomial
    uint32_t degree_in(size_t var_index) const;

    const BigRat& coeff(const ExpVec& e) const; // zero if absent
    void set_coeff(const ExpVec& e, const BigRat& c);

    BigRat lead_coeff() const; // grlex-leading; zero for zero poly
    ExpVec lead_exp() const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly& operator*=(const MPoly& o) { *this = *this * o; return *this; }
    MPoly& scale(const BigRat& c);
    friend MPoly operator*(const BigRat& c, MPoly p) { return p.scale(c); }
    MPoly pow(unsigned e) const;

    friend bool operator==(const MPoly& a, const MPoly& b);
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    // Full evaluation; every variable must be assigned.
    BigRat eval(const std::map<std::string, BigRat>& assignment) const;

    // Positive rational c such that (*this)/c has coprime integer
    // coefficients; zero for the zero polynomial.
    BigRat content() const;
    // this / content(), with the grlex-leading coefficient made positive.
    MPoly primitive_part() const;

    // Exact quotient; throws DomainError when the division is not exact.
    MPoly exact_div(const MPoly& divisor) const;

    std::string to_string() const;

private:
    void check_same_vars(const MPoly& o) const;

    std::vector<std::string> m_vars;
    TermMap m_terms;
};

// Primitive gcd with positive leading coefficient (grlex); gcd of anything
// with a nonzero constant is 1. Recursive primitive-PRS; no factorization.
MPoly poly_gcd(const MPoly& a, const MPoly& b);
MPoly poly_lcm(const MPoly& a, const MPoly& b);

// Substitutes images[i] for variable i of p. One image per variable of p,
// all sharing one variable list, which becomes the result's list.
MPoly compose(const MPoly& p, const std::vector<MPoly>& images);

} // namespace fmethod

#endif
