#ifndef FMETHOD_RATIONAL_HPP
#define FMETHOD_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "fmethod/util.hpp"

namespace fmethod {

// Arbitrary-precision rational. Always stored canonically: gcd(num, den) = 1
// and den >= 1. All arithmetic is exact; there is no floating-point path.
class BigRat {
public:
    BigRat() : m_q(0) {}
    BigRat(long n) : m_q(static_cast<signed long>(n)) {}
    BigRat(long num, long den);
    explicit BigRat(const mpq_class& q) : m_q(q) { m_q.canonicalize(); }

    // Parses "p/q" or "p" (optional sign, decimal digits). Throws ParseError.
    static BigRat from_string(const std::string& s);

    // Canonical rendering "p/q", including "/1" for integers.
    std::string to_string() const;
    // Rendering for human-facing output: omits "/1".
    std::string to_pretty_string() const;

    BigRat operator-() const { return BigRat(mpq_class(-m_q)); }
    BigRat& operator+=(const BigRat& o) { m_q += o.m_q; return *this; }
    BigRat& operator-=(const BigRat& o) { m_q -= o.m_q; return *this; }
    BigRat& operator*=(const BigRat& o) { m_q *= o.m_q; return *this; }
    BigRat& operator/=(const BigRat& o);

    friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
    friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
    friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
    friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }

    friend bool operator==(const BigRat& a, const BigRat& b) { return a.m_q == b.m_q; }
    friend bool operator!=(const BigRat& a, const BigRat& b) { return a.m_q != b.m_q; }
    friend bool operator<(const BigRat& a, const BigRat& b) { return a.m_q < b.m_q; }
    friend bool operator<=(const BigRat& a, const BigRat& b) { return a.m_q <= b.m_q; }
    friend bool operator>(const BigRat& a, const BigRat& b) { return a.m_q > b.m_q; }
    friend bool operator>=(const BigRat& a, const BigRat& b) { return a.m_q >= b.m_q; }

    bool is_zero() const { return m_q == 0; }
    bool is_one() const { return m_q == 1; }
    bool is_integer() const { return m_q.get_den() == 1; }
    int sign() const { return sgn(m_q); }
    BigRat abs() const { return BigRat(mpq_class(::abs(m_q))); }
    BigRat inverse() const;
    BigRat pow(unsigned e) const;

    std::string num_string() const { return m_q.get_num().get_str(); }
    std::string den_string() const { return m_q.get_den().get_str(); }
    const mpq_class& raw() const { return m_q; }

private:
    mpq_class m_q;
};

// gcd(p1/q1, p2/q2) = gcd(p1, p2) / lcm(q1, q2), nonnegative. Both arguments
// divided by the result are integers with coprime numerators.
BigRat rat_gcd(const BigRat& a, const BigRat& b);

BigRat rat_factorial(unsigned n);
BigRat rat_binomial(unsigned n, unsigned k);
// n * (n+1) * ... * (n+len-1); empty product for len = 0.
BigRat rat_rising(const BigRat& n, unsigned len);
// n * (n-1) * ... * (n-len+1); empty product for len = 0.
BigRat rat_falling(const BigRat& n, unsigned len);

} // namespace fmethod

#endif
