#ifndef FMETHOD_RATFUNC_HPP
#define FMETHOD_RATFUNC_HPP

#include "fmethod/mpoly.hpp"

namespace fmethod {

// Element of the rational-function field over BigRat in named parameters.
// Canonical form: gcd(num, den) = 1, den has grlex-leading coefficient 1,
// zero is 0/1. Equality is therefore structural.
class RatFunc {
public:
    RatFunc() : RatFunc(std::vector<std::string>{}) {}
    explicit RatFunc(std::vector<std::string> vars)
        : m_num(vars), m_den(MPoly::constant(std::move(vars), BigRat(1))) {}
    RatFunc(MPoly num, MPoly den);
    explicit RatFunc(MPoly num);

    static RatFunc constant(std::vector<std::string> vars, const BigRat& c);
    static RatFunc variable(std::vector<std::string> vars, size_t index);

    const MPoly& num() const { return m_num; }
    const MPoly& den() const { return m_den; }
    const std::vector<std::string>& vars() const { return m_num.vars(); }

    bool is_zero() const { return m_num.is_zero(); }
    bool is_polynomial() const { return m_den.is_constant(); }
    bool is_constant() const { return m_num.is_constant() && m_den.is_constant(); }
    BigRat constant_value() const;

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }
    RatFunc& operator/=(const RatFunc& o) { *this = *this / o; return *this; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.m_num == b.m_num && a.m_den == b.m_den;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    // Throws PoleError (naming the assignment) when the denominator vanishes.
    BigRat eval(const std::map<std::string, BigRat>& assignment) const;

    std::string to_string() const;

private:
    void normalize();

    MPoly m_num, m_den; // den defaults to the varless constant 1
};

} // namespace fmethod

#endif
