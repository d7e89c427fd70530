#include "fmethod/ratfunc.hpp"

namespace fmethod {

RatFunc::RatFunc(MPoly num, MPoly den) : m_num(std::move(num)), m_den(std::move(den)) {
    if (m_num.vars() != m_den.vars())
        throw StructuralError("RatFunc: mismatched variable lists");
    if (m_den.is_zero()) throw DomainError("RatFunc: zero denominator");
    normalize();
}

RatFunc::RatFunc(MPoly num)
    : m_num(std::move(num)), m_den(MPoly::constant(m_num.vars(), BigRat(1))) {}

RatFunc RatFunc::constant(std::vector<std::string> vars, const BigRat& c) {
    return RatFunc(MPoly::constant(std::move(vars), c));
}

RatFunc RatFunc::variable(std::vector<std::string> vars, size_t index) {
    return RatFunc(MPoly::variable(std::move(vars), index));
}

BigRat RatFunc::constant_value() const {
    if (!is_constant()) throw DomainError("RatFunc: not a constant");
    return m_num.constant_value() / m_den.constant_value();
}

void RatFunc::normalize() {
    if (m_num.is_zero()) {
        m_den = MPoly::constant(m_num.vars(), BigRat(1));
        return;
    }
    if (!m_den.is_constant()) {
        MPoly g = poly_gcd(m_num, m_den);
        if (!g.is_constant()) {
            m_num = m_num.exact_div(g);
            m_den = m_den.exact_div(g);
        }
    }
    BigRat lc = m_den.lead_coeff();
    if (!lc.is_one()) {
        BigRat inv = lc.inverse();
        m_num.scale(inv);
        m_den.scale(inv);
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.m_num = -r.m_num;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.m_num * b.m_den + b.m_num * a.m_den, a.m_den * b.m_den);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.m_num * b.m_den - b.m_num * a.m_den, a.m_den * b.m_den);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.m_num * b.m_num, a.m_den * b.m_den);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DomainError("RatFunc: division by zero");
    return RatFunc(a.m_num * b.m_den, a.m_den * b.m_num);
}

BigRat RatFunc::eval(const std::map<std::string, BigRat>& assignment) const {
    BigRat d = m_den.eval(assignment);
    if (d.is_zero()) {
        std::string at;
        for (const auto& [k, v] : assignment) {
            if (!at.empty()) at += ", ";
            at += k + "=" + v.to_pretty_string();
        }
        throw PoleError("RatFunc: denominator (" + m_den.to_string() + ") vanishes at {" + at + "}");
    }
    return m_num.eval(assignment) / d;
}

std::string RatFunc::to_string() const {
    if (is_polynomial()) return m_num.to_string();
    std::string n = m_num.to_string();
    std::string d = m_den.to_string();
    return "(" + n + ")/(" + d + ")";
}

} // namespace fmethod
