#include "fmethod/rational.hpp"

namespace fmethod {

BigRat::BigRat(long num, long den) {
    if (den == 0) throw DomainError("BigRat: zero denominator");
    m_q = mpq_class(static_cast<signed long>(num), static_cast<signed long>(den));
    m_q.canonicalize();
}

BigRat& BigRat::operator/=(const BigRat& o) {
    if (o.is_zero()) throw DomainError("BigRat: division by zero");
    m_q /= o.m_q;
    return *this;
}

BigRat BigRat::from_string(const std::string& s) {
    auto is_int = [](const std::string& t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    std::string num = s, den = "1";
    if (auto pos = s.find('/'); pos != std::string::npos) {
        num = s.substr(0, pos);
        den = s.substr(pos + 1);
    }
    if (!is_int(num) || !is_int(den))
        throw ParseError("BigRat: cannot parse \"" + s + "\" as p/q");
    // mpz_class rejects a leading '+' that is_int allows.
    if (num[0] == '+') num.erase(0, 1);
    if (den[0] == '+') den.erase(0, 1);
    mpz_class zn(num), zd(den);
    if (zd == 0) throw ParseError("BigRat: zero denominator in \"" + s + "\"");
    mpq_class q{zn, zd};
    q.canonicalize();
    return BigRat(q);
}

std::string BigRat::to_string() const {
    return m_q.get_num().get_str() + "/" + m_q.get_den().get_str();
}

std::string BigRat::to_pretty_string() const {
    if (is_integer()) return m_q.get_num().get_str();
    return to_string();
}

BigRat BigRat::inverse() const {
    if (is_zero()) throw DomainError("BigRat: inverse of zero");
    return BigRat(mpq_class(1) / m_q);
}

BigRat BigRat::pow(unsigned e) const {
    mpq_class r(1);
    mpq_class base = m_q;
    unsigned k = e;
    while (k) {
        if (k & 1u) r *= base;
        base *= base;
        k >>= 1u;
    }
    return BigRat(r);
}

BigRat rat_gcd(const BigRat& a, const BigRat& b) {
    if (a.is_zero()) return b.abs();
    if (b.is_zero()) return a.abs();
    mpz_class g, l;
    mpz_gcd(g.get_mpz_t(), a.raw().get_num().get_mpz_t(), b.raw().get_num().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), a.raw().get_den().get_mpz_t(), b.raw().get_den().get_mpz_t());
    mpq_class r(g, l);
    r.canonicalize();
    return BigRat(r);
}

BigRat rat_factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return BigRat(mpq_class(f));
}

BigRat rat_binomial(unsigned n, unsigned k) {
    if (k > n) return BigRat(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return BigRat(mpq_class(b));
}

BigRat rat_rising(const BigRat& n, unsigned len) {
    BigRat r(1);
    for (unsigned i = 0; i < len; ++i) r *= n + BigRat(static_cast<long>(i));
    return r;
}

BigRat rat_falling(const BigRat& n, unsigned len) {
    BigRat r(1);
    for (unsigned i = 0; i < len; ++i) r *= n - BigRat(static_cast<long>(i));
    return r;
}

} // namespace fmethod
