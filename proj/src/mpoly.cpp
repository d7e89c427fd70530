#include "fmethod/mpoly.hpp"

#include <algorithm>

namespace fmethod {

uint32_t total_degree(const ExpVec& e) {
    uint32_t d = 0;
    for (uint32_t x : e) d += x;
    return d;
}

bool GrlexLess::operator()(const ExpVec& a, const ExpVec& b) const {
    uint32_t da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    for (size_t i = 0; i < a.size() && i < b.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return a.size() < b.size();
}

MPoly MPoly::constant(std::vector<std::string> vars, const BigRat& c) {
    MPoly p(std::move(vars));
    if (!c.is_zero()) p.m_terms.emplace(ExpVec(p.m_vars.size(), 0), c);
    return p;
}

MPoly MPoly::variable(std::vector<std::string> vars, size_t index) {
    if (index >= vars.size()) throw StructuralError("MPoly::variable: index out of range");
    MPoly p(std::move(vars));
    ExpVec e(p.m_vars.size(), 0);
    e[index] = 1;
    p.m_terms.emplace(std::move(e), BigRat(1));
    return p;
}

MPoly MPoly::monomial(std::vector<std::string> vars, const ExpVec& e, const BigRat& c) {
    if (e.size() != vars.size()) throw StructuralError("MPoly::monomial: exponent size mismatch");
    MPoly p(std::move(vars));
    if (!c.is_zero()) p.m_terms.emplace(e, c);
    return p;
}

bool MPoly::is_constant() const {
    return m_terms.empty() || (m_terms.size() == 1 && total_degree(m_terms.begin()->first) == 0);
}

BigRat MPoly::constant_value() const {
    auto it = m_terms.find(ExpVec(m_vars.size(), 0));
    return it == m_terms.end() ? BigRat(0) : it->second;
}

uint32_t MPoly::degree() const {
    if (m_terms.empty()) return 0;
    return total_degree(m_terms.rbegin()->first);
}

uint32_t MPoly::degree_in(size_t var_index) const {
    uint32_t d = 0;
    for (const auto& [e, c] : m_terms) d = std::max(d, e[var_index]);
    return d;
}

const BigRat& MPoly::coeff(const ExpVec& e) const {
    static const BigRat zero(0);
    auto it = m_terms.find(e);
    return it == m_terms.end() ? zero : it->second;
}

void MPoly::set_coeff(const ExpVec& e, const BigRat& c) {
    if (e.size() != m_vars.size()) throw StructuralError("MPoly::set_coeff: exponent size mismatch");
    if (c.is_zero())
        m_terms.erase(e);
    else
        m_terms[e] = c;
}

BigRat MPoly::lead_coeff() const {
    return m_terms.empty() ? BigRat(0) : m_terms.rbegin()->second;
}

ExpVec MPoly::lead_exp() const {
    return m_terms.empty() ? ExpVec(m_vars.size(), 0) : m_terms.rbegin()->first;
}

void MPoly::check_same_vars(const MPoly& o) const {
    if (m_vars != o.m_vars)
        throw StructuralError("MPoly: mismatched variable lists");
}

MPoly MPoly::operator-() const {
    MPoly r(m_vars);
    for (const auto& [e, c] : m_terms) r.m_terms.emplace(e, -c);
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    check_same_vars(o);
    for (const auto& [e, c] : o.m_terms) {
        auto [it, inserted] = m_terms.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) m_terms.erase(it);
        }
    }
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    check_same_vars(o);
    for (const auto& [e, c] : o.m_terms) {
        auto [it, inserted] = m_terms.try_emplace(e, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second.is_zero()) m_terms.erase(it);
        }
    }
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check_same_vars(b);
    MPoly r(a.m_vars);
    for (const auto& [ea, ca] : a.m_terms) {
        for (const auto& [eb, cb] : b.m_terms) {
            ExpVec e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            BigRat c = ca * cb;
            auto [it, inserted] = r.m_terms.try_emplace(std::move(e), c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) r.m_terms.erase(it);
            }
        }
    }
    return r;
}

MPoly& MPoly::scale(const BigRat& c) {
    if (c.is_zero()) {
        m_terms.clear();
        return *this;
    }
    for (auto& [e, v] : m_terms) v *= c;
    return *this;
}

MPoly MPoly::pow(unsigned e) const {
    MPoly r = MPoly::constant(m_vars, BigRat(1));
    MPoly base = *this;
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

bool operator==(const MPoly& a, const MPoly& b) {
    return a.m_vars == b.m_vars && a.m_terms == b.m_terms;
}

BigRat MPoly::eval(const std::map<std::string, BigRat>& assignment) const {
    std::vector<BigRat> vals;
    vals.reserve(m_vars.size());
    for (const auto& v : m_vars) {
        auto it = assignment.find(v);
        if (it == assignment.end())
            throw DomainError("MPoly::eval: no value for variable " + v);
        vals.push_back(it->second);
    }
    BigRat sum(0);
    for (const auto& [e, c] : m_terms) {
        BigRat t = c;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i]) t *= vals[i].pow(e[i]);
        sum += t;
    }
    return sum;
}

BigRat MPoly::content() const {
    BigRat g(0);
    for (const auto& [e, c] : m_terms) g = rat_gcd(g, c);
    return g;
}

MPoly MPoly::primitive_part() const {
    if (is_zero()) return *this;
    BigRat g = content();
    if (lead_coeff().sign() < 0) g = -g;
    MPoly r(m_vars);
    for (const auto& [e, c] : m_terms) r.m_terms.emplace(e, c / g);
    return r;
}

MPoly MPoly::exact_div(const MPoly& divisor) const {
    check_same_vars(divisor);
    if (divisor.is_zero()) throw DomainError("MPoly::exact_div: division by zero");
    MPoly quotient(m_vars);
    MPoly rem = *this;
    const ExpVec de = divisor.lead_exp();
    const BigRat dc = divisor.lead_coeff();
    while (!rem.is_zero()) {
        const ExpVec re = rem.lead_exp();
        ExpVec qe(re.size());
        for (size_t i = 0; i < re.size(); ++i) {
            if (re[i] < de[i]) throw DomainError("MPoly::exact_div: not divisible");
            qe[i] = re[i] - de[i];
        }
        BigRat qc = rem.lead_coeff() / dc;
        MPoly t = MPoly::monomial(m_vars, qe, qc);
        quotient += t;
        rem -= t * divisor;
    }
    return quotient;
}

std::string MPoly::to_string() const {
    if (m_terms.empty()) return "0";
    std::string out;
    bool first = true;
    // Descending grlex: leading term first.
    for (auto it = m_terms.rbegin(); it != m_terms.rend(); ++it) {
        const auto& [e, c] = *it;
        BigRat a = c.abs();
        if (first) {
            if (c.sign() < 0) out += "-";
            first = false;
        } else {
            out += (c.sign() < 0) ? " - " : " + ";
        }
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += m_vars[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out += a.to_pretty_string();
        } else if (a.is_one()) {
            out += mono;
        } else {
            out += a.to_pretty_string() + "*" + mono;
        }
    }
    return out;
}

namespace {

// Univariate view in variable k: exponent of k -> coefficient polynomial in
// the remaining variables.
std::vector<std::string> vars_without(const std::vector<std::string>& vars, size_t k) {
    std::vector<std::string> r;
    r.reserve(vars.size() - 1);
    for (size_t i = 0; i < vars.size(); ++i)
        if (i != k) r.push_back(vars[i]);
    return r;
}

std::map<uint32_t, MPoly> to_univar(const MPoly& p, size_t k) {
    const auto sub = vars_without(p.vars(), k);
    std::map<uint32_t, MPoly> out;
    for (const auto& [e, c] : p.terms()) {
        ExpVec rest;
        rest.reserve(e.size() - 1);
        for (size_t i = 0; i < e.size(); ++i)
            if (i != k) rest.push_back(e[i]);
        auto [it, inserted] = out.try_emplace(e[k], MPoly(sub));
        it->second += MPoly::monomial(sub, rest, c);
    }
    return out;
}

MPoly from_univar(const std::map<uint32_t, MPoly>& coeffs, size_t k,
                  const std::vector<std::string>& vars) {
    MPoly out((std::vector<std::string>(vars)));
    for (const auto& [dk, cp] : coeffs) {
        for (const auto& [rest, c] : cp.terms()) {
            ExpVec e(vars.size());
            size_t j = 0;
            for (size_t i = 0; i < vars.size(); ++i)
                e[i] = (i == k) ? dk : rest[j++];
            out += MPoly::monomial(vars, e, c);
        }
    }
    return out;
}

uint32_t univar_deg(const std::map<uint32_t, MPoly>& u) {
    return u.empty() ? 0 : u.rbegin()->first;
}

// Pseudo-remainder of a by b in the main variable: lc(b)^(da-db+1) * a mod b,
// all divisions exact by construction.
std::map<uint32_t, MPoly> pseudo_rem(std::map<uint32_t, MPoly> r,
                                     const std::map<uint32_t, MPoly>& b) {
    const uint32_t db = univar_deg(b);
    const MPoly& lcb = b.rbegin()->second;
    long e = static_cast<long>(univar_deg(r)) - static_cast<long>(db) + 1;
    while (!r.empty() && univar_deg(r) >= db) {
        uint32_t dr = univar_deg(r);
        MPoly t = r.rbegin()->second;
        // r = lcb * r - t * b * x^(dr-db)
        std::map<uint32_t, MPoly> next;
        for (const auto& [d, c] : r) {
            MPoly v = lcb * c;
            if (!v.is_zero()) next.emplace(d, std::move(v));
        }
        for (const auto& [d, c] : b) {
            uint32_t dd = d + (dr - db);
            MPoly v = t * c;
            auto [it, inserted] = next.try_emplace(dd, -v);
            if (!inserted) {
                it->second -= v;
                if (it->second.is_zero()) next.erase(it);
            }
        }
        r = std::move(next);
        e -= 1;
    }
    if (e > 0 && !r.empty()) {
        MPoly f = lcb;
        for (long i = 1; i < e; ++i) f *= lcb;
        for (auto& [d, c] : r) c *= f;
    }
    return r;
}

MPoly univar_content(const std::map<uint32_t, MPoly>& u) {
    if (u.empty()) return MPoly();
    MPoly g(u.begin()->second.vars());
    for (const auto& [d, c] : u) g = poly_gcd(g, c);
    return g;
}

} // namespace

MPoly poly_gcd(const MPoly& a, const MPoly& b) {
    if (a.is_zero() && b.is_zero()) return a;
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    if (a.vars() != b.vars()) throw StructuralError("poly_gcd: mismatched variable lists");
    if (a.is_constant() || b.is_constant())
        return MPoly::constant(a.vars(), BigRat(1));

    // Main variable: first one occurring in either operand.
    size_t k = 0;
    while (a.degree_in(k) == 0 && b.degree_in(k) == 0) ++k;
    if (a.degree_in(k) == 0 || b.degree_in(k) == 0) {
        // One operand is free of the main variable; the gcd is its gcd with
        // the other operand's content in that variable.
        const MPoly& flat = (a.degree_in(k) == 0) ? a : b;
        const MPoly& tall = (a.degree_in(k) == 0) ? b : a;
        auto u = to_univar(tall, k);
        MPoly cont = from_univar({{0, univar_content(u)}}, k, a.vars());
        return poly_gcd(flat, cont);
    }

    auto ua = to_univar(a, k);
    auto ub = to_univar(b, k);
    MPoly ca = univar_content(ua);
    MPoly cb = univar_content(ub);
    MPoly cg = poly_gcd(ca, cb);

    auto strip = [](std::map<uint32_t, MPoly>& u, const MPoly& c) {
        for (auto& [d, p] : u) p = p.exact_div(c);
    };
    strip(ua, ca);
    strip(ub, cb);

    // Primitive PRS on the primitive parts.
    auto A = std::move(ua);
    auto B = std::move(ub);
    if (univar_deg(A) < univar_deg(B)) std::swap(A, B);
    while (true) {
        if (B.empty()) break;
        if (univar_deg(B) == 0) {
            // Coprime in the main variable.
            A.clear();
            A.emplace(0, MPoly::constant(vars_without(a.vars(), k), BigRat(1)));
            break;
        }
        auto R = pseudo_rem(A, B);
        A = std::move(B);
        if (R.empty()) {
            B.clear();
        } else {
            MPoly c = univar_content(R);
            strip(R, c);
            B = std::move(R);
        }
    }

    MPoly pp = from_univar(A, k, a.vars());
    MPoly g = from_univar({{0, cg}}, k, a.vars()) * pp;
    return g.primitive_part();
}

MPoly poly_lcm(const MPoly& a, const MPoly& b) {
    if (a.is_zero() || b.is_zero()) return MPoly(a.vars());
    MPoly g = poly_gcd(a, b);
    return (a * b).exact_div(g).primitive_part();
}

MPoly compose(const MPoly& p, const std::vector<MPoly>& images) {
    if (images.size() != p.vars().size())
        throw StructuralError("compose: one image per variable required");
    std::vector<std::string> out_vars =
        images.empty() ? std::vector<std::string>{} : images[0].vars();
    for (const auto& im : images)
        if (im.vars() != out_vars)
            throw StructuralError("compose: images must share one variable list");
    MPoly r(out_vars);
    for (const auto& [e, c] : p.terms()) {
        MPoly t = MPoly::constant(out_vars, c);
        for (size_t v = 0; v < e.size(); ++v)
            if (e[v]) t *= images[v].pow(e[v]);
        r += t;
    }
    return r;
}

} // namespace fmethod
