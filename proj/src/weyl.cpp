#include "fmethod/weyl.hpp"

#include <algorithm>

namespace fmethod {

namespace {

// Iterates all multi-indices 0 <= k <= lim componentwise.
template <typename F>
void odometer(const ExpVec& lim, F&& f) {
    ExpVec k(lim.size(), 0);
    while (true) {
        f(k);
        size_t i = 0;
        while (i < k.size() && k[i] == lim[i]) {
            k[i] = 0;
            ++i;
        }
        if (i == k.size()) break;
        ++k[i];
    }
}

// prod_v C(b_v,k_v) * C(c_v,k_v) * k_v!  (contraction weight in d^b z^c).
BigRat contraction_weight(const ExpVec& b, const ExpVec& c, const ExpVec& k) {
    BigRat w(1);
    for (size_t v = 0; v < k.size(); ++v) {
        if (!k[v]) continue;
        w *= rat_binomial(b[v], k[v]) * rat_binomial(c[v], k[v]) * rat_factorial(k[v]);
    }
    return w;
}

std::pair<int, std::string> coeff_body(const RatFunc& c) {
    if (c.is_constant()) {
        BigRat v = c.constant_value();
        return {v.sign(), v.abs().to_pretty_string()};
    }
    if (c.is_polynomial() && c.num().terms().size() == 1) {
        const auto& [e, coef] = *c.num().terms().begin();
        MPoly abs = MPoly::monomial(c.vars(), e, coef.abs());
        return {coef.sign(), abs.to_string()};
    }
    return {1, "(" + c.to_string() + ")"};
}

std::string join_monomial(const std::vector<std::string>& vars, const ExpVec& e,
                          const std::string& prefix) {
    std::string out;
    for (size_t i = 0; i < e.size(); ++i) {
        if (!e[i]) continue;
        if (!out.empty()) out += "*";
        out += prefix + vars[i];
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

std::string render_fiber_term(const FiberMatrix& m, const std::string& mono) {
    if (m.is_scalar()) {
        auto [sign, body] = coeff_body(m.at(0, 0));
        std::string piece;
        if (mono.empty())
            piece = body;
        else if (body == "1")
            piece = mono;
        else
            piece = body + "*" + mono;
        return (sign < 0 ? std::string("-") : std::string("")) + piece;
    }
    std::string mat = "[";
    for (size_t i = 0; i < m.rows(); ++i) {
        if (i) mat += "; ";
        for (size_t j = 0; j < m.cols(); ++j) {
            if (j) mat += ", ";
            mat += m.at(i, j).to_string();
        }
    }
    mat += "]";
    return mono.empty() ? mat : mat + "*" + mono;
}

std::string join_signed_pieces(const std::vector<std::string>& pieces) {
    if (pieces.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < pieces.size(); ++i) {
        std::string p = pieces[i];
        bool neg = !p.empty() && p[0] == '-';
        if (neg) p = p.substr(1);
        if (i == 0)
            out += neg ? "-" + p : p;
        else
            out += (neg ? " - " : " + ") + p;
    }
    return out;
}

} // namespace

// ---------------------------------------------------------------- FiberMatrix

FiberMatrix::FiberMatrix(size_t rows, size_t cols, std::vector<std::string> params)
    : m_rows(rows), m_cols(cols), m_params(std::move(params)),
      m_m(rows * cols, RatFunc(std::vector<std::string>(m_params))) {}

FiberMatrix FiberMatrix::scalar(RatFunc v) {
    FiberMatrix m(1, 1, v.vars());
    m.at(0, 0) = std::move(v);
    return m;
}

FiberMatrix FiberMatrix::identity(size_t n, std::vector<std::string> params) {
    FiberMatrix m(n, n, std::move(params));
    for (size_t i = 0; i < n; ++i) m.at(i, i) = RatFunc::constant(m.m_params, BigRat(1));
    return m;
}

const RatFunc& FiberMatrix::scalar_value() const {
    if (!is_scalar()) throw StructuralError("FiberMatrix: not scalar");
    return m_m[0];
}

bool FiberMatrix::is_zero() const {
    return std::all_of(m_m.begin(), m_m.end(), [](const RatFunc& e) { return e.is_zero(); });
}

FiberMatrix FiberMatrix::operator-() const {
    FiberMatrix r = *this;
    for (auto& e : r.m_m) e = -e;
    return r;
}

FiberMatrix& FiberMatrix::operator+=(const FiberMatrix& o) {
    if (m_rows != o.m_rows || m_cols != o.m_cols)
        throw StructuralError("FiberMatrix: dimension mismatch in +");
    for (size_t i = 0; i < m_m.size(); ++i) m_m[i] += o.m_m[i];
    return *this;
}

FiberMatrix& FiberMatrix::operator-=(const FiberMatrix& o) {
    if (m_rows != o.m_rows || m_cols != o.m_cols)
        throw StructuralError("FiberMatrix: dimension mismatch in -");
    for (size_t i = 0; i < m_m.size(); ++i) m_m[i] -= o.m_m[i];
    return *this;
}

FiberMatrix operator*(const FiberMatrix& a, const FiberMatrix& b) {
    if (a.m_cols != b.m_rows) throw StructuralError("FiberMatrix: dimension mismatch in *");
    if (a.is_scalar() && b.is_scalar()) return FiberMatrix::scalar(a.at(0, 0) * b.at(0, 0));
    FiberMatrix r(a.m_rows, b.m_cols, a.m_params);
    for (size_t i = 0; i < a.m_rows; ++i)
        for (size_t k = 0; k < a.m_cols; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (size_t j = 0; j < b.m_cols; ++j)
                if (!b.at(k, j).is_zero()) r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return r;
}

FiberMatrix& FiberMatrix::scale(const RatFunc& c) {
    for (auto& e : m_m) e *= c;
    return *this;
}

bool operator==(const FiberMatrix& a, const FiberMatrix& b) {
    return a.m_rows == b.m_rows && a.m_cols == b.m_cols && a.m_m == b.m_m;
}

FiberMatrix FiberMatrix::specialize(const std::map<std::string, BigRat>& assignment) const {
    FiberMatrix r(m_rows, m_cols, {});
    for (size_t i = 0; i < m_m.size(); ++i)
        r.m_m[i] = RatFunc::constant({}, m_m[i].eval(assignment));
    return r;
}

// ------------------------------------------------------------------ FiberPoly

FiberPoly::FiberPoly(std::vector<std::string> vars, std::vector<std::string> params,
                     size_t frows, size_t fcols)
    : m_vars(std::move(vars)), m_params(std::move(params)), m_frows(frows), m_fcols(fcols) {}

FiberPoly FiberPoly::from_scalar(const MPoly& position_poly, std::vector<std::string> params) {
    FiberPoly p(position_poly.vars(), std::move(params));
    for (const auto& [e, c] : position_poly.terms())
        p.m_terms.emplace(e, FiberMatrix::scalar(RatFunc::constant(p.m_params, c)));
    return p;
}

FiberPoly FiberPoly::monomial(std::vector<std::string> vars, const ExpVec& e, FiberMatrix c) {
    FiberPoly p(std::move(vars), c.params(), c.rows(), c.cols());
    if (e.size() != p.m_vars.size()) throw StructuralError("FiberPoly::monomial: exponent size");
    if (!c.is_zero()) p.m_terms.emplace(e, std::move(c));
    return p;
}

uint32_t FiberPoly::degree() const {
    uint32_t d = 0;
    for (const auto& [e, c] : m_terms) d = std::max(d, total_degree(e));
    return d;
}

bool FiberPoly::is_homogeneous() const {
    if (m_terms.empty()) return true;
    uint32_t d = total_degree(m_terms.begin()->first);
    for (const auto& [e, c] : m_terms)
        if (total_degree(e) != d) return false;
    return true;
}

FiberMatrix FiberPoly::coeff(const ExpVec& e) const {
    auto it = m_terms.find(e);
    if (it != m_terms.end()) return it->second;
    return FiberMatrix(m_frows, m_fcols, m_params);
}

void FiberPoly::add_term(const ExpVec& e, const FiberMatrix& c) {
    if (e.size() != m_vars.size()) throw StructuralError("FiberPoly::add_term: exponent size");
    if (c.rows() != m_frows || c.cols() != m_fcols)
        throw StructuralError("FiberPoly::add_term: fiber dimension mismatch");
    auto [it, inserted] = m_terms.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) m_terms.erase(it);
    } else if (it->second.is_zero()) {
        m_terms.erase(it);
    }
}

FiberPoly FiberPoly::operator-() const {
    FiberPoly r(m_vars, m_params, m_frows, m_fcols);
    for (const auto& [e, c] : m_terms) r.m_terms.emplace(e, -c);
    return r;
}

FiberPoly& FiberPoly::operator+=(const FiberPoly& o) {
    if (m_vars != o.m_vars) throw StructuralError("FiberPoly: mismatched variable lists");
    if (m_frows != o.m_frows || m_fcols != o.m_fcols)
        throw StructuralError("FiberPoly: fiber dimension mismatch");
    for (const auto& [e, c] : o.m_terms) add_term(e, c);
    return *this;
}

FiberPoly& FiberPoly::operator-=(const FiberPoly& o) {
    if (m_vars != o.m_vars) throw StructuralError("FiberPoly: mismatched variable lists");
    if (m_frows != o.m_frows || m_fcols != o.m_fcols)
        throw StructuralError("FiberPoly: fiber dimension mismatch");
    for (const auto& [e, c] : o.m_terms) add_term(e, -c);
    return *this;
}

FiberPoly& FiberPoly::scale(const RatFunc& c) {
    if (c.is_zero()) {
        m_terms.clear();
        return *this;
    }
    for (auto& [e, m] : m_terms) m.scale(c);
    return *this;
}

bool operator==(const FiberPoly& a, const FiberPoly& b) {
    return a.m_vars == b.m_vars && a.m_frows == b.m_frows && a.m_fcols == b.m_fcols &&
           a.m_terms == b.m_terms;
}

FiberPoly FiberPoly::specialize(const std::map<std::string, BigRat>& assignment) const {
    FiberPoly r(m_vars, {}, m_frows, m_fcols);
    for (const auto& [e, c] : m_terms) {
        FiberMatrix s = c.specialize(assignment);
        if (!s.is_zero()) r.m_terms.emplace(e, std::move(s));
    }
    return r;
}

std::string FiberPoly::to_string() const {
    std::vector<std::string> pieces;
    for (auto it = m_terms.rbegin(); it != m_terms.rend(); ++it)
        pieces.push_back(render_fiber_term(it->second, join_monomial(m_vars, it->first, "")));
    return join_signed_pieces(pieces);
}

// ---------------------------------------------------------------- WeylElement

bool WeylElement::Key::operator<(const Key& o) const {
    GrlexLess less;
    if (z != o.z) return less(z, o.z);
    return less(d, o.d);
}

WeylElement::WeylElement(std::vector<std::string> vars, std::vector<std::string> params,
                         size_t frows, size_t fcols)
    : m_vars(std::move(vars)), m_params(std::move(params)), m_frows(frows), m_fcols(fcols) {}

WeylElement WeylElement::constant(std::vector<std::string> vars, std::vector<std::string> params,
                                  const RatFunc& c) {
    WeylElement t(std::move(vars), std::move(params));
    ExpVec zero(t.m_vars.size(), 0);
    if (!c.is_zero()) t.m_terms.emplace(Key{zero, zero}, FiberMatrix::scalar(c));
    return t;
}

WeylElement WeylElement::position(std::vector<std::string> vars, std::vector<std::string> params,
                                  size_t i) {
    WeylElement t(std::move(vars), std::move(params));
    if (i >= t.m_vars.size()) throw StructuralError("WeylElement::position: index out of range");
    ExpVec z(t.m_vars.size(), 0), d(t.m_vars.size(), 0);
    z[i] = 1;
    t.m_terms.emplace(Key{z, d}, FiberMatrix::scalar(RatFunc::constant(t.m_params, BigRat(1))));
    return t;
}

WeylElement WeylElement::derivative(std::vector<std::string> vars, std::vector<std::string> params,
                                    size_t i) {
    WeylElement t(std::move(vars), std::move(params));
    if (i >= t.m_vars.size()) throw StructuralError("WeylElement::derivative: index out of range");
    ExpVec z(t.m_vars.size(), 0), d(t.m_vars.size(), 0);
    d[i] = 1;
    t.m_terms.emplace(Key{z, d}, FiberMatrix::scalar(RatFunc::constant(t.m_params, BigRat(1))));
    return t;
}

uint32_t WeylElement::order() const {
    uint32_t r = 0;
    for (const auto& [k, c] : m_terms) r = std::max(r, total_degree(k.d));
    return r;
}

uint32_t WeylElement::poly_degree() const {
    uint32_t r = 0;
    for (const auto& [k, c] : m_terms) r = std::max(r, total_degree(k.z));
    return r;
}

void WeylElement::add_term(const ExpVec& z, const ExpVec& d, const FiberMatrix& c) {
    if (z.size() != m_vars.size() || d.size() != m_vars.size())
        throw StructuralError("WeylElement::add_term: exponent size");
    if (c.rows() != m_frows || c.cols() != m_fcols)
        throw StructuralError("WeylElement::add_term: fiber dimension mismatch");
    if (c.is_zero()) return;
    Key key{z, d};
    auto [it, inserted] = m_terms.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) m_terms.erase(it);
    }
}

WeylElement WeylElement::operator-() const {
    WeylElement r(m_vars, m_params, m_frows, m_fcols);
    for (const auto& [k, c] : m_terms) r.m_terms.emplace(k, -c);
    return r;
}

WeylElement& WeylElement::operator+=(const WeylElement& o) {
    if (m_vars != o.m_vars) throw StructuralError("WeylElement: mismatched variable lists");
    if (m_frows != o.m_frows || m_fcols != o.m_fcols)
        throw StructuralError("WeylElement: fiber dimension mismatch");
    for (const auto& [k, c] : o.m_terms) add_term(k.z, k.d, c);
    return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o) {
    if (m_vars != o.m_vars) throw StructuralError("WeylElement: mismatched variable lists");
    if (m_frows != o.m_frows || m_fcols != o.m_fcols)
        throw StructuralError("WeylElement: fiber dimension mismatch");
    for (const auto& [k, c] : o.m_terms) add_term(k.z, k.d, -c);
    return *this;
}

WeylElement& WeylElement::scale(const RatFunc& c) {
    if (c.is_zero()) {
        m_terms.clear();
        return *this;
    }
    for (auto& [k, m] : m_terms) m.scale(c);
    return *this;
}

bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.m_vars == b.m_vars && a.m_frows == b.m_frows && a.m_fcols == b.m_fcols &&
           a.m_terms == b.m_terms;
}

WeylElement WeylElement::specialize(const std::map<std::string, BigRat>& assignment) const {
    WeylElement r(m_vars, {}, m_frows, m_fcols);
    for (const auto& [k, c] : m_terms) {
        FiberMatrix s = c.specialize(assignment);
        if (!s.is_zero()) r.m_terms.emplace(k, std::move(s));
    }
    return r;
}

std::string WeylElement::to_string() const {
    std::vector<std::string> pieces;
    for (auto it = m_terms.rbegin(); it != m_terms.rend(); ++it) {
        std::string mono = join_monomial(m_vars, it->first.z, "");
        std::string dpart = join_monomial(m_vars, it->first.d, "d");
        if (!dpart.empty()) mono = mono.empty() ? dpart : mono + "*" + dpart;
        pieces.push_back(render_fiber_term(it->second, mono));
    }
    return join_signed_pieces(pieces);
}

WeylElement weyl_mul(const WeylElement& a, const WeylElement& b) {
    if (a.vars() != b.vars()) throw StructuralError("weyl_mul: mismatched variable lists");
    if (a.fiber_cols() != b.fiber_rows())
        throw StructuralError("weyl_mul: fiber dimension mismatch");
    const size_t n = a.vars().size();
    WeylElement r(a.vars(), a.params(), a.fiber_rows(), b.fiber_cols());
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            FiberMatrix prod = ca * cb;
            if (prod.is_zero()) continue;
            // z^ka.z d^ka.d z^kb.z d^kb.d: contract d^ka.d with z^kb.z.
            ExpVec lim(n);
            for (size_t v = 0; v < n; ++v) lim[v] = std::min(ka.d[v], kb.z[v]);
            odometer(lim, [&](const ExpVec& k) {
                BigRat w = contraction_weight(ka.d, kb.z, k);
                ExpVec z(n), d(n);
                for (size_t v = 0; v < n; ++v) {
                    z[v] = ka.z[v] + kb.z[v] - k[v];
                    d[v] = ka.d[v] + kb.d[v] - k[v];
                }
                FiberMatrix c = prod;
                c.scale(RatFunc::constant(a.params(), w));
                r.add_term(z, d, c);
            });
        }
    }
    return r;
}

WeylElement weyl_commutator(const WeylElement& a, const WeylElement& b) {
    return weyl_mul(a, b) - weyl_mul(b, a);
}

FiberPoly apply(const WeylElement& t, const FiberPoly& f) {
    if (t.vars() != f.vars()) throw StructuralError("apply: mismatched variable lists");
    if (t.fiber_cols() != f.fiber_rows()) throw StructuralError("apply: fiber dimension mismatch");
    const size_t n = t.vars().size();
    FiberPoly r(t.vars(), t.params(), t.fiber_rows(), f.fiber_cols());
    for (const auto& [k, c] : t.terms()) {
        for (const auto& [e, m] : f.terms()) {
            BigRat w(1);
            bool kills = false;
            for (size_t v = 0; v < n; ++v) {
                if (e[v] < k.d[v]) {
                    kills = true;
                    break;
                }
                if (k.d[v]) w *= rat_falling(BigRat(static_cast<long>(e[v])), k.d[v]);
            }
            if (kills || w.is_zero()) continue;
            ExpVec out(n);
            for (size_t v = 0; v < n; ++v) out[v] = e[v] - k.d[v] + k.z[v];
            FiberMatrix cm = c * m;
            cm.scale(RatFunc::constant(t.params(), w));
            r.add_term(out, cm);
        }
    }
    return r;
}

std::vector<std::string> dual_var_names(const std::vector<std::string>& vars) {
    auto all_prefixed = [&](const std::string& prefix) {
        for (const auto& v : vars) {
            if (v.size() <= prefix.size() || v.compare(0, prefix.size(), prefix) != 0) return false;
            for (size_t i = prefix.size(); i < v.size(); ++i)
                if (!isdigit(static_cast<unsigned char>(v[i]))) return false;
        }
        return !vars.empty();
    };
    std::vector<std::string> out;
    out.reserve(vars.size());
    if (all_prefixed("zeta")) {
        for (const auto& v : vars) out.push_back("z" + v.substr(4));
    } else if (all_prefixed("z")) {
        for (const auto& v : vars) out.push_back("zeta" + v.substr(1));
    } else {
        for (size_t i = 0; i < vars.size(); ++i) out.push_back("zeta" + std::to_string(i + 1));
    }
    return out;
}

WeylElement fourier_hat(const WeylElement& t, std::vector<std::string> dual_vars) {
    if (dual_vars.size() != t.vars().size())
        throw StructuralError("fourier_hat: dual variable count mismatch");
    const size_t n = t.vars().size();
    WeylElement r(std::move(dual_vars), t.params(), t.fiber_rows(), t.fiber_cols());
    for (const auto& [k, c] : t.terms()) {
        // z^a d^b -> (d_dual)^a (-zeta)^b, then normal order d^a zeta^b.
        const ExpVec& a = k.z;
        const ExpVec& b = k.d;
        int sign = (total_degree(b) % 2 == 0) ? 1 : -1;
        ExpVec lim(n);
        for (size_t v = 0; v < n; ++v) lim[v] = std::min(a[v], b[v]);
        odometer(lim, [&](const ExpVec& kk) {
            BigRat w = contraction_weight(a, b, kk);
            if (sign < 0) w = -w;
            ExpVec z(n), d(n);
            for (size_t v = 0; v < n; ++v) {
                z[v] = b[v] - kk[v];
                d[v] = a[v] - kk[v];
            }
            FiberMatrix cm = c;
            cm.scale(RatFunc::constant(t.params(), w));
            r.add_term(z, d, cm);
        });
    }
    return r;
}

FiberPoly symb(const WeylElement& t, std::vector<std::string> dual_vars) {
    if (dual_vars.size() != t.vars().size())
        throw StructuralError("symb: dual variable count mismatch");
    FiberPoly p(std::move(dual_vars), t.params(), t.fiber_rows(), t.fiber_cols());
    for (const auto& [k, c] : t.terms()) {
        if (total_degree(k.z) != 0)
            throw DomainError("symb: operator has non-constant coefficients");
        p.add_term(k.d, c);
    }
    return p;
}

WeylElement symb_inv(const FiberPoly& p, std::vector<std::string> primal_vars) {
    if (primal_vars.size() != p.vars().size())
        throw StructuralError("symb_inv: variable count mismatch");
    WeylElement t(std::move(primal_vars), p.params(), p.fiber_rows(), p.fiber_cols());
    ExpVec zero(p.vars().size(), 0);
    for (const auto& [e, c] : p.terms()) t.add_term(zero, e, c);
    return t;
}

} // namespace fmethod
