#include "fmethod/lie.hpp"

#include "fmethod/matrix.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <set>

namespace fmethod {

namespace {

using ordered_json = nlohmann::ordered_json;

LieVec lie_add(const LieVec& a, const LieVec& b) {
    LieVec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

LieVec lie_sub(const LieVec& a, const LieVec& b) {
    LieVec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

LieVec lie_scale(const LieVec& a, const BigRat& c) {
    LieVec r = a;
    for (auto& e : r) e.scale(c);
    return r;
}

} // namespace

// ------------------------------------------------------------------ GradedLie

GradedLie::GradedLie(std::string name, std::vector<BasisElement> basis)
    : m_name(std::move(name)), m_basis(std::move(basis)) {
    std::set<std::string> seen;
    for (const auto& b : m_basis) {
        if (b.name.empty()) throw StructuralError("GradedLie: empty basis name");
        if (!seen.insert(b.name).second)
            throw StructuralError(cat("GradedLie: duplicate basis name '", b.name, "'"));
    }
    m_c.assign(dim(), std::vector<std::map<size_t, BigRat>>(dim()));
}

size_t GradedLie::index_of(const std::string& basis_name) const {
    for (size_t i = 0; i < m_basis.size(); ++i)
        if (m_basis[i].name == basis_name) return i;
    throw DomainError(cat("GradedLie: unknown basis element '", basis_name, "'"));
}

std::vector<size_t> GradedLie::indices_with_grade(int g) const {
    std::vector<size_t> out;
    for (size_t i = 0; i < m_basis.size(); ++i)
        if (m_basis[i].grade == g) out.push_back(i);
    return out;
}

void GradedLie::set_bracket(size_t i, size_t j, const std::map<size_t, BigRat>& result) {
    if (i >= dim() || j >= dim()) throw StructuralError("GradedLie::set_bracket: index");
    std::map<size_t, BigRat> cleaned;
    for (const auto& [k, c] : result) {
        if (k >= dim()) throw StructuralError("GradedLie::set_bracket: result index");
        if (!c.is_zero()) cleaned.emplace(k, c);
    }
    if (i == j && !cleaned.empty())
        throw StructuralError("GradedLie::set_bracket: [x, x] must vanish");
    std::map<size_t, BigRat> negated;
    for (const auto& [k, c] : cleaned) negated.emplace(k, -c);
    m_c[i][j] = std::move(cleaned);
    m_c[j][i] = std::move(negated);
}

const std::map<size_t, BigRat>& GradedLie::bracket_basis(size_t i, size_t j) const {
    if (i >= dim() || j >= dim()) throw StructuralError("GradedLie::bracket_basis: index");
    return m_c[i][j];
}

void GradedLie::set_subalgebra(SubAlgebra sub) {
    if (sub.names.size() != sub.combos.size())
        throw StructuralError("GradedLie: subalgebra names/combos size mismatch");
    for (const auto& combo : sub.combos)
        if (combo.size() != dim())
            throw StructuralError("GradedLie: subalgebra combination has wrong length");
    std::set<std::string> seen;
    for (const auto& n : sub.names)
        if (n.empty() || !seen.insert(n).second)
            throw StructuralError("GradedLie: bad subalgebra element name");
    m_sub = std::move(sub);
}

int GradedLie::sub_grade(size_t k) const {
    if (k >= m_sub.combos.size()) throw StructuralError("GradedLie::sub_grade: index");
    const auto& combo = m_sub.combos[k];
    int g = 0;
    bool found = false;
    for (size_t i = 0; i < combo.size(); ++i) {
        if (combo[i].is_zero()) continue;
        if (!found) {
            g = m_basis[i].grade;
            found = true;
        } else if (m_basis[i].grade != g) {
            throw StructuralError(
                cat("GradedLie: subalgebra element '", m_sub.names[k], "' is not homogeneous"));
        }
    }
    if (!found)
        throw StructuralError(cat("GradedLie: subalgebra element '", m_sub.names[k], "' is zero"));
    return g;
}

void GradedLie::validate() const {
    const size_t n = dim();
    for (size_t i = 0; i < n; ++i)
        if (m_basis[i].grade < -1 || m_basis[i].grade > 1)
            throw StructuralError(cat("GradedLie: grade of '", m_basis[i].name,
                                      "' outside {-1, 0, +1}"));
    for (size_t i = 0; i < n; ++i) {
        if (!m_c[i][i].empty()) throw StructuralError("GradedLie: [x, x] nonzero");
        for (size_t j = 0; j < n; ++j) {
            for (const auto& [k, c] : m_c[i][j]) {
                auto it = m_c[j][i].find(k);
                if (it == m_c[j][i].end() || it->second != -c)
                    throw StructuralError(cat("GradedLie: bracket of '", m_basis[i].name, "', '",
                                              m_basis[j].name, "' is not antisymmetric"));
            }
            int gsum = m_basis[i].grade + m_basis[j].grade;
            for (const auto& [k, c] : m_c[i][j]) {
                (void)c;
                if (m_basis[k].grade != gsum)
                    throw StructuralError(cat("GradedLie: bracket of '", m_basis[i].name, "', '",
                                              m_basis[j].name, "' violates the grading"));
            }
            if ((gsum < -1 || gsum > 1) && !m_c[i][j].empty())
                throw StructuralError(cat("GradedLie: bracket of '", m_basis[i].name, "', '",
                                          m_basis[j].name, "' leaves the graded range"));
        }
    }
    // Jacobi: [[i,j],k] + [[j,k],i] + [[k,i],j] = 0 on basis triples.
    auto bracket_into = [&](size_t a, const std::map<size_t, BigRat>& v, const BigRat& w,
                            std::map<size_t, BigRat>& acc) {
        for (const auto& [m, c] : v)
            for (const auto& [k, d] : m_c[a][m]) acc[k] += w * c * d;
    };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k) {
                std::map<size_t, BigRat> acc;
                // [[i,j],k] = -[k,[i,j]]
                bracket_into(k, m_c[i][j], BigRat(-1), acc);
                bracket_into(i, m_c[j][k], BigRat(-1), acc);
                bracket_into(j, m_c[k][i], BigRat(-1), acc);
                for (const auto& [m, c] : acc)
                    if (!c.is_zero())
                        throw StructuralError(cat("GradedLie: Jacobi fails on '", m_basis[i].name,
                                                  "', '", m_basis[j].name, "', '", m_basis[k].name,
                                                  "' at '", m_basis[m].name, "'"));
            }
    if (!has_subalgebra()) return;
    const size_t s = m_sub.names.size();
    for (size_t k = 0; k < s; ++k) sub_grade(k); // homogeneity and nonzero
    // Closure: the bracket of any two subalgebra vectors lies in their span.
    ExactMatrix span(n, s, {});
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < s; ++k)
            span.at(i, k) = RatFunc::constant({}, m_sub.combos[k][i]);
    std::vector<std::string> novars;
    for (size_t k = 0; k < s; ++k)
        for (size_t l = k + 1; l < s; ++l) {
            LieVec br = bracket(combo_vec(m_sub.combos[k], novars),
                                combo_vec(m_sub.combos[l], novars));
            std::vector<RatFunc> rhs(n);
            for (size_t i = 0; i < n; ++i)
                rhs[i] = RatFunc::constant({}, br[i].is_zero() ? BigRat(0)
                                                               : br[i].terms().begin()->second);
            if (!linear_solve(span, rhs))
                throw StructuralError(cat("GradedLie: subalgebra span not closed under ['",
                                          m_sub.names[k], "', '", m_sub.names[l], "']"));
        }
}

LieVec GradedLie::zero_vec(const std::vector<std::string>& vars) const {
    return LieVec(dim(), MPoly(vars));
}

LieVec GradedLie::basis_vec(size_t i, const std::vector<std::string>& vars) const {
    if (i >= dim()) throw StructuralError("GradedLie::basis_vec: index");
    LieVec v = zero_vec(vars);
    v[i] = MPoly::constant(vars, BigRat(1));
    return v;
}

LieVec GradedLie::combo_vec(const std::vector<BigRat>& combo,
                            const std::vector<std::string>& vars) const {
    if (combo.size() != dim()) throw StructuralError("GradedLie::combo_vec: length");
    LieVec v = zero_vec(vars);
    for (size_t i = 0; i < combo.size(); ++i) v[i] = MPoly::constant(vars, combo[i]);
    return v;
}

LieVec GradedLie::bracket(const LieVec& a, const LieVec& b) const {
    if (a.size() != dim() || b.size() != dim())
        throw StructuralError("GradedLie::bracket: coordinate vector length");
    std::vector<std::string> vars = a.empty() ? std::vector<std::string>{} : a[0].vars();
    LieVec r = zero_vec(vars);
    for (size_t i = 0; i < dim(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < dim(); ++j) {
            if (b[j].is_zero() || m_c[i][j].empty()) continue;
            MPoly prod = a[i] * b[j];
            for (const auto& [k, c] : m_c[i][j]) {
                MPoly t = prod;
                t.scale(c);
                r[k] += t;
            }
        }
    }
    return r;
}

LieVec GradedLie::component(const LieVec& a, int g) const {
    if (a.size() != dim()) throw StructuralError("GradedLie::component: length");
    LieVec r = a;
    for (size_t i = 0; i < dim(); ++i)
        if (m_basis[i].grade != g) r[i] = MPoly(r[i].vars());
    return r;
}

GradedLie GradedLie::subalgebra_algebra() const {
    if (!has_subalgebra()) throw StructuralError("GradedLie: no subalgebra present");
    const size_t s = m_sub.names.size();
    std::vector<BasisElement> sub_basis;
    sub_basis.reserve(s);
    for (size_t k = 0; k < s; ++k) sub_basis.push_back({m_sub.names[k], sub_grade(k)});
    GradedLie out(m_name + "_sub", std::move(sub_basis));
    ExactMatrix span(dim(), s, {});
    for (size_t i = 0; i < dim(); ++i)
        for (size_t k = 0; k < s; ++k)
            span.at(i, k) = RatFunc::constant({}, m_sub.combos[k][i]);
    std::vector<std::string> novars;
    for (size_t k = 0; k < s; ++k)
        for (size_t l = k + 1; l < s; ++l) {
            LieVec br = bracket(combo_vec(m_sub.combos[k], novars),
                                combo_vec(m_sub.combos[l], novars));
            std::vector<RatFunc> rhs(dim());
            for (size_t i = 0; i < dim(); ++i)
                rhs[i] = RatFunc::constant({}, br[i].is_zero() ? BigRat(0)
                                                               : br[i].terms().begin()->second);
            auto sol = linear_solve(span, rhs);
            if (!sol)
                throw StructuralError(cat("GradedLie: subalgebra span not closed under ['",
                                          m_sub.names[k], "', '", m_sub.names[l], "']"));
            std::map<size_t, BigRat> result;
            for (size_t m = 0; m < s; ++m) {
                if ((*sol)[m].is_zero()) continue;
                if (!(*sol)[m].is_constant())
                    throw StructuralError("GradedLie: non-constant subalgebra coordinate");
                result.emplace(m, (*sol)[m].constant_value());
            }
            out.set_bracket(k, l, result);
        }
    return out;
}

// ----------------------------------------------------------- GradedLie (json)

GradedLie GradedLie::from_json_text(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(cat("algebra description is not valid JSON: ", e.what()));
    }
    try {
        std::vector<BasisElement> basis;
        for (const auto& b : j.at("basis"))
            basis.push_back({b.at("name").get<std::string>(), b.at("grade").get<int>()});
        GradedLie g(j.value("name", std::string("algebra")), std::move(basis));
        for (const auto& br : j.at("brackets")) {
            size_t i = g.index_of(br.at("left").get<std::string>());
            size_t k = g.index_of(br.at("right").get<std::string>());
            std::map<size_t, BigRat> result;
            for (const auto& t : br.at("result"))
                result[g.index_of(t.at("basis").get<std::string>())] =
                    BigRat::from_string(t.at("coeff").get<std::string>());
            g.set_bracket(i, k, result);
        }
        if (j.contains("subalgebra")) {
            const auto& sj = j.at("subalgebra");
            SubAlgebra sub;
            if (sj.contains("members")) {
                // Marked-subset shorthand: the subalgebra is spanned by a
                // subset of the ambient basis.
                for (const auto& m : sj.at("members")) {
                    std::string name = m.get<std::string>();
                    std::vector<BigRat> combo(g.dim(), BigRat(0));
                    combo[g.index_of(name)] = BigRat(1);
                    sub.names.push_back(std::move(name));
                    sub.combos.push_back(std::move(combo));
                }
            } else {
                for (const auto& el : sj.at("elements")) {
                    std::vector<BigRat> combo(g.dim(), BigRat(0));
                    for (const auto& t : el.at("combo"))
                        combo[g.index_of(t.at("basis").get<std::string>())] =
                            BigRat::from_string(t.at("coeff").get<std::string>());
                    sub.names.push_back(el.at("name").get<std::string>());
                    sub.combos.push_back(std::move(combo));
                }
            }
            g.set_subalgebra(std::move(sub));
        }
        g.validate();
        return g;
    } catch (const ordered_json::exception& e) {
        throw ParseError(cat("algebra description is malformed: ", e.what()));
    }
}

std::string GradedLie::to_json_text() const {
    ordered_json j;
    j["schema_version"] = 1;
    j["name"] = m_name;
    j["basis"] = ordered_json::array();
    for (const auto& b : m_basis) j["basis"].push_back({{"name", b.name}, {"grade", b.grade}});
    j["brackets"] = ordered_json::array();
    for (size_t i = 0; i < dim(); ++i)
        for (size_t k = i + 1; k < dim(); ++k) {
            if (m_c[i][k].empty()) continue;
            ordered_json entry;
            entry["left"] = m_basis[i].name;
            entry["right"] = m_basis[k].name;
            entry["result"] = ordered_json::array();
            for (const auto& [m, c] : m_c[i][k])
                entry["result"].push_back(
                    {{"basis", m_basis[m].name}, {"coeff", c.to_string()}});
            j["brackets"].push_back(std::move(entry));
        }
    if (has_subalgebra()) {
        ordered_json elements = ordered_json::array();
        for (size_t k = 0; k < m_sub.names.size(); ++k) {
            ordered_json el;
            el["name"] = m_sub.names[k];
            el["combo"] = ordered_json::array();
            for (size_t i = 0; i < dim(); ++i)
                if (!m_sub.combos[k][i].is_zero())
                    el["combo"].push_back({{"basis", m_basis[i].name},
                                           {"coeff", m_sub.combos[k][i].to_string()}});
            elements.push_back(std::move(el));
        }
        j["subalgebra"] = {{"elements", std::move(elements)}};
    }
    return j.dump(2) + "\n";
}

// ------------------------------------------------------------------ RepWeight

RepWeight::RepWeight(std::vector<std::string> params, std::map<std::string, MPoly> values)
    : m_params(std::move(params)), m_values(std::move(values)) {
    for (const auto& [name, v] : m_values)
        if (v.vars() != m_params)
            throw StructuralError(cat("RepWeight: value of '", name,
                                      "' is not a polynomial in the declared parameters"));
}

bool RepWeight::has(const std::string& basis_name) const {
    return m_values.count(basis_name) != 0;
}

const MPoly& RepWeight::value(const std::string& basis_name) const {
    auto it = m_values.find(basis_name);
    if (it == m_values.end())
        throw DomainError(cat("RepWeight: no value for basis element '", basis_name, "'"));
    return it->second;
}

void RepWeight::validate_character(const GradedLie& g) const {
    auto l = g.indices_with_grade(0);
    for (size_t a : l)
        if (!has(g.basis(a).name))
            throw StructuralError(
                cat("RepWeight: missing value for grade-0 element '", g.basis(a).name, "'"));
    for (size_t a : l)
        for (size_t b : l) {
            if (a >= b) continue;
            MPoly pairing(m_params);
            for (const auto& [k, c] : g.bracket_basis(a, b)) {
                MPoly t = value(g.basis(k).name);
                t.scale(c);
                pairing += t;
            }
            if (!pairing.is_zero())
                throw StructuralError(cat("RepWeight: not a character, nonzero on ['",
                                          g.basis(a).name, "', '", g.basis(b).name, "']"));
        }
}

RepWeight mu_from_lambda(const GradedLie& g, const RepWeight& lambda) {
    auto plus = g.indices_with_grade(+1);
    std::map<std::string, MPoly> values;
    for (size_t i : g.indices_with_grade(0)) {
        const std::string& name = g.basis(i).name;
        BigRat trace(0);
        for (size_t j : plus) {
            auto it = g.bracket_basis(i, j).find(j);
            if (it != g.bracket_basis(i, j).end()) trace += it->second;
        }
        MPoly v = lambda.value(name);
        v.scale(BigRat(-1));
        v += MPoly::constant(lambda.params(), trace);
        values.emplace(name, std::move(v));
    }
    return RepWeight(lambda.params(), std::move(values));
}

RepWeight restrict_weight(const GradedLie& g, const RepWeight& w) {
    if (!g.has_subalgebra()) throw StructuralError("restrict_weight: no subalgebra present");
    std::map<std::string, MPoly> values;
    const auto& sub = g.sub();
    for (size_t k = 0; k < sub.names.size(); ++k) {
        if (g.sub_grade(k) != 0) continue;
        MPoly v(w.params());
        for (size_t i = 0; i < g.dim(); ++i) {
            if (sub.combos[k][i].is_zero()) continue;
            MPoly t = w.value(g.basis(i).name);
            t.scale(sub.combos[k][i]);
            v += t;
        }
        values.emplace(sub.names[k], std::move(v));
    }
    return RepWeight(w.params(), std::move(values));
}

// ------------------------------------------------------------------------ dpi

WeylElement dpi(const GradedLie& g, const RepWeight& mu, const LieVec& y,
                const std::vector<std::string>& coord_vars) {
    auto minus = g.indices_with_grade(-1);
    if (coord_vars.size() != minus.size())
        throw StructuralError("dpi: one coordinate per grade -1 basis element required");
    if (y.size() != g.dim()) throw StructuralError("dpi: coordinate vector length");
    const size_t n = coord_vars.size();

    LieVec x = g.zero_vec(coord_vars);
    for (size_t j = 0; j < n; ++j) x[minus[j]] = MPoly::variable(coord_vars, j);

    LieVec y0 = g.component(y, 0);
    LieVec yp = g.component(y, +1);
    LieVec ym = g.component(y, -1);

    LieVec alpha = lie_sub(y0, g.bracket(x, yp));
    LieVec beta = lie_add(lie_sub(ym, g.bracket(x, y0)),
                          lie_scale(g.bracket(x, g.bracket(x, yp)), BigRat(1, 2)));

    WeylElement t(coord_vars, mu.params(), 1, 1);
    ExpVec zero_d(n, 0);
    for (size_t i = 0; i < g.dim(); ++i) {
        if (alpha[i].is_zero()) continue;
        if (g.grade(i) != 0) throw StructuralError("dpi: alpha leaves the grade-0 part");
        RatFunc mu_i{mu.value(g.basis(i).name)};
        for (const auto& [e, c] : alpha[i].terms())
            t.add_term(e, zero_d,
                       FiberMatrix::scalar(mu_i * RatFunc::constant(mu.params(), c)));
    }
    for (size_t i = 0; i < g.dim(); ++i)
        if (!beta[i].is_zero() && g.grade(i) != -1)
            throw StructuralError("dpi: beta leaves the grade -1 part");
    for (size_t j = 0; j < n; ++j) {
        const MPoly& bj = beta[minus[j]];
        ExpVec d(n, 0);
        d[j] = 1;
        for (const auto& [e, c] : bj.terms())
            t.add_term(e, d, FiberMatrix::scalar(RatFunc::constant(mu.params(), -c)));
    }
    return t;
}

WeylElement dpi_hat(const GradedLie& g, const RepWeight& mu, const LieVec& y,
                    const std::vector<std::string>& coord_vars,
                    std::vector<std::string> dual_vars) {
    if (dual_vars.empty()) dual_vars = dual_var_names(coord_vars);
    return fourier_hat(dpi(g, mu, y, coord_vars), std::move(dual_vars));
}

} // namespace fmethod
