#include "fmethod/setting.hpp"

#include "fmethod/matrix.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>

namespace fmethod {

namespace {

void put(std::vector<BigRat>& m, size_t msize, size_t r, size_t c, long v) {
    m[r * msize + c] = BigRat(v);
}

ExactMatrix span_matrix(const std::vector<std::vector<BigRat>>& mats, size_t msize) {
    ExactMatrix span(msize * msize, mats.size(), {});
    for (size_t k = 0; k < mats.size(); ++k)
        for (size_t r = 0; r < msize * msize; ++r)
            span.at(r, k) = RatFunc::constant({}, mats[k][r]);
    return span;
}

} // namespace

GradedLie algebra_from_matrices(const std::string& name,
                                std::vector<GradedLie::BasisElement> basis,
                                const std::vector<std::vector<BigRat>>& mats, size_t msize) {
    if (mats.size() != basis.size())
        throw StructuralError("algebra_from_matrices: one matrix per basis element");
    for (const auto& m : mats)
        if (m.size() != msize * msize)
            throw StructuralError("algebra_from_matrices: matrix size mismatch");
    const size_t dim = basis.size();
    ExactMatrix span = span_matrix(mats, msize);
    if (nullspace_reference(span).rank != dim)
        throw StructuralError("algebra_from_matrices: dependent basis matrices");
    GradedLie g(name, std::move(basis));
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = i + 1; j < dim; ++j) {
            std::vector<RatFunc> rhs(msize * msize);
            for (size_t r = 0; r < msize; ++r)
                for (size_t c = 0; c < msize; ++c) {
                    BigRat v(0);
                    for (size_t k = 0; k < msize; ++k)
                        v += mats[i][r * msize + k] * mats[j][k * msize + c] -
                             mats[j][r * msize + k] * mats[i][k * msize + c];
                    rhs[r * msize + c] = RatFunc::constant({}, v);
                }
            auto sol = linear_solve(span, rhs);
            if (!sol)
                throw StructuralError(
                    cat("algebra_from_matrices: commutator of '", g.basis(i).name, "', '",
                        g.basis(j).name, "' leaves the span"));
            std::map<size_t, BigRat> result;
            for (size_t k = 0; k < dim; ++k)
                if (!(*sol)[k].is_zero()) result.emplace(k, (*sol)[k].constant_value());
            g.set_bracket(i, j, result);
        }
    return g;
}

std::vector<MPoly> restriction_map(const GradedLie& g,
                                   const std::vector<std::string>& sub_coords) {
    if (!g.has_subalgebra()) throw StructuralError("restriction_map: no subalgebra present");
    auto minus = g.indices_with_grade(-1);
    std::vector<size_t> sub_minus;
    for (size_t k = 0; k < g.sub().names.size(); ++k)
        if (g.sub_grade(k) == -1) sub_minus.push_back(k);
    if (sub_coords.size() != sub_minus.size())
        throw StructuralError("restriction_map: one coordinate per grade -1 subalgebra element");
    std::vector<MPoly> images;
    images.reserve(minus.size());
    for (size_t i : minus) {
        MPoly img(sub_coords);
        for (size_t t = 0; t < sub_minus.size(); ++t) {
            const BigRat& c = g.sub().combos[sub_minus[t]][i];
            if (c.is_zero()) continue;
            MPoly v = MPoly::variable(sub_coords, t);
            v.scale(c);
            img += v;
        }
        images.push_back(std::move(img));
    }
    return images;
}

namespace {

FSetting finish_setting(FSetting s) {
    s.algebra.validate();
    s.sub_algebra = s.algebra.subalgebra_algebra();
    s.sub_algebra.validate();
    s.dual_vars = dual_var_names(s.coord_vars);
    s.restriction = restriction_map(s.algebra, s.sub_coord_vars);
    s.lambda.validate_character(s.algebra);
    if (s.coord_vars.size() != s.algebra.indices_with_grade(-1).size())
        throw StructuralError("setting: coordinate count mismatch");
    return s;
}

FSetting make_rankin_cohen() {
    const size_t msize = 4;
    std::vector<GradedLie::BasisElement> basis = {{"e1", 1}, {"h1", 0}, {"f1", -1},
                                                  {"e2", 1}, {"h2", 0}, {"f2", -1}};
    std::vector<std::vector<BigRat>> mats(6, std::vector<BigRat>(msize * msize, BigRat(0)));
    put(mats[0], msize, 0, 1, 1);                               // e1
    put(mats[1], msize, 0, 0, 1), put(mats[1], msize, 1, 1, -1); // h1
    put(mats[2], msize, 1, 0, 1);                               // f1
    put(mats[3], msize, 2, 3, 1);                               // e2
    put(mats[4], msize, 2, 2, 1), put(mats[4], msize, 3, 3, -1); // h2
    put(mats[5], msize, 3, 2, 1);                               // f2

    FSetting s;
    s.name = "rankin_cohen";
    s.algebra = algebra_from_matrices("sl2_sl2", basis, mats, msize);
    GradedLie::SubAlgebra sub;
    sub.names = {"e", "h", "f"};
    sub.combos = {
        {BigRat(1), BigRat(0), BigRat(0), BigRat(1), BigRat(0), BigRat(0)},
        {BigRat(0), BigRat(1), BigRat(0), BigRat(0), BigRat(1), BigRat(0)},
        {BigRat(0), BigRat(0), BigRat(1), BigRat(0), BigRat(0), BigRat(1)},
    };
    s.algebra.set_subalgebra(std::move(sub));
    s.rep = MatrixRep{msize, {1, 1, 1, 1}, std::move(mats)};
    s.params = {"k1", "k2"};
    s.coord_vars = {"x", "y"};
    s.sub_coord_vars = {"x"};
    std::map<std::string, MPoly> lam;
    lam.emplace("h1", MPoly::variable(s.params, 0));
    lam.emplace("h2", MPoly::variable(s.params, 1));
    s.lambda = RepWeight(s.params, std::move(lam));
    return finish_setting(std::move(s));
}

FSetting make_juhl(size_t n) {
    const size_t msize = n + 2;
    std::vector<GradedLie::BasisElement> basis;
    std::vector<std::vector<BigRat>> mats;
    auto add = [&](const std::string& name, int grade, std::vector<BigRat> m) {
        basis.push_back({name, grade});
        mats.push_back(std::move(m));
    };
    std::vector<BigRat> m0(msize * msize, BigRat(0));
    for (size_t i = 1; i <= n; ++i) { // P_i = E_{i,0} - E_{n+1,i}
        auto m = m0;
        put(m, msize, i, 0, 1), put(m, msize, n + 1, i, -1);
        add("P" + std::to_string(i), -1, std::move(m));
    }
    {
        auto m = m0; // E = E_{0,0} - E_{n+1,n+1}
        put(m, msize, 0, 0, 1), put(m, msize, n + 1, n + 1, -1);
        add("E", 0, std::move(m));
    }
    for (size_t i = 1; i <= n; ++i) // M_{ij} = E_{i,j} - E_{j,i}, i < j
        for (size_t j = i + 1; j <= n; ++j) {
            auto m = m0;
            put(m, msize, i, j, 1), put(m, msize, j, i, -1);
            std::string name = n <= 9 ? "M" + std::to_string(i) + std::to_string(j)
                                      : "M" + std::to_string(i) + "_" + std::to_string(j);
            add(name, 0, std::move(m));
        }
    for (size_t j = 1; j <= n; ++j) { // K_j = E_{0,j} - E_{j,n+1}
        auto m = m0;
        put(m, msize, 0, j, 1), put(m, msize, j, n + 1, -1);
        add("K" + std::to_string(j), 1, std::move(m));
    }

    FSetting s;
    s.name = "juhl";
    s.algebra = algebra_from_matrices("so_" + std::to_string(n + 2), basis, mats, msize);
    GradedLie::SubAlgebra sub;
    auto mark = [&](const std::string& name) {
        std::vector<BigRat> combo(s.algebra.dim(), BigRat(0));
        combo[s.algebra.index_of(name)] = BigRat(1);
        sub.names.push_back(name);
        sub.combos.push_back(std::move(combo));
    };
    for (size_t i = 1; i + 1 <= n; ++i) mark("P" + std::to_string(i));
    mark("E");
    for (size_t i = 1; i + 1 <= n; ++i)
        for (size_t j = i + 1; j + 1 <= n; ++j)
            mark(n <= 9 ? "M" + std::to_string(i) + std::to_string(j)
                        : "M" + std::to_string(i) + "_" + std::to_string(j));
    for (size_t j = 1; j + 1 <= n; ++j) mark("K" + std::to_string(j));
    s.algebra.set_subalgebra(std::move(sub));
    s.rep = MatrixRep{msize, {1, n, 1}, std::move(mats)};
    s.params = {"lambda"};
    s.coord_vars.clear();
    for (size_t i = 1; i <= n; ++i) s.coord_vars.push_back("x" + std::to_string(i));
    s.sub_coord_vars.clear();
    for (size_t i = 1; i + 1 <= n; ++i) s.sub_coord_vars.push_back("x" + std::to_string(i));
    std::map<std::string, MPoly> lam;
    for (size_t i = 0; i < s.algebra.dim(); ++i)
        if (s.algebra.grade(i) == 0)
            lam.emplace(s.algebra.basis(i).name,
                        s.algebra.basis(i).name == "E" ? MPoly::variable(s.params, 0)
                                                       : MPoly(s.params));
    s.lambda = RepWeight(s.params, std::move(lam));
    return finish_setting(std::move(s));
}

} // namespace

FSetting builtin_setting(const std::string& name, size_t n) {
    if (name == "rankin_cohen") return make_rankin_cohen();
    if (name == "juhl") {
        if (n < 2) throw DomainError("setting 'juhl' needs n >= 2");
        return make_juhl(n);
    }
    throw DomainError(cat("unknown setting '", name, "' (expected rankin_cohen or juhl)"));
}

FSetting specialize_setting(const FSetting& s, const std::map<std::string, BigRat>& values) {
    for (const auto& [p, v] : values) {
        (void)v;
        if (std::find(s.params.begin(), s.params.end(), p) == s.params.end())
            throw DomainError(cat("unknown parameter '", p, "'"));
    }
    std::vector<std::string> rem;
    for (const auto& p : s.params)
        if (!values.count(p)) rem.push_back(p);
    std::vector<MPoly> images;
    for (const auto& p : s.params) {
        auto it = values.find(p);
        if (it != values.end()) {
            images.push_back(MPoly::constant(rem, it->second));
        } else {
            size_t idx = std::find(rem.begin(), rem.end(), p) - rem.begin();
            images.push_back(MPoly::variable(rem, idx));
        }
    }
    FSetting out = s;
    out.params = rem;
    std::map<std::string, MPoly> vals;
    for (size_t i = 0; i < s.algebra.dim(); ++i)
        if (s.algebra.grade(i) == 0) {
            const std::string& name = s.algebra.basis(i).name;
            vals.emplace(name, compose(s.lambda.value(name), images));
        }
    out.lambda = RepWeight(rem, std::move(vals));
    return out;
}

std::string FSetting::describe_json() const {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["name"] = name;
    j["params"] = params;
    j["coord_vars"] = coord_vars;
    j["dual_vars"] = dual_vars;
    j["sub_coord_vars"] = sub_coord_vars;
    j["algebra"] = nlohmann::ordered_json::parse(algebra.to_json_text());
    j["subalgebra_brackets"] = nlohmann::ordered_json::parse(sub_algebra.to_json_text());
    nlohmann::ordered_json lam = nlohmann::ordered_json::object();
    for (size_t i = 0; i < algebra.dim(); ++i)
        if (algebra.grade(i) == 0)
            lam[algebra.basis(i).name] = lambda.value(algebra.basis(i).name).to_string();
    j["lambda"] = std::move(lam);
    nlohmann::ordered_json rest = nlohmann::ordered_json::object();
    for (size_t i = 0; i < coord_vars.size(); ++i)
        rest[coord_vars[i]] = restriction[i].to_string();
    j["restriction"] = std::move(rest);
    nlohmann::ordered_json repj;
    repj["size"] = rep.size;
    repj["block_sizes"] = rep.block_sizes;
    repj["matrices"] = nlohmann::ordered_json::object();
    for (size_t k = 0; k < rep.mats.size(); ++k) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (size_t r = 0; r < rep.size; ++r) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (size_t c = 0; c < rep.size; ++c)
                row.push_back(rep.mats[k][r * rep.size + c].to_pretty_string());
            rows.push_back(std::move(row));
        }
        repj["matrices"][algebra.basis(k).name] = std::move(rows);
    }
    j["rep"] = std::move(repj);
    return j.dump(2) + "\n";
}

} // namespace fmethod
