#include "fmethod/solver.hpp"

#include <algorithm>

namespace fmethod {

namespace {

void enumerate_monomials(size_t var, uint32_t remaining, ExpVec& cur,
                         std::vector<ExpVec>& out) {
    if (var + 1 == cur.size()) {
        cur[var] = remaining;
        out.push_back(cur);
        return;
    }
    for (uint32_t k = 0; k <= remaining; ++k) {
        cur[var] = k;
        enumerate_monomials(var + 1, remaining - k, cur, out);
    }
}

// The transformed generators split three ways: grade +1 elements give
// degree-lowering rows, non-diagonal grade-0 elements give invariance rows,
// diagonal grade-0 elements act on each monomial by a scalar and classify
// solutions by weight instead of constraining them.
struct HatGenerators {
    std::vector<std::pair<size_t, WeylElement>> plus;    // sub index, operator
    std::vector<std::pair<size_t, WeylElement>> offdiag;
    std::vector<std::pair<size_t, WeylElement>> diag;
};

HatGenerators hat_generators(const FSetting& s) {
    RepWeight mu = mu_from_lambda(s.algebra, s.lambda);
    HatGenerators gens;
    const auto& sub = s.algebra.sub();
    for (size_t k = 0; k < sub.names.size(); ++k) {
        int g = s.algebra.sub_grade(k);
        if (g == -1) continue;
        LieVec y = s.algebra.combo_vec(sub.combos[k], s.coord_vars);
        WeylElement t = dpi_hat(s.algebra, mu, y, s.coord_vars, s.dual_vars);
        if (g == 1)
            gens.plus.emplace_back(k, std::move(t));
        else if (is_diagonal_action(t))
            gens.diag.emplace_back(k, std::move(t));
        else
            gens.offdiag.emplace_back(k, std::move(t));
    }
    return gens;
}

// Matrix of t from the span of the monomials in src into the full degree
// deg_to component.  Columns are independent of each other, so they can run
// under OpenMP; every column writes a disjoint set of entries.
ExactMatrix operator_matrix_on(const WeylElement& t, const std::vector<ExpVec>& src,
                               uint32_t deg_to, bool parallel = true) {
    const size_t n = t.vars().size();
    std::vector<ExpVec> dst = homogeneous_monomials(n, deg_to);
    std::map<ExpVec, size_t, GrlexLess> row_of;
    for (size_t r = 0; r < dst.size(); ++r) row_of.emplace(dst[r], r);
    ExactMatrix m(dst.size(), src.size(), t.params());
    std::vector<std::string> failures(src.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel && src.size() > 16)
#endif
    for (long lj = 0; lj < static_cast<long>(src.size()); ++lj) {
        const auto j = static_cast<size_t>(lj);
        try {
            FiberPoly psi = FiberPoly::monomial(
                t.vars(), src[j], FiberMatrix::scalar(RatFunc::constant(t.params(), BigRat(1))));
            FiberPoly image = apply(t, psi);
            for (const auto& [e, c] : image.terms()) {
                auto it = row_of.find(e);
                if (it == row_of.end())
                    throw StructuralError("operator_matrix: image leaves the target component");
                m.at(it->second, j) = c.scalar_value();
            }
        } catch (const std::exception& e) {
            failures[j] = e.what();
        }
    }
    for (const auto& f : failures)
        if (!f.empty()) throw StructuralError(f);
    return m;
}

// Eigenvalue of a diagonal operator on one monomial.
RatFunc diagonal_eigenvalue(const WeylElement& t, const ExpVec& a) {
    RatFunc v(t.params());
    for (const auto& [k, c] : t.terms()) {
        BigRat w(1);
        bool kills = false;
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] < k.d[i]) {
                kills = true;
                break;
            }
            if (k.d[i]) w *= rat_falling(BigRat(static_cast<long>(a[i])), k.d[i]);
        }
        if (kills || w.is_zero()) continue;
        v += c.scalar_value() * RatFunc::constant(t.params(), w);
    }
    return v;
}

// Columns grouped by the joint eigenvalue of the diagonal generators, in
// first-appearance (grlex) order.  Solutions are weight vectors, so they
// never mix groups; solving per group enforces that and shrinks the systems.
std::vector<std::vector<size_t>> weight_groups(const HatGenerators& gens,
                                               const std::vector<ExpVec>& cols) {
    std::vector<std::vector<size_t>> groups;
    std::vector<std::string> keys;
    for (size_t j = 0; j < cols.size(); ++j) {
        std::string key;
        for (const auto& [k, t] : gens.diag) {
            (void)k;
            key += diagonal_eigenvalue(t, cols[j]).to_string();
            key += ';';
        }
        auto it = std::find(keys.begin(), keys.end(), key);
        if (it == keys.end()) {
            keys.push_back(key);
            groups.emplace_back();
            groups.back().push_back(j);
        } else {
            groups[it - keys.begin()].push_back(j);
        }
    }
    return groups;
}

std::vector<ExpVec> select(const std::vector<ExpVec>& cols, const std::vector<size_t>& idx) {
    std::vector<ExpVec> out;
    out.reserve(idx.size());
    for (size_t j : idx) out.push_back(cols[j]);
    return out;
}

ExactMatrix stack_rows(const std::vector<ExactMatrix>& blocks, size_t cols,
                       const std::vector<std::string>& params) {
    size_t rows = 0;
    for (const auto& b : blocks) rows += b.rows();
    ExactMatrix m(rows, cols, params);
    size_t r0 = 0;
    for (const auto& b : blocks) {
        for (size_t r = 0; r < b.rows(); ++r)
            for (size_t c = 0; c < cols; ++c) m.at(r0 + r, c) = b.at(r, c);
        r0 += b.rows();
    }
    return m;
}

} // namespace

std::vector<ExpVec> homogeneous_monomials(size_t nvars, uint32_t d) {
    std::vector<ExpVec> out;
    if (nvars == 0) {
        if (d == 0) out.push_back({});
        return out;
    }
    ExpVec cur(nvars, 0);
    enumerate_monomials(0, d, cur, out);
    std::sort(out.begin(), out.end(), GrlexLess{});
    return out;
}

std::vector<uint32_t> candidate_degrees(const SolveOptions& opt) {
    if (opt.delta) return {*opt.delta};
    std::vector<uint32_t> out;
    for (uint32_t d = 0; d <= opt.degree_max; ++d) {
        if (opt.parity == Parity::Even && d % 2 != 0) continue;
        if (opt.parity == Parity::Odd && d % 2 != 1) continue;
        out.push_back(d);
    }
    return out;
}

bool is_diagonal_action(const WeylElement& t) {
    for (const auto& [k, c] : t.terms()) {
        (void)c;
        if (k.z != k.d) return false;
    }
    return true;
}

ExactMatrix operator_matrix(const WeylElement& t, uint32_t deg_from, uint32_t deg_to) {
    return operator_matrix_on(t, homogeneous_monomials(t.vars().size(), deg_from), deg_to);
}

namespace {

ExactMatrix build_system_impl(const FSetting& s, uint32_t degree, bool parallel) {
    HatGenerators gens = hat_generators(s);
    std::vector<ExactMatrix> blocks;
    std::vector<ExpVec> cols = homogeneous_monomials(s.dual_vars.size(), degree);
    for (const auto& [k, t] : gens.plus) {
        (void)k;
        if (degree > 0) blocks.push_back(operator_matrix_on(t, cols, degree - 1, parallel));
    }
    for (const auto& [k, t] : gens.offdiag) {
        (void)k;
        blocks.push_back(operator_matrix_on(t, cols, degree, parallel));
    }
    return stack_rows(blocks, cols.size(), s.params);
}

} // namespace

ExactMatrix build_system(const FSetting& s, uint32_t degree) {
    return build_system_impl(s, degree, true);
}

ExactMatrix build_system_reference(const FSetting& s, uint32_t degree) {
    return build_system_impl(s, degree, false);
}

std::vector<SingularVector> solve_degree(const FSetting& s, uint32_t degree, bool reduce) {
    HatGenerators gens = hat_generators(s);
    std::vector<ExpVec> cols = homogeneous_monomials(s.dual_vars.size(), degree);
    std::vector<SingularVector> out;

    for (const auto& group : weight_groups(gens, cols)) {
        std::vector<ExpVec> src = select(cols, group);
        std::vector<std::vector<RatFunc>> vectors; // over src positions

        auto plus_blocks = [&](const std::vector<ExpVec>& from) {
            std::vector<ExactMatrix> blocks;
            for (const auto& [k, t] : gens.plus) {
                (void)k;
                if (degree > 0) blocks.push_back(operator_matrix_on(t, from, degree - 1));
            }
            return blocks;
        };

        if (reduce && !gens.offdiag.empty()) {
            std::vector<ExactMatrix> inv_blocks;
            for (const auto& [k, t] : gens.offdiag) {
                (void)k;
                inv_blocks.push_back(operator_matrix_on(t, src, degree));
            }
            NullspaceResult inv = nullspace(stack_rows(inv_blocks, src.size(), s.params));
            if (inv.basis.empty()) continue;
            std::vector<ExactMatrix> pb = plus_blocks(src);
            if (pb.empty()) {
                vectors = inv.basis;
            } else {
                ExactMatrix a = stack_rows(pb, src.size(), s.params);
                // Columns of the reduced system: images of the invariant basis.
                ExactMatrix r(a.rows(), inv.basis.size(), s.params);
                for (size_t b = 0; b < inv.basis.size(); ++b) {
                    auto img = a.mul_vector(inv.basis[b]);
                    for (size_t i = 0; i < img.size(); ++i) r.at(i, b) = std::move(img[i]);
                }
                for (const auto& gamma : nullspace(r).basis) {
                    std::vector<RatFunc> v(src.size(), RatFunc(s.params));
                    for (size_t b = 0; b < inv.basis.size(); ++b) {
                        if (gamma[b].is_zero()) continue;
                        for (size_t i = 0; i < src.size(); ++i)
                            v[i] += gamma[b] * inv.basis[b][i];
                    }
                    vectors.push_back(normalize_vector(std::move(v), s.params));
                }
            }
        } else {
            std::vector<ExactMatrix> blocks = plus_blocks(src);
            for (const auto& [k, t] : gens.offdiag) {
                (void)k;
                blocks.push_back(operator_matrix_on(t, src, degree));
            }
            if (blocks.empty()) {
                // No constraints at all: every monomial line is a solution.
                for (size_t i = 0; i < src.size(); ++i) {
                    std::vector<RatFunc> v(src.size(), RatFunc(s.params));
                    v[i] = RatFunc::constant(s.params, BigRat(1));
                    vectors.push_back(std::move(v));
                }
            } else {
                vectors = nullspace(stack_rows(blocks, src.size(), s.params)).basis;
            }
        }

        for (const auto& v : vectors) {
            SingularVector sv;
            sv.degree = degree;
            sv.psi = FiberPoly(s.dual_vars, s.params, 1, 1);
            for (size_t i = 0; i < src.size(); ++i)
                if (!v[i].is_zero()) sv.psi.add_term(src[i], FiberMatrix::scalar(v[i]));

            // Defense in depth: re-apply every generator to the assembled
            // polynomial and recheck the defining equations.
            for (const auto& [k, t] : gens.plus) {
                (void)k;
                if (!apply(t, sv.psi).is_zero())
                    throw StructuralError("solver: solution fails re-verification (plus)");
            }
            for (const auto& [k, t] : gens.offdiag) {
                (void)k;
                if (!apply(t, sv.psi).is_zero())
                    throw StructuralError("solver: solution fails re-verification (invariance)");
            }

            std::map<std::string, MPoly> nu_vals;
            for (const auto& [k, t] : gens.offdiag)
                nu_vals.emplace(s.algebra.sub().names[k], MPoly(s.params));
            for (const auto& [k, t] : gens.diag) {
                RatFunc c = diagonal_eigenvalue(t, src[0]);
                // All monomials in the group share the eigenvalue; recheck.
                FiberPoly scaled = sv.psi;
                scaled.scale(c);
                if (!(apply(t, sv.psi) == scaled))
                    throw StructuralError("solver: weight eigenvalue drifted within a group");
                RatFunc neg = -c;
                if (!neg.is_polynomial())
                    throw StructuralError("solver: non-polynomial weight eigenvalue");
                nu_vals.emplace(s.algebra.sub().names[k], neg.num());
            }
            sv.nu = RepWeight(s.params, std::move(nu_vals));
            out.push_back(std::move(sv));
        }
    }
    return out;
}

SolveOutcome solve_singular_vectors(const FSetting& s, const SolveOptions& opt) {
    SolveOutcome outcome;
    outcome.degrees_searched = candidate_degrees(opt);
    const size_t nd = outcome.degrees_searched.size();
    std::vector<std::vector<SingularVector>> per(nd);
    std::vector<std::string> failures(nd);

    log_info(cat("solving ", s.name, " at ", nd, " candidate degree(s)"));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (nd > 1)
#endif
    for (long i = 0; i < static_cast<long>(nd); ++i) {
        try {
            per[i] = solve_degree(s, outcome.degrees_searched[i], opt.reduce);
        } catch (const std::exception& e) {
            failures[i] = e.what();
            if (failures[i].empty()) failures[i] = "unknown failure";
        }
    }
    for (size_t i = 0; i < nd; ++i)
        if (!failures[i].empty())
            throw StructuralError(cat("degree ", outcome.degrees_searched[i],
                                      " failed: ", failures[i]));
    for (size_t i = 0; i < nd; ++i) {
        outcome.multiplicity.push_back(per[i].size());
        log_debug(cat("degree ", outcome.degrees_searched[i], ": ", per[i].size(),
                      " solution(s)"));
        for (auto& sv : per[i]) outcome.solutions.push_back(std::move(sv));
    }
    return outcome;
}

} // namespace fmethod
