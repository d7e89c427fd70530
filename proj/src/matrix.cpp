#include "fmethod/matrix.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fmethod {

ExactMatrix::ExactMatrix(size_t rows, size_t cols, std::vector<std::string> vars)
    : m_rows(rows), m_cols(cols), m_vars(std::move(vars)),
      m_a(rows * cols, RatFunc(std::vector<std::string>(m_vars))) {}

std::vector<RatFunc> ExactMatrix::mul_vector(const std::vector<RatFunc>& v) const {
    if (v.size() != m_cols) throw StructuralError("ExactMatrix::mul_vector: size mismatch");
    std::vector<RatFunc> out(m_rows, RatFunc(std::vector<std::string>(m_vars)));
    for (size_t i = 0; i < m_rows; ++i) {
        RatFunc s{std::vector<std::string>(m_vars)};
        for (size_t j = 0; j < m_cols; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) s += at(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

// Canonical kernel-vector form: polynomial entries, no common polynomial
// factor, coprime integer coefficients, first nonzero entry with positive
// leading coefficient.
std::vector<RatFunc> normalize_vector(std::vector<RatFunc> v,
                                      const std::vector<std::string>& vars) {
    MPoly den_lcm = MPoly::constant(vars, BigRat(1));
    for (const auto& e : v)
        if (!e.is_zero() && !e.den().is_constant()) den_lcm = poly_lcm(den_lcm, e.den());
    std::vector<MPoly> p;
    p.reserve(v.size());
    for (const auto& e : v) {
        // e * den_lcm is polynomial: den divides den_lcm.
        MPoly q = (e.num() * den_lcm).exact_div(e.den());
        p.push_back(std::move(q));
    }
    MPoly g(vars);
    for (const auto& e : p)
        if (!e.is_zero()) g = poly_gcd(g, e);
    BigRat content(0);
    for (const auto& e : p) content = rat_gcd(content, e.content());
    int sign = 0;
    for (const auto& e : p) {
        if (!e.is_zero()) {
            sign = e.lead_coeff().sign();
            break;
        }
    }
    std::vector<RatFunc> out;
    out.reserve(p.size());
    for (auto& e : p) {
        if (!g.is_constant()) e = e.exact_div(g);
        if (!content.is_zero() && !content.is_one()) e.scale(content.inverse());
        if (sign < 0) e = -e;
        out.emplace_back(std::move(e));
    }
    return out;
}

namespace {

struct Echelon {
    std::vector<std::vector<RatFunc>> u; // echelon rows, entries as RatFunc
    std::vector<size_t> pivot_cols;      // ascending
};

// Shared by both nullspace implementations: kernel vectors from an echelon
// form, one per free column, then canonical normalization. The vector for
// free column f solves U x = 0 with x_f = 1 and the other free entries 0;
// that vector is unique, so both elimination strategies agree exactly.
NullspaceResult kernel_from_echelon(const Echelon& ech, size_t cols,
                                    const std::vector<std::string>& vars) {
    NullspaceResult res;
    res.rank = ech.pivot_cols.size();
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : ech.pivot_cols) is_pivot[c] = true;

    const RatFunc zero{std::vector<std::string>(vars)};
    for (size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<RatFunc> x(cols, zero);
        x[f] = RatFunc::constant(vars, BigRat(1));
        for (size_t k = ech.pivot_cols.size(); k-- > 0;) {
            size_t c = ech.pivot_cols[k];
            const auto& row = ech.u[k];
            RatFunc s = zero;
            for (size_t j = c + 1; j < cols; ++j)
                if (!row[j].is_zero() && !x[j].is_zero()) s += row[j] * x[j];
            x[c] = -s / row[c];
        }
        res.basis.push_back(normalize_vector(std::move(x), vars));
    }
    return res;
}

void verify_nullspace(const ExactMatrix& m, const NullspaceResult& res) {
    if (res.rank + res.basis.size() != m.cols())
        throw StructuralError("nullspace: rank + nullity != cols");
    for (const auto& v : res.basis) {
        auto mv = m.mul_vector(v);
        for (const auto& e : mv)
            if (!e.is_zero()) throw StructuralError("nullspace: M*v != 0 for a basis vector");
    }
}

} // namespace

NullspaceResult nullspace(const ExactMatrix& m) {
    const auto& vars = m.vars();
    const size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<RatFunc>> a(rows);
    for (size_t i = 0; i < rows; ++i) {
        a[i].reserve(cols);
        for (size_t j = 0; j < cols; ++j) a[i].push_back(m.at(i, j));
    }

    // Same elimination and pivot choice as the serial reference; the row
    // updates of one step are independent of each other, so running them
    // under OpenMP changes nothing about the result, only the wall time.
    Echelon ech;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = rows;
        for (size_t i = r; i < rows; ++i) {
            if (!a[i][c].is_zero()) {
                piv = i;
                break;
            }
        }
        if (piv == rows) continue;
        std::swap(a[r], a[piv]);
        const std::vector<RatFunc>& prow = a[r];
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (rows - r > 16)
#endif
        for (long li = static_cast<long>(r) + 1; li < static_cast<long>(rows); ++li) {
            const auto i = static_cast<size_t>(li);
            if (a[i][c].is_zero()) continue;
            RatFunc f = a[i][c] / prow[c];
            for (size_t j = c; j < cols; ++j) {
                if (prow[j].is_zero()) continue;
                a[i][j] -= f * prow[j];
            }
        }
        ech.pivot_cols.push_back(c);
        ech.u.push_back(a[r]);
        ++r;
    }

    NullspaceResult res = kernel_from_echelon(ech, cols, vars);
    verify_nullspace(m, res);
    return res;
}

NullspaceResult nullspace_reference(const ExactMatrix& m) {
    const auto& vars = m.vars();
    const size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<RatFunc>> a(rows);
    for (size_t i = 0; i < rows; ++i) {
        a[i].reserve(cols);
        for (size_t j = 0; j < cols; ++j) a[i].push_back(m.at(i, j));
    }

    Echelon ech;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = rows;
        for (size_t i = r; i < rows; ++i) {
            if (!a[i][c].is_zero()) {
                piv = i;
                break;
            }
        }
        if (piv == rows) continue;
        std::swap(a[r], a[piv]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (a[i][c].is_zero()) continue;
            RatFunc f = a[i][c] / a[r][c];
            for (size_t j = c; j < cols; ++j) {
                if (a[r][j].is_zero()) continue;
                a[i][j] -= f * a[r][j];
            }
        }
        ech.pivot_cols.push_back(c);
        ech.u.push_back(a[r]);
        ++r;
    }

    NullspaceResult res = kernel_from_echelon(ech, cols, vars);
    verify_nullspace(m, res);
    return res;
}

std::optional<std::vector<RatFunc>> linear_solve(const ExactMatrix& m,
                                                 const std::vector<RatFunc>& b) {
    if (b.size() != m.rows()) throw StructuralError("linear_solve: size mismatch");
    const auto& vars = m.vars();
    const size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<RatFunc>> a(rows);
    for (size_t i = 0; i < rows; ++i) {
        a[i].reserve(cols + 1);
        for (size_t j = 0; j < cols; ++j) a[i].push_back(m.at(i, j));
        a[i].push_back(b[i]);
    }
    std::vector<size_t> pivot_cols;
    std::vector<size_t> pivot_rows;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = rows;
        for (size_t i = r; i < rows; ++i)
            if (!a[i][c].is_zero()) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        std::swap(a[r], a[piv]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (a[i][c].is_zero()) continue;
            RatFunc f = a[i][c] / a[r][c];
            for (size_t j = c; j <= cols; ++j)
                if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
        }
        pivot_cols.push_back(c);
        pivot_rows.push_back(r);
        ++r;
    }
    // Inconsistent when a zero row meets a nonzero rhs.
    for (size_t i = r; i < rows; ++i)
        if (!a[i][cols].is_zero()) return std::nullopt;

    const RatFunc zero{std::vector<std::string>(vars)};
    std::vector<RatFunc> x(cols, zero);
    for (size_t k = pivot_cols.size(); k-- > 0;) {
        size_t c = pivot_cols[k], row = pivot_rows[k];
        RatFunc s = a[row][cols];
        for (size_t j = c + 1; j < cols; ++j)
            if (!a[row][j].is_zero() && !x[j].is_zero()) s -= a[row][j] * x[j];
        x[c] = s / a[row][c];
    }
    return x;
}

} // namespace fmethod
