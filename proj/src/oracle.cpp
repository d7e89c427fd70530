#include "fmethod/oracle.hpp"

#include "fmethod/matrix.hpp"

namespace fmethod {

namespace {

using Mat = std::vector<BigRat>;      // row-major square
using DualMat = std::vector<DualRat>; // row-major square

Mat mat_mul(const Mat& a, const Mat& b, size_t m) {
    Mat r(m * m, BigRat(0));
    for (size_t i = 0; i < m; ++i)
        for (size_t k = 0; k < m; ++k) {
            if (a[i * m + k].is_zero()) continue;
            for (size_t j = 0; j < m; ++j) r[i * m + j] += a[i * m + k] * b[k * m + j];
        }
    return r;
}

bool mat_is_zero(const Mat& a) {
    for (const auto& e : a)
        if (!e.is_zero()) return false;
    return true;
}

Mat mat_identity(size_t m) {
    Mat r(m * m, BigRat(0));
    for (size_t i = 0; i < m; ++i) r[i * m + i] = BigRat(1);
    return r;
}

// exp of a nilpotent matrix; exact, terminates within m steps.
Mat nilpotent_exp(const Mat& x, size_t m) {
    Mat e = mat_identity(m);
    Mat term = mat_identity(m);
    for (size_t k = 1; k <= m; ++k) {
        term = mat_mul(term, x, m);
        if (mat_is_zero(term)) return e;
        Mat scaled = term;
        BigRat inv_fact = rat_factorial(static_cast<uint32_t>(k)).inverse();
        for (auto& v : scaled) v *= inv_fact;
        for (size_t i = 0; i < m * m; ++i) e[i] += scaled[i];
    }
    throw StructuralError("nilpotent_exp: matrix is not nilpotent");
}

// Exact inverse by Gauss-Jordan with partial (first nonzero) pivoting.
// Returns false when singular.
bool rational_inverse(Mat a, size_t m, Mat& out) {
    out = mat_identity(m);
    for (size_t c = 0; c < m; ++c) {
        size_t piv = c;
        while (piv < m && a[piv * m + c].is_zero()) ++piv;
        if (piv == m) return false;
        if (piv != c)
            for (size_t j = 0; j < m; ++j) {
                std::swap(a[piv * m + j], a[c * m + j]);
                std::swap(out[piv * m + j], out[c * m + j]);
            }
        BigRat inv = a[c * m + c].inverse();
        for (size_t j = 0; j < m; ++j) {
            a[c * m + j] *= inv;
            out[c * m + j] *= inv;
        }
        for (size_t r = 0; r < m; ++r) {
            if (r == c || a[r * m + c].is_zero()) continue;
            BigRat f = a[r * m + c];
            for (size_t j = 0; j < m; ++j) {
                a[r * m + j] -= f * a[c * m + j];
                out[r * m + j] -= f * out[c * m + j];
            }
        }
    }
    return true;
}

// Inverse of a dual matrix: (A + eps B)^{-1} = A^{-1} - eps A^{-1} B A^{-1}.
// Throws DomainError when the real part is singular.
void dual_inverse(const DualMat& a, size_t m, DualMat& out) {
    Mat re(m * m), du(m * m);
    for (size_t i = 0; i < m * m; ++i) {
        re[i] = a[i].a;
        du[i] = a[i].b;
    }
    Mat re_inv;
    if (!rational_inverse(re, m, re_inv))
        throw DomainError("oracle: singular pivot block at this sample point");
    Mat mid = mat_mul(mat_mul(re_inv, du, m), re_inv, m);
    out.assign(m * m, DualRat{});
    for (size_t i = 0; i < m * m; ++i) out[i] = DualRat(re_inv[i], -mid[i]);
}

// Coordinates of `target` in the span of the basis matrices restricted to
// indices `support`; entries land in a dim-sized vector at those indices.
std::vector<BigRat> span_coordinates(const FSetting& s, const std::vector<size_t>& support,
                                     const Mat& target, const char* what) {
    const size_t m = s.rep.size;
    ExactMatrix span(m * m, support.size(), {});
    for (size_t k = 0; k < support.size(); ++k)
        for (size_t r = 0; r < m * m; ++r)
            span.at(r, k) = RatFunc::constant({}, s.rep.mats[support[k]][r]);
    std::vector<RatFunc> rhs(m * m);
    for (size_t r = 0; r < m * m; ++r) rhs[r] = RatFunc::constant({}, target[r]);
    auto sol = linear_solve(span, rhs);
    if (!sol) throw StructuralError(cat("oracle: ", what, " leaves its graded span"));
    std::vector<BigRat> coords(s.algebra.dim(), BigRat(0));
    for (size_t k = 0; k < support.size(); ++k) coords[support[k]] = (*sol)[k].constant_value();
    return coords;
}

} // namespace

AlphaBetaSample alpha_beta_matrix_oracle(const FSetting& s, const std::vector<BigRat>& y_combo,
                                         const std::vector<BigRat>& point) {
    const size_t m = s.rep.size;
    const size_t dim = s.algebra.dim();
    if (y_combo.size() != dim) throw StructuralError("oracle: y coordinate length");
    auto minus = s.algebra.indices_with_grade(-1);
    if (point.size() != minus.size()) throw StructuralError("oracle: sample point length");

    Mat rho_x(m * m, BigRat(0));
    for (size_t j = 0; j < minus.size(); ++j)
        for (size_t r = 0; r < m * m; ++r) rho_x[r] += point[j] * s.rep.mats[minus[j]][r];
    Mat rho_y(m * m, BigRat(0));
    for (size_t k = 0; k < dim; ++k) {
        if (y_combo[k].is_zero()) continue;
        for (size_t r = 0; r < m * m; ++r) rho_y[r] += y_combo[k] * s.rep.mats[k][r];
    }
    Mat exp_x = nilpotent_exp(rho_x, m);
    Mat neg_x = rho_x;
    for (auto& v : neg_x) v = -v;
    Mat exp_x_inv = nilpotent_exp(neg_x, m);

    // M(eps) = (I + eps rho(Y)) exp(rho(X)).
    DualMat w(m * m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            BigRat du(0);
            for (size_t k = 0; k < m; ++k) du += rho_y[i * m + k] * exp_x[k * m + j];
            w[i * m + j] = DualRat(exp_x[i * m + j], std::move(du));
        }

    // Block Gauss: peel unit-block-lower factors, leaving the diagonal blocks
    // in place.  L collects the factors; D is read off the diagonal blocks.
    DualMat lfac(m * m);
    for (size_t i = 0; i < m; ++i) lfac[i * m + i] = DualRat(BigRat(1));
    std::vector<size_t> offsets;
    size_t off = 0;
    for (size_t bs : s.rep.block_sizes) {
        offsets.push_back(off);
        off += bs;
    }
    if (off != m) throw StructuralError("oracle: block sizes do not tile the matrix");
    for (size_t b = 0; b < s.rep.block_sizes.size(); ++b) {
        const size_t o = offsets[b], bs = s.rep.block_sizes[b];
        DualMat diag(bs * bs);
        for (size_t i = 0; i < bs; ++i)
            for (size_t j = 0; j < bs; ++j) diag[i * bs + j] = w[(o + i) * m + (o + j)];
        DualMat diag_inv;
        dual_inverse(diag, bs, diag_inv);
        for (size_t r = o + bs; r < m; ++r) {
            // factor = row block * diag^{-1}
            std::vector<DualRat> factor(bs);
            for (size_t j = 0; j < bs; ++j) {
                DualRat v;
                for (size_t k = 0; k < bs; ++k) v += w[r * m + (o + k)] * diag_inv[k * bs + j];
                factor[j] = v;
            }
            for (size_t j = 0; j < bs; ++j) lfac[r * m + (o + j)] = factor[j];
            for (size_t cc = o; cc < m; ++cc) {
                DualRat v;
                for (size_t k = 0; k < bs; ++k) v += factor[k] * w[(o + k) * m + cc];
                w[r * m + cc] -= v;
            }
        }
    }
    // Internal consistency: the real parts must reproduce exp(rho(X)) in L
    // and the identity on the diagonal blocks.
    for (size_t i = 0; i < m * m; ++i)
        if (lfac[i].a != exp_x[i]) throw StructuralError("oracle: real part of L drifted");

    Mat dual_l(m * m), dual_d(m * m, BigRat(0));
    for (size_t i = 0; i < m * m; ++i) dual_l[i] = lfac[i].b;
    for (size_t b = 0; b < s.rep.block_sizes.size(); ++b) {
        const size_t o = offsets[b], bs = s.rep.block_sizes[b];
        for (size_t i = 0; i < bs; ++i)
            for (size_t j = 0; j < bs; ++j) {
                const DualRat& v = w[(o + i) * m + (o + j)];
                if (v.a != (i == j ? BigRat(1) : BigRat(0)))
                    throw StructuralError("oracle: real part of D drifted");
                dual_d[(o + i) * m + (o + j)] = v.b;
            }
    }

    Mat rho_beta = mat_mul(exp_x_inv, dual_l, m);
    AlphaBetaSample out;
    out.beta = span_coordinates(s, minus, rho_beta, "beta");
    out.alpha = span_coordinates(s, s.algebra.indices_with_grade(0), dual_d, "alpha");
    return out;
}

AlphaBetaSample alpha_beta_closed_form(const FSetting& s, const std::vector<BigRat>& y_combo,
                                       const std::vector<BigRat>& point) {
    const GradedLie& g = s.algebra;
    auto minus = g.indices_with_grade(-1);
    if (y_combo.size() != g.dim()) throw StructuralError("closed form: y coordinate length");
    if (point.size() != minus.size()) throw StructuralError("closed form: sample point length");
    std::vector<std::string> novars;
    LieVec x = g.zero_vec(novars);
    for (size_t j = 0; j < minus.size(); ++j) x[minus[j]] = MPoly::constant(novars, point[j]);
    LieVec y = g.combo_vec(y_combo, novars);
    LieVec y0 = g.component(y, 0), yp = g.component(y, +1), ym = g.component(y, -1);
    LieVec xyp = g.bracket(x, yp);
    LieVec xy0 = g.bracket(x, y0);
    LieVec xxyp = g.bracket(x, xyp);
    AlphaBetaSample out;
    out.alpha.assign(g.dim(), BigRat(0));
    out.beta.assign(g.dim(), BigRat(0));
    for (size_t i = 0; i < g.dim(); ++i) {
        out.alpha[i] = y0[i].constant_value() - xyp[i].constant_value();
        out.beta[i] = ym[i].constant_value() - xy0[i].constant_value() +
                      BigRat(1, 2) * xxyp[i].constant_value();
    }
    return out;
}

} // namespace fmethod
