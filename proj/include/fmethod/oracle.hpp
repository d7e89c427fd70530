#ifndef FMETHOD_ORACLE_HPP
#define FMETHOD_ORACLE_HPP

#include "fmethod/setting.hpp"

namespace fmethod {

// Dual number a + b*eps with eps^2 = 0: exact forward differentiation.
struct DualRat {
    BigRat a, b;

    DualRat() = default;
    explicit DualRat(BigRat re) : a(std::move(re)) {}
    DualRat(BigRat re, BigRat du) : a(std::move(re)), b(std::move(du)) {}

    DualRat& operator+=(const DualRat& o) {
        a += o.a;
        b += o.b;
        return *this;
    }
    DualRat& operator-=(const DualRat& o) {
        a -= o.a;
        b -= o.b;
        return *this;
    }
    friend DualRat operator+(DualRat x, const DualRat& y) { return x += y; }
    friend DualRat operator-(DualRat x, const DualRat& y) { return x -= y; }
    friend DualRat operator*(const DualRat& x, const DualRat& y) {
        return {x.a * y.a, x.a * y.b + x.b * y.a};
    }
};

// Coordinates of the two projections of Ad(exp(-X))Y over the ambient basis;
// alpha is supported on grade 0, beta on grade -1.
struct AlphaBetaSample {
    std::vector<BigRat> alpha;
    std::vector<BigRat> beta;
};

// Evaluates both projections at the rational point X = sum_j point[j] f_j
// using only the matrix realization: factor (I + eps rho(Y)) exp(rho(X)) into
// unit-block-lower times block-diagonal times unit-block-upper by Gauss
// elimination over dual numbers; then
//
//   rho(beta)  = exp(rho(X))^{-1} * dualpart(L),
//   rho(alpha) = dualpart(D),
//
// and coordinates come from solving in the span of the basis matrices.  This
// never touches the structure constants or the closed bracket formulas, so it
// cross-checks them.  Throws DomainError when the sample point makes a pivot
// block singular (pick another point).
AlphaBetaSample alpha_beta_matrix_oracle(const FSetting& s, const std::vector<BigRat>& y_combo,
                                         const std::vector<BigRat>& point);

// Closed-form counterpart on the same data, through the structure constants:
// alpha = Y_0 - [X, Y_+], beta = Y_- - [X, Y_0] + 1/2 [X, [X, Y_+]].
AlphaBetaSample alpha_beta_closed_form(const FSetting& s, const std::vector<BigRat>& y_combo,
                                       const std::vector<BigRat>& point);

} // namespace fmethod

#endif
