#pragma once

#include "dyqg/intertwine/fusion.hpp"

namespace dyqg::exchange {

// R^{21}(x) from the first qKZ equation
//   Psi(z1, p z2) = R^{21}(p z2/z1) D_W Psi(z1, z2),
// where the columns of J are the four correlation functions and
// D_W[r, c] = q^{(2m - nu_c - mu_c + 2) wt_W(r) / 2} is the diagonal q-factor.
struct QkzExtraction {
  intertwine::FusionMatrix J;
  MatrixSeries RX;  // R^{21}(p x) as a series in x
  MatrixSeries R;   // R^{21}(x), coefficient j = RX_j / p^j
  Mat DW, DV;
};

QkzExtraction extract_R_from_qkz(const intertwine::FusionMatrix& J);

// Second qKZ equation with the same Psi and R, in the form
//   R^{21}(p y) [D_V^{-1} . J(y) p^{-D1}] = J(p y),
// max coefficient residual through order N relative to the largest coefficient.
real qkz2_residual(const QkzExtraction& e);

// Largest coefficient between different total weights, relative to the largest one.
real weight_zero_residual(const MatrixSeries& R);
real weight_zero_residual(const Mat& R, const std::vector<cplx>& row_weight,
                          const std::vector<cplx>& col_weight);

// Max over coefficients of |A_j - B_j| / max |A_j|.
real series_distance(const MatrixSeries& a, const MatrixSeries& b);

// Divides R by the scalar series R[0,0] and compares with the rational R^{21} series.
real rational_agreement(const MatrixSeries& R, cplx q);

// Leading coefficient divided by its (0,0) entry against R^{21}(0): lower triangular,
// diagonal (1, q^{-1}, q^{-1}, 1).
real leading_term_residual(const MatrixSeries& R, cplx q);

}  // namespace dyqg::exchange
