#pragma once

#include "dyqg/core/series2.hpp"
#include "dyqg/intertwine/intertwiner.hpp"

namespace dyqg::intertwine {

// Top component of Phi^v(z1) Phi^w(z2) x_lambda for V = W = C^2 at (m, k), from twisted
// evaluations on a torus grid and a two-variable DFT. The table covers x = z1 in [-N-1, 1],
// y = z2 in [-1, N+1] with prefactor x^{-D1} y^{-D2},
// D1 = Delta(m - nu) - Delta(m - nu - mu), D2 = Delta(m) - Delta(m - nu).
struct CorrelationFunction {
  int iv = 0, iw = 0;
  int N = 0;
  MatrixSeries2 psi;  // 4 x 1, index 2 iv' + iw'
};

CorrelationFunction correlation_series(const Params& p, int iv, int iw, int N,
                                       VermaCache* cache = nullptr);

// Largest coefficient off the anti-diagonal i + j = 0, j >= 0 (so a power (z2/z1)^{-1}
// also counts as off), relative to the largest one on it.
real factorization_residual(const MatrixSeries2& psi);

}  // namespace dyqg::intertwine
