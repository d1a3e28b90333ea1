#pragma once

#include "dyqg/core/series.hpp"

namespace dyqg::exchange {

// R^{21}(x) of U_q(sl_2^) on C^2 (x) C^2, normalized so the e1 (x) e1 entry is 1.
// Basis index 2a + b.
Mat rational_R21(cplx q, cplx x);

// Its Taylor series at x = 0 through x^N.
MatrixSeries rational_R21_series(cplx q, int N);

// Flip of the two C^2 factors: P[2b + a, 2a + b] = 1.
Mat flip4();

}  // namespace dyqg::exchange
