#pragma once

#include "dyqg/core/series.hpp"
#include "dyqg/intertwine/intertwiner.hpp"

namespace dyqg::intertwine {

// J(z1, z2) = F(x) diag(z1^{-D1} z2^{-D2}) on C^2 (x) C^2, x = z2 / z1,
// column 2 iv + iw, F(x) = sum_{j=0}^{N} F_j x^j.
struct FusionMatrix {
  Params params;
  int N = 0;
  MatrixSeries F;
  Vec D1, D2;
  real gram_cond_max = 1;

  // Value at z1 = e^{2 pi i u1}, z2 = e^{2 pi i u2}.
  Mat at(cplx u1, cplx u2) const;
  // Value on the diagonal slice, F(e^{2 pi i u}) diag(e^{-2 pi i D2 u}) (z1 = 1).
  Mat at_slice(cplx u) const;
};

FusionMatrix fusion_matrix(const Params& p, int N, VermaCache* cache = nullptr);

}  // namespace dyqg::intertwine
