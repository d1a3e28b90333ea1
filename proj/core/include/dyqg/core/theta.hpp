#pragma once

#include "dyqg/core/scalar.hpp"

namespace dyqg {

struct ThetaParams {
  cplx tau{0.0L, 1.0L};
  int truncation = 30;  // terms j = +-1/2, ..., +-(truncation-1/2)
  real tol = 1e-14L;    // self-convergence tolerance, relative to the term scale
};

// theta(u|tau) = -sum_{j in Z+1/2} e^{pi i tau j^2 + 2 pi i j (u + 1/2)}.
// Throws on Im tau <= 0 or when 5 extra terms move the value by more than tol.
cplx theta(cplx u, const ThetaParams& tp);

// Leading behaviour as Im tau -> infinity: 2 e^{pi i tau/4} sin(pi u).
cplx theta_trig(cplx u, cplx tau);

}  // namespace dyqg
