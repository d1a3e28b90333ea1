#pragma once

#include "dyqg/exchange/exchange.hpp"

namespace dyqg::exchange {

struct UnitarityResult {
  cplx chi{};
  real scalar_residual = 0;  // distance of R(u) R^{21}(-u) from chi * I, relative
};

// R(u, m) P R(-u, m) P for a 4 x 4 matrix function.
UnitarityResult unitarity_factor(const RFunction& R, cplx u, cplx m, cplx k);

}  // namespace dyqg::exchange
