#pragma once

#include "dyqg/exchange/exchange.hpp"

namespace dyqg::exchange {

// u -> u + 1 on the C^2 (x) C^2 exchange matrix:
//   R(u + 1, m) = diag(e^{2 pi i D1}) R(u, m) P diag(e^{-2 pi i D2}) P,
// D1 = Delta(m - h2) - Delta(m - h1 - h2), D2 = Delta(m) - Delta(m - h1) on each basis vector.
struct UnitShiftReport {
  real ledger = 0;   // offsets carried by the fusion series against the claimed phases
  real sampled = 0;  // R(u + 1) against the conjugated R(u) at sampled u, relative
};

UnitShiftReport verify_unit_shift(const FiniteExchange& R, cplx m, int samples, std::uint64_t seed);

// max_u |R(u - tau) - chi(u)^{-1} R(u)| / |R(u)| for a closed-form R.
real tau_shift_residual(const std::function<Mat(cplx)>& R, const std::function<cplx(cplx)>& chi,
                        cplx tau, const std::vector<cplx>& us);

}  // namespace dyqg::exchange
