#include "dyqg/exchange/unitarity.hpp"

#include "dyqg/exchange/trig.hpp"

namespace dyqg::exchange {

UnitarityResult unitarity_factor(const RFunction& R, cplx u, cplx m, cplx k) {
  static const Mat P = flip4();
  Mat prod = R(u, m, k) * P * R(-u, m, k) * P;
  UnitarityResult r;
  r.chi = prod.diagonal().mean();
  Mat d = prod - r.chi * Mat::Identity(prod.rows(), prod.cols());
  r.scalar_residual = max_abs(d) / std::max<real>(std::abs(r.chi), 1e-300L);
  return r;
}

}  // namespace dyqg::exchange
