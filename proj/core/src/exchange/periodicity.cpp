#include "dyqg/exchange/periodicity.hpp"

#include "dyqg/exchange/trig.hpp"
#include "dyqg/qaff/verma.hpp"

namespace dyqg::exchange {

UnitShiftReport verify_unit_shift(const FiniteExchange& R, cplx m, int samples, std::uint64_t seed) {
  const real wt[2] = {1, -1};
  const cplx k = R.params().k;
  const auto& J = R.fusion(m, k);
  static const Mat P = flip4();
  UnitShiftReport rep;

  // Claimed phases, read off the weights of each basis vector e_a (x) e_b.
  Vec d1(4), d2(4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      d1(2 * a + b) = qaff::delta_k(m - wt[b], k) - qaff::delta_k(m - wt[a] - wt[b], k);
      d2(2 * a + b) = qaff::delta_k(m, k) - qaff::delta_k(m - wt[a], k);
    }
  // u -> u + 1 turns z1^{-D1} into e^{-2 pi i D1} z1^{-D1}; the left factor is inverted in R.
  Vec right = P * J.D2;
  rep.ledger = std::max((J.D1 - d1).cwiseAbs().maxCoeff(), (right - d2).cwiseAbs().maxCoeff());

  Vec L(4), Rt(4);
  for (int i = 0; i < 4; ++i) {
    L(i) = e2pi(d1(i));
    Rt(i) = e2pi(-d2(i));
  }
  Rng g(seed);
  for (int s = 0; s < samples; ++s) {
    cplx u{g.uniform(-0.45L, 0.45L), g.uniform(-0.05L, 0.05L)};
    Mat lhs = R(u + 1.0L, m);
    Mat rhs = L.asDiagonal() * R(u, m) * Rt.asDiagonal();
    rep.sampled = std::max(rep.sampled, rel_diff(lhs, rhs));
  }
  return rep;
}

real tau_shift_residual(const std::function<Mat(cplx)>& R, const std::function<cplx(cplx)>& chi,
                        cplx tau, const std::vector<cplx>& us) {
  real worst = 0;
  for (auto u : us) {
    Mat a = R(u - tau), b = R(u) / chi(u);
    worst = std::max(worst, max_abs(a - b) / max_abs(b));
  }
  return worst;
}

}  // namespace dyqg::exchange
