#include "dyqg/intertwine/fusion.hpp"

#include "dyqg/core/weight.hpp"

namespace dyqg::intertwine {

Mat FusionMatrix::at(cplx u1, cplx u2) const {
  Mat f = F.sum_at(e2pi(u2 - u1));
  Vec ph(D1.size());
  for (Eigen::Index c = 0; c < ph.size(); ++c) ph(c) = e2pi(-(D1(c) * u1 + D2(c) * u2));
  return f * ph.asDiagonal();
}

Mat FusionMatrix::at_slice(cplx u) const { return at(0, u); }

FusionMatrix fusion_matrix(const Params& p, int N, VermaCache* cache) {
  if (p.n != 2) throw Error("fusion_matrix: only n = 2");
  auto V = qaff::EvaluationModule::vector(p);
  auto Y = TargetSpace::evaluation(V);
  const cplx m = p.m();
  FusionMatrix J;
  J.params = p;
  J.N = N;
  J.F = MatrixSeries(4, 4, 0, N);
  J.D1 = Vec(4);
  J.D2 = Vec(4);
  VermaCache local;
  VermaCache& vc = cache ? *cache : local;
  for (int iw = 0; iw < 2; ++iw) {
    const cplx nu = V.h1(iw);
    auto inner = solve_intertwiner(p, {m}, p.k, Y, Vec::Unit(2, iw), N, &vc);
    J.gram_cond_max = std::max(J.gram_cond_max, inner.gram_cond_max);
    for (int iv = 0; iv < 2; ++iv) {
      const cplx mu = V.h1(iv);
      const int col = 2 * iv + iw;
      J.D1(col) = qaff::delta_k(m - nu, p.k) - qaff::delta_k(m - nu - mu, p.k);
      J.D2(col) = qaff::delta_k(m, p.k) - qaff::delta_k(m - nu, p.k);
      auto top = contract_top(p, inner, Y, Vec::Unit(2, iv), affine_labels({m - nu - mu}, p.k));
      for (const auto& [a, vec] : top)
        if (a <= N) J.F[a].col(col) = vec;
    }
  }
  return J;
}

}  // namespace dyqg::intertwine
