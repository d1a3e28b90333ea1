#include "dyqg/intertwine/correlation.hpp"

#include "dyqg/core/weight.hpp"

namespace dyqg::intertwine {

CorrelationFunction correlation_series(const Params& p, int iv, int iw, int N, VermaCache* cache) {
  if (p.n != 2) throw Error("correlation_series: only n = 2");
  auto V = qaff::EvaluationModule::vector(p);
  const cplx m = p.m(), nu = V.h1(iw), mu = V.h1(iv);
  const Vec w = Vec::Unit(2, iw), v = Vec::Unit(2, iv);
  const auto ev = affine_labels({m - nu - mu}, p.k);
  VermaCache local;
  VermaCache& vc = cache ? *cache : local;

  // Psi(z1, z2) without the z^{-D} prefactors is a polynomial in z1^{-1}, z2 of degree <= N in
  // each; sampling the torus on M = N + 3 points per circle resolves a rectangle one wider on
  // every side, so any leakage out of the expected support shows up in the table.
  const int M = N + 3;
  std::vector<std::vector<Vec>> val(M, std::vector<Vec>(M));
  for (int s = 0; s < M; ++s) {
    const cplx z2 = e2pi(cplx(static_cast<real>(s) / M));
    auto Y = TargetSpace::evaluation(V, z2);
    auto inner = solve_intertwiner(p, {m}, p.k, Y, w, N, &vc);
    for (int t = 0; t < M; ++t) {
      const cplx z1 = e2pi(cplx(static_cast<real>(t) / M));
      auto outer = TargetSpace::evaluation(V, z1);
      Vec sum = Vec::Zero(4);
      for (const auto& [a, vec] : contract_top(p, inner, outer, v, ev)) sum += vec;
      val[t][s] = sum;
    }
  }

  CorrelationFunction cf;
  cf.iv = iv;
  cf.iw = iw;
  cf.N = N;
  const cplx D1 = qaff::delta_k(m - nu, p.k) - qaff::delta_k(m - nu - mu, p.k);
  const cplx D2 = qaff::delta_k(m, p.k) - qaff::delta_k(m - nu, p.k);
  cf.psi = MatrixSeries2(4, 1, -N - 1, 1, -1, N + 1, D1, D2);
  for (int x = -N - 1; x <= 1; ++x)
    for (int y = -1; y <= N + 1; ++y) {
      Vec c = Vec::Zero(4);
      for (int t = 0; t < M; ++t)
        for (int s = 0; s < M; ++s) c += val[t][s] * e2pi(cplx(-static_cast<real>(x * t + y * s) / M));
      cf.psi(x, y) = c / static_cast<real>(M * M);
    }
  return cf;
}

real factorization_residual(const MatrixSeries2& psi) {
  real off = 0, on = 0;
  for (int i = psi.xlo(); i <= psi.xhi(); ++i)
    for (int j = psi.ylo(); j <= psi.yhi(); ++j) {
      real a = max_abs(psi(i, j));
      if (i + j == 0 && j >= 0) on = std::max(on, a);
      else off = std::max(off, a);
    }
  return on > 0 ? off / on : off;
}

}  // namespace dyqg::intertwine
