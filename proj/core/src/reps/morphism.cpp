#include "dyqg/reps/morphism.hpp"

namespace dyqg::reps {

real MorphismReport::worst() const {
  real w = 0;
  for (real r : residuals) w = std::max(w, r);
  return w;
}

MorphismReport check_morphism(const RepMorphism& phi, const BoundedRepresentation& V,
                              const BoundedRepresentation& W, cplx m, cplx k, int samples,
                              std::uint64_t seed, real tol) {
  const real wt[2] = {1, -1};
  const Eigen::Index nv = V.dim(), nw = W.dim();
  auto phi2 = [&](cplx mm, bool shift) {
    Mat P = Mat::Zero(2 * nw, 2 * nv);
    for (int a = 0; a < 2; ++a) P.block(a * nw, a * nv, nw, nv) = phi(shift ? mm - wt[a] : mm);
    return P;
  };
  const Mat Pm = phi2(m, false), Ps = phi2(m, true);
  if (Pm.rows() != 2 * nw || Pm.cols() != 2 * nv) throw Error("check_morphism: shape mismatch");

  std::vector<Eigen::Index> keep;
  for (int a = 0; a < 2; ++a)
    for (Eigen::Index x = 0; x < nv; ++x)
      if (V.L.reliable.empty() || V.L.reliable[x]) keep.push_back(a * nv + x);
  Mat cols = Mat::Zero(2 * nv, static_cast<Eigen::Index>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) cols(keep[i], static_cast<Eigen::Index>(i)) = 1;

  MorphismReport rep;
  rep.tol = tol;
  Rng g(seed);
  for (int s = 0; s < samples; ++s) {
    cplx u{g.uniform(-0.45L, 0.45L), g.uniform(-0.05L, 0.05L)};
    Mat lhs = W.L.apply(u, m, k, Ps * cols);
    Mat rhs = Pm * V.L.apply(u, m, k, cols);
    // Rows of W outside its safe window are not compared.
    real res = 0, scale = 0;
    for (int a = 0; a < 2; ++a)
      for (Eigen::Index x = 0; x < nw; ++x) {
        if (!W.L.reliable.empty() && !W.L.reliable[x]) continue;
        const Eigen::Index r = a * nw + x;
        res = std::max(res, (lhs.row(r) - rhs.row(r)).cwiseAbs().maxCoeff());
        scale = std::max({scale, lhs.row(r).cwiseAbs().maxCoeff(), rhs.row(r).cwiseAbs().maxCoeff()});
      }
    rep.residuals.push_back(scale > 0 ? res / scale : 0);
  }
  return rep;
}

}  // namespace dyqg::reps
