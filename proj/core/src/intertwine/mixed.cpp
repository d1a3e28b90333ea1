#include "dyqg/intertwine/mixed.hpp"

#include "dyqg/core/weight.hpp"

namespace dyqg::intertwine {

Mat GradedOperator::at(cplx u) const {
  Vec l(out.size()), r(in.size());
  for (Eigen::Index i = 0; i < l.size(); ++i) l(i) = e2pi(u * out(i));
  for (Eigen::Index i = 0; i < r.size(); ++i) r(i) = e2pi(-u * in(i));
  return l.asDiagonal() * C * r.asDiagonal();
}

namespace {

Vec summed(const std::map<int, Vec>& parts, Eigen::Index size) {
  Vec v = Vec::Zero(size);
  for (const auto& [a, x] : parts) v += x;
  return v;
}

}  // namespace

GradedOperator fusion_VX(const Params& p, const TargetSpace& X, VermaCache* cache) {
  if (p.n != 2) throw Error("fusion_VX: only n = 2");
  auto Vm = qaff::EvaluationModule::vector(p);
  auto V = TargetSpace::evaluation(Vm);
  const Eigen::Index nx = X.dim(), dim = 2 * nx;
  const cplx m = p.m(), kl = p.k - X.level;
  GradedOperator J;
  J.C = Mat::Zero(dim, dim);
  J.out = Vec(dim);
  J.in = Vec(dim);
  for (int j = 0; j < 2; ++j)
    for (Eigen::Index x = 0; x < nx; ++x) J.out(j * nx + x) = X.grade[x];

  for (Eigen::Index xi = 0; xi < nx; ++xi) {
    auto inner = solve_intertwiner(p, {m}, p.k, X, Vec::Unit(nx, xi), X.grade[xi], cache);
    const cplx mid = inner.target[0];
    for (int j = 0; j < 2; ++j) {
      const cplx tgt = mid - Vm.h1(j);
      auto top = contract_top(p, inner, V, Vec::Unit(2, j), affine_labels({tgt}, kl));
      J.C.col(j * nx + xi) = summed(top, dim);
      J.in(j * nx + xi) = cplx(X.grade[xi]) + qaff::delta_k(mid, kl) - qaff::delta_k(tgt, kl);
    }
  }
  return J;
}

GradedOperator fusion_XV(const Params& p, const TargetSpace& X, int mid_depth, VermaCache* cache) {
  if (p.n != 2) throw Error("fusion_XV: only n = 2");
  auto Vm = qaff::EvaluationModule::vector(p);
  auto V = TargetSpace::evaluation(Vm);
  const Eigen::Index nx = X.dim(), dim = 2 * nx;
  const cplx m = p.m(), kl = p.k - X.level;
  GradedOperator J;
  J.C = Mat::Zero(dim, dim);
  J.out = Vec(dim);
  J.in = Vec(dim);
  for (Eigen::Index x = 0; x < nx; ++x)
    for (int j = 0; j < 2; ++j) J.out(2 * x + j) = X.grade[x];

  for (int j = 0; j < 2; ++j) {
    auto inner = solve_intertwiner(p, {m}, p.k, V, Vec::Unit(2, j), mid_depth, cache, mid_depth);
    const cplx mid = inner.target[0];
    const cplx D = qaff::delta_k(m, p.k) - qaff::delta_k(mid, p.k);
    for (Eigen::Index xi = 0; xi < nx; ++xi) {
      const cplx tgt = mid - X.weights[xi][0];
      auto top = contract_top(p, inner, X, Vec::Unit(nx, xi), affine_labels({tgt}, kl));
      J.C.col(2 * xi + j) = summed(top, dim);
      J.in(2 * xi + j) = cplx(X.grade[xi]) + D;
    }
  }
  return J;
}

Mat braid_constant(const Params& p, const TargetSpace& X) {
  if (!X.is_verma) throw Error("braid_constant: X must be a Verma module");
  auto Vm = qaff::EvaluationModule::vector(p);
  const auto& Vt = Vm.untwisted;
  const Eigen::Index nx = X.dim(), dim = 2 * nx;
  std::vector<Vec> kxinv(2), kvinv(2);
  for (int i = 0; i < 2; ++i) {
    kxinv[i] = X.table.K[i].cwiseInverse();
    kvinv[i] = Vt.K[i].cwiseInverse();
  }
  const cplx c[2] = {p.qpow(X.top_h1), 1};
  Mat S(dim, dim), T(dim, dim);
  for (Eigen::Index xi = 0; xi < nx; ++xi) {
    const auto& word = X.words[xi];
    for (int j = 0; j < 2; ++j) {
      // Delta(word) applied to x_nu (x) e_j and to c_j e_j (x) x_nu.
      Mat s = Mat::Zero(nx, 2), t = Mat::Zero(2, nx);
      s(0, j) = 1;
      t(j, 0) = c[j];
      for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const int i = *it;
        s = (X.table.F[i] * s + kxinv[i].asDiagonal() * s * Vt.F[i].transpose()).eval();
        t = (Vt.F[i] * t + kvinv[i].asDiagonal() * t * X.table.F[i].transpose()).eval();
      }
      for (Eigen::Index x = 0; x < nx; ++x)
        for (int a = 0; a < 2; ++a) {
          S(2 * x + a, 2 * xi + j) = s(x, a);
          T(a * nx + x, 2 * xi + j) = t(a, x);
        }
    }
  }
  Vec gt(dim), gw(dim);
  for (Eigen::Index x = 0; x < nx; ++x)
    for (int a = 0; a < 2; ++a) {
      gt(a * nx + x) = p.qpow(-X.level * cplx(X.grade[x]));
      gw(2 * x + a) = p.qpow(X.level * cplx(X.grade[x]));
    }
  Mat TS = gt.asDiagonal() * T * gw.asDiagonal();
  // M S = TS, so M = TS S^{-1}; solve on the transpose.
  Mat Mt = Eigen::PartialPivLU<Mat>(S.transpose()).solve(TS.transpose());
  return Mt.transpose();
}

Mat swap_VX(Eigen::Index nx) {
  Mat P = Mat::Zero(2 * nx, 2 * nx);
  for (Eigen::Index x = 0; x < nx; ++x)
    for (int j = 0; j < 2; ++j) P(2 * x + j, j * nx + x) = 1;
  return P;
}

}  // namespace dyqg::intertwine
