#include "dyqg/exchange/qdybe.hpp"

#include <algorithm>

#include "dyqg/core/parallel.hpp"

namespace dyqg::exchange {

namespace {

const real kWt[2] = {1, -1};

// State on C^2 (x) C^2 (x) X, row (2a + b) dim + y.
struct Triple {
  const RFunction& R;
  const LOperator& L;
  Eigen::Index nx;

  Eigen::Index row(int a, int b, Eigen::Index y) const { return (2 * a + b) * nx + y; }

  // R12(u, m - h3 or m, k) acting on (a, b) for each y.
  Mat op12(cplx u, cplx m, cplx k, bool shift3, const Mat& v) const {
    Mat out = Mat::Zero(v.rows(), v.cols());
    std::map<std::pair<real, real>, Mat> cache;
    for (Eigen::Index y = 0; y < nx; ++y) {
      const cplx mm = shift3 ? m - L.h1[y] : m;
      auto key = std::make_pair(mm.real(), mm.imag());
      auto it = cache.find(key);
      if (it == cache.end()) it = cache.emplace(key, R(u, mm, k)).first;
      const Mat& r = it->second;
      Mat sub(4, v.cols());
      for (int ab = 0; ab < 4; ++ab) sub.row(ab) = v.row(ab * nx + y);
      Mat res = r * sub;
      for (int ab = 0; ab < 4; ++ab) out.row(ab * nx + y) = res.row(ab);
    }
    return out;
  }

  // L13(u, m - h2 or m, k) acting on (a, y) for each b.
  Mat op13(cplx u, cplx m, cplx k, bool shift2, const Mat& v) const {
    Mat out(v.rows(), v.cols());
    for (int b = 0; b < 2; ++b) {
      Mat sub(2 * nx, v.cols());
      for (int a = 0; a < 2; ++a)
        for (Eigen::Index y = 0; y < nx; ++y) sub.row(a * nx + y) = v.row(row(a, b, y));
      Mat res = L.apply(u, shift2 ? m - kWt[b] : m, k, sub);
      for (int a = 0; a < 2; ++a)
        for (Eigen::Index y = 0; y < nx; ++y) out.row(row(a, b, y)) = res.row(a * nx + y);
    }
    return out;
  }

  // L23(u, m - h1 or m, k) acting on (b, y) for each a.
  Mat op23(cplx u, cplx m, cplx k, bool shift1, const Mat& v) const {
    Mat out(v.rows(), v.cols());
    for (int a = 0; a < 2; ++a) {
      Mat sub = v.middleRows(2 * a * nx, 2 * nx);
      out.middleRows(2 * a * nx, 2 * nx) = L.apply(u, shift1 ? m - kWt[a] : m, k, sub);
    }
    return out;
  }
};

}  // namespace

Mat LOperator::dense(cplx u, cplx m, cplx k) const {
  return apply(u, m, k, Mat::Identity(2 * dim, 2 * dim));
}

LOperator LOperator::from_dense(Eigen::Index dim, std::vector<cplx> h1, cplx level,
                                std::function<Mat(cplx, cplx, cplx)> value) {
  LOperator L;
  L.dim = dim;
  L.h1 = std::move(h1);
  L.level = level;
  L.apply = [value = std::move(value)](cplx u, cplx m, cplx k, const Mat& cols) -> Mat {
    return value(u, m, k) * cols;
  };
  return L;
}

LOperator LOperator::from_R(const RFunction& R) { return from_dense(2, {1, -1}, 0, R); }

real rll_residual(const RFunction& R, const LOperator& L, cplx u, cplx u2, cplx m, cplx k) {
  const Eigen::Index nx = L.dim;
  std::vector<Eigen::Index> ys;
  for (Eigen::Index y = 0; y < nx; ++y)
    if (L.reliable.empty() || L.reliable[y]) ys.push_back(y);
  Triple t{R, L, nx};
  Mat cols = Mat::Zero(4 * nx, 4 * static_cast<Eigen::Index>(ys.size()));
  Eigen::Index c = 0;
  for (int ab = 0; ab < 4; ++ab)
    for (auto y : ys) cols(ab * nx + y, c++) = 1;

  Mat lhs = t.op23(u2, m, k, true, cols);
  lhs = t.op13(u, m, k, false, lhs);
  lhs = t.op12(u - u2, m, k - L.level, true, lhs);

  Mat rhs = t.op12(u - u2, m, k, false, cols);
  rhs = t.op13(u, m, k, true, rhs);
  rhs = t.op23(u2, m, k, false, rhs);

  real res = 0, scale = 0;
  for (int ab = 0; ab < 4; ++ab)
    for (auto y : ys) {
      const Eigen::Index r = ab * nx + y;
      res = std::max(res, (lhs.row(r) - rhs.row(r)).cwiseAbs().maxCoeff());
      scale = std::max(scale, lhs.row(r).cwiseAbs().maxCoeff());
    }
  return scale > 0 ? res / scale : res;
}

real RllReport::worst() const {
  real w = 0;
  for (const auto& s : samples) w = std::max(w, s.residual);
  return w;
}

RllReport verify_rll(const RFunction& R, const LOperator& L, cplx m, cplx k, int samples,
                     std::uint64_t seed, real tol) {
  RllReport rep;
  rep.tol = tol;
  Rng g(seed);
  for (int s = 0; s < samples; ++s) {
    RllSample x;
    x.u = {g.uniform(-0.45L, 0.45L), g.uniform(-0.05L, 0.05L)};
    x.u2 = {g.uniform(-0.45L, 0.45L), g.uniform(-0.05L, 0.05L)};
    x.m = m;
    x.k = k;
    rep.samples.push_back(x);
  }
  parallel_for(rep.samples.size(), [&](std::size_t i) {
    auto& x = rep.samples[i];
    x.residual = rll_residual(R, L, x.u, x.u2, x.m, x.k);
  });
  return rep;
}

RllReport verify_qdybe(const RFunction& R, cplx m, cplx k, int samples, std::uint64_t seed, real tol) {
  return verify_rll(R, LOperator::from_R(R), m, k, samples, seed, tol);
}

}  // namespace dyqg::exchange
