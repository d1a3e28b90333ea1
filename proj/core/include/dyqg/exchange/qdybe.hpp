#pragma once

#include <cstdint>
#include <vector>

#include "dyqg/exchange/exchange.hpp"

namespace dyqg::exchange {

// L(u, m, k) on C^2 (x) X, index a dim + x, given by its action on columns.
struct LOperator {
  Eigen::Index dim = 0;
  std::vector<cplx> h1;       // lambda(h_1) of each basis vector of X
  std::vector<char> reliable; // basis vectors inside the safe window (empty: all)
  cplx level{};
  std::function<Mat(cplx u, cplx m, cplx k, const Mat& cols)> apply;

  Mat dense(cplx u, cplx m, cplx k) const;
  static LOperator from_dense(Eigen::Index dim, std::vector<cplx> h1, cplx level,
                              std::function<Mat(cplx, cplx, cplx)> value);
  // X = C^2 with L = R; the RLL relation is then the QDYBE.
  static LOperator from_R(const RFunction& R);
};

// Residual of
//   R12(u - u', m - h3, k - l) L13(u, m, k) L23(u', m - h1, k)
//     = L23(u', m, k) L13(u, m - h2, k) R12(u - u', m, k)
// relative to the largest entry of the left side, on rows and columns whose X-vector is reliable.
real rll_residual(const RFunction& R, const LOperator& L, cplx u, cplx u2, cplx m, cplx k);

struct RllSample {
  cplx u, u2, m, k;
  real residual = 0;
};

struct RllReport {
  std::vector<RllSample> samples;
  real tol = 0;
  real worst() const;
  bool pass() const { return worst() < tol; }
};

// Samples u, u' near the real axis and evaluates rll_residual at each (parallel).
RllReport verify_rll(const RFunction& R, const LOperator& L, cplx m, cplx k, int samples,
                     std::uint64_t seed, real tol);

// The QDYBE for a 4 x 4 dynamical R-matrix (X = C^2).
RllReport verify_qdybe(const RFunction& R, cplx m, cplx k, int samples, std::uint64_t seed,
                       real tol);

}  // namespace dyqg::exchange
