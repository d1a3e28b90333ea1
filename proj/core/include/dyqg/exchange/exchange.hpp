#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>

#include "dyqg/intertwine/fusion.hpp"

namespace dyqg::exchange {

// R(u, m, k): a 4 x 4 (or larger, with a category-O factor) matrix function of
// u = u1 - u2, the dynamical variable m = lambda(h_1) and the level.
using RFunction = std::function<Mat(cplx u, cplx m, cplx k)>;

struct DynamicalRMatrix {
  RFunction eval;
  cplx level{};  // central charge of the second factor; 0 for C^2 (x) C^2
};

// J^{-1} R21 J^{21} at one point.
Mat exchange_value(const Mat& J, const Mat& R21, const Mat& J21);

// R_{C^2,C^2}(u, m, k) = J(u, 0)^{-1} R^{21}(e^{-2 pi i u}) P J(0, u) P with J at (m, k)
// truncated at order N. Fusion matrices are cached per (m, k).
class FiniteExchange {
 public:
  FiniteExchange(const Params& base, int N,
                 std::shared_ptr<intertwine::VermaCache> cache = nullptr);

  const intertwine::FusionMatrix& fusion(cplx m, cplx k) const;
  Mat operator()(cplx u, cplx m, cplx k) const;
  Mat operator()(cplx u, cplx m) const { return (*this)(u, m, base_.k); }
  DynamicalRMatrix as_dynamical() const;

  const Params& params() const { return base_; }
  int N() const { return N_; }

 private:
  Params base_;
  int N_;
  std::shared_ptr<intertwine::VermaCache> vc_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<std::pair<real, real>, std::pair<real, real>>,
                   std::shared_ptr<const intertwine::FusionMatrix>>
      cache_;
};

}  // namespace dyqg::exchange
