#pragma once

#include "dyqg/exchange/exchange.hpp"
#include "dyqg/intertwine/mixed.hpp"

namespace dyqg::exchange {

// R~_{C^2,X}(u, m, k) = J_{V,X}(z')^{-1} f(z) J*_{X,V}(z) P with z' = z q^{-l} and f the braiding
// X (x) V(z) -> V(z') (x) X. All z-dependence is diagonal, so
//   R~(u) = diag(e^{2 pi i u out}) C diag(e^{-2 pi i u in}),
//   C = q^{-l (G + D)} J_0^{-1} q^{l G} f_0 J*_0 P.
// Index a dim(X) + x on C^2 (x) X.
class MixedExchange {
 public:
  MixedExchange(const Params& base, intertwine::TargetSpace X, int mid_depth,
                std::shared_ptr<intertwine::VermaCache> cache = nullptr);

  const intertwine::GradedOperator& graded(cplx m, cplx k) const;
  Mat operator()(cplx u, cplx m, cplx k) const { return graded(m, k).at(u); }
  // Applies R~(u, m, k) to columns without forming the product of diagonals.
  Mat apply(cplx u, cplx m, cplx k, const Mat& cols) const;

  const intertwine::TargetSpace& X() const { return X_; }
  const Params& params() const { return base_; }
  int mid_depth() const { return mid_depth_; }

 private:
  Params base_;
  intertwine::TargetSpace X_;
  int mid_depth_;
  Mat braid_;
  std::shared_ptr<intertwine::VermaCache> vc_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<std::pair<real, real>, std::pair<real, real>>,
                   std::shared_ptr<const intertwine::GradedOperator>>
      cache_;
};

}  // namespace dyqg::exchange
