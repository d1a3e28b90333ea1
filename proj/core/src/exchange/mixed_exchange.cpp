#include "dyqg/exchange/mixed_exchange.hpp"

namespace dyqg::exchange {

MixedExchange::MixedExchange(const Params& base, intertwine::TargetSpace X, int mid_depth,
                             std::shared_ptr<intertwine::VermaCache> cache)
    : base_(base),
      X_(std::move(X)),
      mid_depth_(mid_depth),
      vc_(cache ? std::move(cache) : std::make_shared<intertwine::VermaCache>()) {
  if (base.n != 2) throw Error("mixed exchange: only n = 2");
  braid_ = intertwine::braid_constant(base_, X_);
}

const intertwine::GradedOperator& MixedExchange::graded(cplx m, cplx k) const {
  auto key = std::make_pair(std::make_pair(m.real(), m.imag()), std::make_pair(k.real(), k.imag()));
  {
    std::lock_guard lk(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return *it->second;
  }
  const Params p = base_.with_m(m).with_k(k);
  const Eigen::Index nx = X_.dim(), dim = 2 * nx;
  auto J = intertwine::fusion_VX(p, X_, vc_.get());
  auto Js = intertwine::fusion_XV(p, X_, mid_depth_, vc_.get());
  const Mat P = intertwine::swap_VX(nx);
  const cplx l = X_.level;

  Vec left(dim), mid(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    left(i) = p.qpow(-l * J.in(i));
    mid(i) = p.qpow(l * J.out(i));
  }
  auto R = std::make_shared<intertwine::GradedOperator>();
  Mat rhs = mid.asDiagonal() * braid_ * Js.C * P;
  R->C = left.asDiagonal() * Eigen::PartialPivLU<Mat>(J.C).solve(rhs);
  R->out = J.in;
  R->in = P.transpose() * Js.in;
  std::lock_guard lk(mu_);
  return *cache_.emplace(key, std::move(R)).first->second;
}

Mat MixedExchange::apply(cplx u, cplx m, cplx k, const Mat& cols) const {
  const auto& g = graded(m, k);
  Vec r(g.in.size()), l(g.out.size());
  for (Eigen::Index i = 0; i < r.size(); ++i) r(i) = e2pi(-u * g.in(i));
  for (Eigen::Index i = 0; i < l.size(); ++i) l(i) = e2pi(u * g.out(i));
  return l.asDiagonal() * (g.C * (r.asDiagonal() * cols));
}

}  // namespace dyqg::exchange
