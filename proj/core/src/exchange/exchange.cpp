#include "dyqg/exchange/exchange.hpp"

#include "dyqg/exchange/trig.hpp"

namespace dyqg::exchange {

Mat exchange_value(const Mat& J, const Mat& R21, const Mat& J21) {
  return Eigen::PartialPivLU<Mat>(J).solve(R21 * J21);
}

FiniteExchange::FiniteExchange(const Params& base, int N,
                               std::shared_ptr<intertwine::VermaCache> cache)
    : base_(base), N_(N), vc_(cache ? std::move(cache) : std::make_shared<intertwine::VermaCache>()) {
  if (base.n != 2) throw Error("exchange: only n = 2");
}

const intertwine::FusionMatrix& FiniteExchange::fusion(cplx m, cplx k) const {
  auto key = std::make_pair(std::make_pair(m.real(), m.imag()), std::make_pair(k.real(), k.imag()));
  {
    std::lock_guard lk(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return *it->second;
  }
  Params p = base_.with_m(m).with_k(k);
  auto J = std::make_shared<const intertwine::FusionMatrix>(intertwine::fusion_matrix(p, N_, vc_.get()));
  std::lock_guard lk(mu_);
  return *cache_.emplace(key, J).first->second;
}

Mat FiniteExchange::operator()(cplx u, cplx m, cplx k) const {
  const auto& J = fusion(m, k);
  static const Mat P = flip4();
  return exchange_value(J.at(u, 0), rational_R21(base_.q, e2pi(-u)), P * J.at(0, u) * P);
}

DynamicalRMatrix FiniteExchange::as_dynamical() const {
  return {[this](cplx u, cplx m, cplx k) { return (*this)(u, m, k); }, 0};
}

}  // namespace dyqg::exchange
