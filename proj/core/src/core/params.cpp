#include "dyqg/core/params.hpp"

#include <sstream>

namespace dyqg {

void Params::set_q(cplx qq) {
  q = qq;
  logq = std::log(qq);
}

void Params::validate(int root_bound) const {
  if (n < 2) throw Error("rank n must be at least 2");
  if (std::abs(q) >= 1.0L) throw Error("|q| must be < 1");
  if (std::abs(std::exp(logq) - q) > 1e-14L * std::abs(q))
    throw Error("logq is not a logarithm of q");
  for (int m = 1; m <= root_bound; ++m) {
    if (std::abs(qpow(cplx(m)) - 1.0L) < 1e-6L) {
      std::ostringstream os;
      os << "q is too close to a root of unity (order " << m << ")";
      throw Error(os.str());
    }
  }
  if (std::abs(k + cplx(n)) < 1e-12L) throw Error("critical level: k = -n");
  if (static_cast<int>(lambda.size()) != n - 1)
    throw Error("lambda must have n-1 coordinates");
  if (N < 0) throw Error("series order N must be non-negative");
  if (!(tol > 0)) throw Error("tol must be positive");
}

Params sample_generic(const Params& base, std::uint64_t seed, const ParamBox& box) {
  Rng g(seed);
  Params p = base;
  p.seed = seed;
  p.k = {g.uniform(box.k_re_lo, box.k_re_hi), g.uniform(box.k_im_lo, box.k_im_hi)};
  p.lambda.assign(p.n - 1, cplx{});
  for (auto& c : p.lambda)
    c = {g.uniform(box.lam_re_lo, box.lam_re_hi), g.uniform(box.lam_im_lo, box.lam_im_hi)};
  return p;
}

}  // namespace dyqg
