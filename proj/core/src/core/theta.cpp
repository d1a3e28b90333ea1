#include "dyqg/core/theta.hpp"

#include <sstream>

namespace dyqg {

namespace {

// Returns the partial sum and accumulates |terms| into scale.
cplx partial(cplx u, cplx tau, int terms, real& scale) {
  cplx s{};
  scale = 0;
  for (int t = terms - 1; t >= 0; --t) {
    for (int sg : {1, -1}) {
      real j = sg * (t + 0.5L);
      cplx term = std::exp(pi * I * tau * (j * j) + 2.0L * pi * I * j * (u + 0.5L));
      s += term;
      scale += std::abs(term);
    }
  }
  return -s;
}

}  // namespace

cplx theta(cplx u, const ThetaParams& tp) {
  if (!(tp.tau.imag() > 0)) throw Error("theta: Im tau must be positive");
  real sc1 = 0, sc2 = 0;
  cplx a = partial(u, tp.tau, tp.truncation, sc1);
  cplx b = partial(u, tp.tau, tp.truncation + 5, sc2);
  if (!std::isfinite(std::abs(b)) || std::abs(a - b) > tp.tol * sc2) {
    std::ostringstream os;
    os << "theta: truncation " << tp.truncation << " not converged at u = ("
       << static_cast<double>(u.real()) << "," << static_cast<double>(u.imag()) << ")";
    throw Error(os.str());
  }
  return b;
}

cplx theta_trig(cplx u, cplx tau) {
  return 2.0L * std::exp(pi * I * tau / 4.0L) * std::sin(pi * u);
}

}  // namespace dyqg
