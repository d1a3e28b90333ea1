#include "dyqg/elliptic/felder.hpp"

#include <sstream>

#include "dyqg/core/parallel.hpp"
#include "dyqg/exchange/qdybe.hpp"
#include "dyqg/exchange/trig.hpp"

namespace dyqg::elliptic {

FelderParams felder_params(const Params& p) {
  FelderParams fp;
  fp.theta.tau = p.tau();
  fp.eta = p.eta();
  return fp;
}

cplx felder_lambda(cplx m, cplx eta) { return -eta * (m + 1.0L); }

namespace {

cplx th(cplx u, const FelderParams& fp, bool trig) {
  return trig ? theta_trig(u, fp.theta.tau) : theta(u, fp.theta);
}

void guard(cplx value, cplx arg, const FelderParams& fp, const char* what) {
  const real scale = 2.0L * std::abs(std::exp(pi * I * fp.theta.tau / 4.0L));
  if (std::abs(value) < fp.pole_guard * scale) {
    std::ostringstream os;
    os << "felder_R: pole, theta(" << what << ") vanishes at (" << static_cast<double>(arg.real())
       << "," << static_cast<double>(arg.imag()) << ")";
    throw Error(os.str());
  }
}

}  // namespace

Mat felder_R(cplx u, cplx l12, const FelderParams& fp, bool flip_beta, bool use_trig) {
  const cplx eta = fp.eta;
  const cplx tu = th(u, fp, use_trig), tue = th(u + eta, fp, use_trig), te = th(eta, fp, use_trig);
  guard(tue, u + eta, fp, "u + eta");
  Mat R = Mat::Zero(4, 4);
  R(0, 0) = R(3, 3) = 1;
  for (int s = 0; s < 2; ++s) {
    const int i = s, j = 1 - s;
    const cplx l = s == 0 ? l12 : -l12;
    const cplx tl = th(l, fp, use_trig);
    guard(tl, l, fp, "lambda_ij");
    const cplx alpha = tu * th(l + eta, fp, use_trig) / (tue * tl);
    cplx beta = te * th(u + l, fp, use_trig) / (tue * tl);
    if (flip_beta) beta = -beta;
    const int ii = 2 * i + j, jj = 2 * j + i;
    R(ii, ii) = alpha;
    R(ii, jj) = beta;
  }
  return R;
}

exchange::RFunction felder_function(const FelderParams& fp, bool flip_beta) {
  return [fp, flip_beta](cplx u, cplx m, cplx) {
    return felder_R(u, felder_lambda(m, fp.eta), fp, flip_beta);
  };
}

std::vector<FelderSample> felder_samples(const Params& base, int count, std::uint64_t seed) {
  std::vector<FelderSample> out;
  Rng g(seed);
  for (int s = 0; s < count; ++s) {
    Params p = sample_generic(base, seed * 1000 + static_cast<std::uint64_t>(s), ParamBox::spectral());
    FelderSample x;
    x.fp = felder_params(p);
    x.m = p.m();
    x.u = {g.uniform(-0.45L, 0.45L), g.uniform(-0.1L, 0.1L)};
    x.u2 = {g.uniform(-0.45L, 0.45L), g.uniform(-0.1L, 0.1L)};
    out.push_back(x);
  }
  return out;
}

real NumericReport::worst() const {
  real w = 0;
  for (real r : residuals) w = std::max(w, r);
  return w;
}

namespace {

NumericReport each(const std::vector<FelderSample>& s, real tol,
                   const std::function<real(const FelderSample&)>& f) {
  NumericReport rep;
  rep.tol = tol;
  rep.residuals.assign(s.size(), 0);
  parallel_for(s.size(), [&](std::size_t i) { rep.residuals[i] = f(s[i]); });
  return rep;
}

}  // namespace

NumericReport verify_qdybe_numeric(const std::vector<FelderSample>& s, real tol, bool flip_beta) {
  return each(s, tol, [&](const FelderSample& x) {
    auto R = felder_function(x.fp, flip_beta);
    return exchange::rll_residual(R, exchange::LOperator::from_R(R), x.u, x.u2, x.m, 0);
  });
}

NumericReport felder_unitarity(const std::vector<FelderSample>& s, real tol) {
  static const Mat P = exchange::flip4();
  return each(s, tol, [&](const FelderSample& x) {
    const cplx l = felder_lambda(x.m, x.fp.eta);
    Mat prod = felder_R(x.u, l, x.fp) * P * felder_R(-x.u, l, x.fp) * P;
    return max_abs(prod - Mat::Identity(4, 4));
  });
}

NumericReport felder_periodicity(const std::vector<FelderSample>& s, real tol) {
  return each(s, tol, [&](const FelderSample& x) {
    const cplx l = felder_lambda(x.m, x.fp.eta), tau = x.fp.tau(), eta = x.fp.eta;
    Mat R = felder_R(x.u, l, x.fp);
    real r1 = rel_diff(felder_R(x.u + 1.0L, l, x.fp), R);
    Mat pred = R;
    for (int s2 = 0; s2 < 2; ++s2) {
      const int i = s2, j = 1 - s2;
      const cplx lij = s2 == 0 ? l : -l;
      const int ii = 2 * i + j, jj = 2 * j + i;
      pred(ii, ii) *= e2pi(eta);
      pred(ii, jj) *= e2pi(eta - lij);
    }
    real r2 = rel_diff(felder_R(x.u + tau, l, x.fp), pred);
    return std::max(r1, r2);
  });
}

NumericReport felder_trig_limit(const std::vector<FelderSample>& s, real tol) {
  return each(s, tol, [&](const FelderSample& x) {
    FelderParams fp = x.fp;
    fp.theta.tau = {fp.theta.tau.real(), 20.0L};
    const cplx l = felder_lambda(x.m, fp.eta);
    return rel_diff(felder_R(x.u, l, fp), felder_R(x.u, l, fp, false, true));
  });
}

}  // namespace dyqg::elliptic
