#pragma once

#include "dyqg/core/params.hpp"
#include "dyqg/core/theta.hpp"
#include "dyqg/exchange/exchange.hpp"

namespace dyqg::elliptic {

struct FelderParams {
  ThetaParams theta;            // carries tau
  cplx eta{};
  real pole_guard = 1e-12L;     // denominators below this (relative to their term scale) are poles

  cplx tau() const { return theta.tau; }
};

// tau = (i/pi)(k+2) log q, so p = e^{2 pi i tau}; eta = log q / (pi i), so e^{2 pi i eta} = q^2.
FelderParams felder_params(const Params& p);

// Dynamical variable of the matching Felder matrix: lambda_12 = -eta (m + 1).
// A weight shift m -> m - w is then lambda_12 -> lambda_12 + eta w.
cplx felder_lambda(cplx m, cplx eta);

// sum_i E_ii (x) E_ii + sum_{i != j} alpha_ij E_ii (x) E_jj + beta_ij E_ij (x) E_ji with
//   alpha_ij = th(u) th(l_ij + eta) / (th(u + eta) th(l_ij)),
//   beta_ij  = th(eta) th(u + l_ij) / (th(u + eta) th(l_ij)),  l_21 = -l_12.
// flip_beta negates beta (negative control). use_trig replaces theta by its tau -> i infinity limit.
Mat felder_R(cplx u, cplx lambda12, const FelderParams& fp, bool flip_beta = false,
             bool use_trig = false);

// Felder R as a dynamical R-matrix in the m variable (k is ignored; tau and eta are fixed).
exchange::RFunction felder_function(const FelderParams& fp, bool flip_beta = false);

struct FelderSample {
  cplx u, u2, m;
  FelderParams fp;
};

// Seeded samples of (u, u', m, tau, eta); tau and eta come from q, k in the spectral box.
std::vector<FelderSample> felder_samples(const Params& base, int count, std::uint64_t seed);

struct NumericReport {
  std::vector<real> residuals;
  real tol = 0;
  real worst() const;
  bool pass() const { return worst() < tol; }
};

// QDYBE at each sample.
NumericReport verify_qdybe_numeric(const std::vector<FelderSample>& s, real tol, bool flip_beta = false);
// R(u) P R(-u) P = 1 at each sample.
NumericReport felder_unitarity(const std::vector<FelderSample>& s, real tol);
// u -> u + 1 leaves R unchanged; u -> u + tau multiplies alpha by e^{2 pi i eta} and
// beta_ij by e^{2 pi i (eta - l_ij)}.
NumericReport felder_periodicity(const std::vector<FelderSample>& s, real tol);
// Entrywise distance from the trigonometric degeneration at Im tau = 20.
NumericReport felder_trig_limit(const std::vector<FelderSample>& s, real tol);

}  // namespace dyqg::elliptic
