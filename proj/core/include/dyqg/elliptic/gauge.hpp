#pragma once

#include <array>
#include <vector>

#include "dyqg/elliptic/felder.hpp"
#include "dyqg/exchange/exchange.hpp"

namespace dyqg::elliptic {

// u-dependent change of basis that maps QDYBE solutions to QDYBE solutions:
//   R -> psi(u) diag(e^{2 pi i u c (h1 - h2)/2}) R diag(e^{-2 pi i u c (h1 - h2)/2}).
struct GaugeTransform {
  cplx c{};
  std::function<cplx(cplx)> psi = [](cplx) { return cplx(1); };

  Mat apply(cplx u, const Mat& R) const;
  exchange::RFunction apply(const exchange::RFunction& R) const;
};

// Entries (1,1), (2,2), (1,2), (2,1) of the normalized exchange matrix R(u)/R(u)[0,0]
// against C_e e^{2 pi i a_e u} F_e(u), F the Felder matrix at lambda_12 = -eta (m + 1).
struct GaugeFit {
  static constexpr std::array<std::pair<int, int>, 4> entries{{{1, 1}, {2, 2}, {1, 2}, {2, 1}}};

  cplx m{};
  cplx lambda12{};
  FelderParams fp;
  std::array<cplx, 4> C{}, a{};        // a_e snapped to the exponent ledger
  std::array<cplx, 4> a_fitted{};      // before snapping
  real exponent_gap = 0;               // max |a_fitted - a|
  real log_fit_residual = 0;           // relative misfit at the fit samples
  GaugeTransform gauge;                // diagonal part: c = (a_12 - a_21) / 2

  int order = 3;
  int grid = 2048;
  real contour = 0.35L;                // Im u of the comparison circle
  std::array<std::vector<cplx>, 4> coeff_series, coeff_closed;  // j = -order..order
  real coeff_residual = 0;
  real leading_residual = 0;           // j = 0 only

  bool localized = false;              // first disagreeing coefficient
  int bad_entry = -1, bad_power = 0;
  real tol = 1e-6L;

  // Felder entries times C_e e^{2 pi i a_e u}, 1 on the e1 (x) e1 and e2 (x) e2 entries.
  Mat closed_form(cplx u) const;
  bool pass() const { return coeff_residual < tol; }
};

GaugeFit gauge_fit(const exchange::FiniteExchange& R, cplx m, int order = 3, int grid = 2048,
                   real tol = 1e-6L);

}  // namespace dyqg::elliptic
