#include "dyqg/elliptic/gauge.hpp"

#include <cmath>

#include "dyqg/core/parallel.hpp"
#include "dyqg/exchange/trig.hpp"

namespace dyqg::elliptic {

Mat GaugeTransform::apply(cplx u, const Mat& R) const {
  const real h[4] = {0, 1, -1, 0};  // (h1 - h2)/2 on e_a (x) e_b
  Vec d(4), di(4);
  for (int i = 0; i < 4; ++i) {
    d(i) = e2pi(u * c * h[i]);
    di(i) = 1.0L / d(i);
  }
  return psi(u) * d.asDiagonal() * R * di.asDiagonal();
}

exchange::RFunction GaugeTransform::apply(const exchange::RFunction& R) const {
  return [g = *this, R](cplx u, cplx m, cplx k) { return g.apply(u, R(u, m, k)); };
}

Mat GaugeFit::closed_form(cplx u) const {
  Mat F = felder_R(u, lambda12, fp);
  for (std::size_t e = 0; e < entries.size(); ++e) {
    auto [r, c] = entries[e];
    F(r, c) *= C[e] * e2pi(a[e] * u);
  }
  return F;
}

GaugeFit gauge_fit(const exchange::FiniteExchange& R, cplx m, int order, int grid, real tol) {
  const Params& p = R.params();
  GaugeFit g;
  g.m = m;
  g.fp = felder_params(p);
  g.lambda12 = felder_lambda(m, g.fp.eta);
  g.order = order;
  g.grid = grid;
  g.tol = tol;

  // Exponent ledger: R(u + 1)[r, c] = e^{2 pi i (D1_r - (P D2)_c)} R(u)[r, c].
  const auto& J = R.fusion(m, p.k);
  static const Mat P = exchange::flip4();
  const Vec d2 = P * J.D2;
  auto ledger = [&](int r, int c) { return J.D1(r) - d2(c) - (J.D1(0) - d2(0)); };

  auto ratio = [&](cplx u) {
    Mat Re = R(u, m);
    return Mat(Re / Re(0, 0));
  };

  // Log-linear fit on a short line of samples.
  const int S = 8;
  const cplx u0{0.05L, 0.1L};
  const real h = 0.05L;
  std::vector<Mat> ex(S), fe(S);
  for (int s = 0; s < S; ++s) {
    const cplx u = u0 + h * static_cast<real>(s);
    ex[s] = ratio(u);
    fe[s] = felder_R(u, g.lambda12, g.fp);
  }
  for (std::size_t e = 0; e < g.entries.size(); ++e) {
    auto [r, c] = g.entries[e];
    std::vector<cplx> rs(S);
    for (int s = 0; s < S; ++s) rs[s] = ex[s](r, c) / fe[s](r, c);
    cplx a{};
    for (int s = 0; s + 1 < S; ++s) a += std::log(rs[s + 1] / rs[s]) / (2.0L * pi * I * h);
    a /= static_cast<real>(S - 1);
    g.a_fitted[e] = a;
    const cplx E = ledger(r, c);
    g.a[e] = E + std::round((a - E).real());
    g.exponent_gap = std::max(g.exponent_gap, std::abs(a - g.a[e]));
    cplx C{};
    for (int s = 0; s < S; ++s) C += rs[s] * e2pi(-g.a[e] * (u0 + h * static_cast<real>(s)));
    C /= static_cast<real>(S);
    g.C[e] = C;
    for (int s = 0; s < S; ++s) {
      const cplx u = u0 + h * static_cast<real>(s);
      g.log_fit_residual = std::max(g.log_fit_residual, std::abs(rs[s] - C * e2pi(g.a[e] * u)) / std::abs(rs[s]));
    }
  }
  g.gauge.c = (g.a[2] - g.a[3]) / 4.0L;
  g.gauge.psi = [a0 = g.a[0]](cplx u) { return e2pi(a0 * u); };

  // Fourier coefficients of the single-valued parts on the circle Im u = contour.
  std::vector<Mat> fs(grid), fc(grid);
  parallel_for(static_cast<std::size_t>(grid), [&](std::size_t t) {
    const cplx u{static_cast<real>(t) / grid, g.contour};
    fs[t] = ratio(u);
    fc[t] = g.closed_form(u);
  });
  real scale = 0;
  for (std::size_t e = 0; e < g.entries.size(); ++e) {
    auto [r, c] = g.entries[e];
    g.coeff_series[e].assign(2 * order + 1, 0);
    g.coeff_closed[e].assign(2 * order + 1, 0);
    for (int j = -order; j <= order; ++j) {
      cplx s1{}, s2{};
      for (int t = 0; t < grid; ++t) {
        const cplx u{static_cast<real>(t) / grid, g.contour};
        const cplx w = e2pi(-(g.a[e] + static_cast<real>(j)) * u);
        s1 += fs[t](r, c) * w;
        s2 += fc[t](r, c) * w;
      }
      g.coeff_series[e][j + order] = s1 / static_cast<real>(grid);
      g.coeff_closed[e][j + order] = s2 / static_cast<real>(grid);
      scale = std::max(scale, std::abs(s1) / grid);
    }
  }
  // Walk coefficients by |j|, entries in order; record the first one above tolerance.
  for (int aj = 0; aj <= order; ++aj)
    for (int sg : {1, -1}) {
      if (aj == 0 && sg < 0) continue;
      const int j = sg * aj;
      for (std::size_t e = 0; e < g.entries.size(); ++e) {
        const real d = std::abs(g.coeff_series[e][j + order] - g.coeff_closed[e][j + order]) / scale;
        g.coeff_residual = std::max(g.coeff_residual, d);
        if (j == 0) g.leading_residual = std::max(g.leading_residual, d);
        if (!g.localized && d >= tol) {
          g.localized = true;
          g.bad_entry = static_cast<int>(e);
          g.bad_power = j;
        }
      }
    }
  return g;
}

}  // namespace dyqg::elliptic
