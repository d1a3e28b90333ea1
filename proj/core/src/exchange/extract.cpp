#include "dyqg/exchange/extract.hpp"

#include "dyqg/exchange/trig.hpp"

namespace dyqg::exchange {

namespace {

const real kWt[2] = {1, -1};

Mat diag_factor(const Params& p, bool slot_w) {
  Mat D(4, 4);
  const cplx m = p.m();
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      const real mu = kWt[c / 2], nu = kWt[c % 2];
      const real w = slot_w ? kWt[r % 2] : kWt[r / 2];
      D(r, c) = p.qpow((2.0L * m - nu - mu + 2.0L) * w / 2.0L);
    }
  return D;
}

// p^a = q^{-2(k+2) a}
cplx ppow(const Params& p, cplx a) { return p.qpow(-2.0L * (p.k + 2.0L) * a); }

}  // namespace

QkzExtraction extract_R_from_qkz(const intertwine::FusionMatrix& J) {
  const Params& p = J.params;
  const int N = J.N;
  const cplx pp = p.p();
  QkzExtraction e;
  e.J = J;
  e.DW = diag_factor(p, true);
  e.DV = diag_factor(p, false);

  Vec pD2(4);
  for (int c = 0; c < 4; ++c) pD2(c) = ppow(p, -J.D2(c));
  MatrixSeries lhs(4, 4, 0, N), G(4, 4, 0, N);
  cplx pj = 1;
  for (int j = 0; j <= N; ++j) {
    lhs[j] = pj * J.F[j] * pD2.asDiagonal();
    G[j] = e.DW.cwiseProduct(J.F[j]);
    pj *= pp;
  }
  MatrixSeries Ginv;
  try {
    Ginv = series_invert(G);
  } catch (const SingularLeading& err) {
    throw SingularLeading(std::string("qkz extraction: leading block of Psi is singular; ") + err.what(),
                          err.matrix);
  }
  e.RX = series_mul(lhs, Ginv, 0, N);
  e.R = MatrixSeries(4, 4, 0, N);
  pj = 1;
  for (int j = 0; j <= N; ++j) {
    e.R[j] = e.RX[j] / pj;
    pj *= pp;
  }
  return e;
}

real qkz2_residual(const QkzExtraction& e) {
  const auto& J = e.J;
  const Params& p = J.params;
  const int N = J.N;
  Vec pD1(4);
  for (int c = 0; c < 4; ++c) pD1(c) = ppow(p, -J.D1(c));
  MatrixSeries H(4, 4, 0, N), rhs(4, 4, 0, N);
  cplx pj = 1;
  for (int j = 0; j <= N; ++j) {
    H[j] = (J.F[j] * pD1.asDiagonal()).cwiseQuotient(e.DV);
    rhs[j] = pj * J.F[j];
    pj *= p.p();
  }
  auto lhs = series_mul(e.RX, H, 0, N);
  real res = 0, scale = 0;
  for (int j = 0; j <= N; ++j) {
    res = std::max(res, max_abs(lhs[j] - rhs[j]));
    scale = std::max(scale, max_abs(rhs[j]));
  }
  return scale > 0 ? res / scale : res;
}

real weight_zero_residual(const Mat& R, const std::vector<cplx>& rw, const std::vector<cplx>& cw) {
  real off = 0, all = 0;
  for (Eigen::Index r = 0; r < R.rows(); ++r)
    for (Eigen::Index c = 0; c < R.cols(); ++c) {
      const real a = std::abs(R(r, c));
      all = std::max(all, a);
      if (std::abs(rw[r] - cw[c]) > 1e-9L) off = std::max(off, a);
    }
  return all > 0 ? off / all : off;
}

real weight_zero_residual(const MatrixSeries& R) {
  std::vector<cplx> w(4);
  for (int r = 0; r < 4; ++r) w[r] = kWt[r / 2] + kWt[r % 2];
  real off = 0, all = 0;
  for (int j = R.lo(); j <= R.hi(); ++j) {
    all = std::max(all, max_abs(R[j]));
    off = std::max(off, weight_zero_residual(R[j], w, w) * max_abs(R[j]));
  }
  return all > 0 ? off / all : off;
}

real series_distance(const MatrixSeries& a, const MatrixSeries& b) {
  real worst = 0;
  const int lo = std::max(a.lo(), b.lo()), hi = std::min(a.hi(), b.hi());
  for (int j = lo; j <= hi; ++j) {
    const real s = max_abs(a[j]);
    const real d = max_abs(a[j] - b[j]);
    worst = std::max(worst, s > 0 ? d / s : d);
  }
  return worst;
}

real rational_agreement(const MatrixSeries& R, cplx q) {
  // Scalar series s = R[0,0]; compare R with s * R^{21}_rational.
  const int N = R.hi();
  MatrixSeries s(1, 1, 0, N);
  for (int j = 0; j <= N; ++j) s[j](0, 0) = R[j](0, 0);
  auto rat = rational_R21_series(q, N);
  MatrixSeries pred(4, 4, 0, N);
  for (int j = 0; j <= N; ++j)
    for (int i = 0; i <= j; ++i) pred[j] += s[i](0, 0) * rat[j - i];
  real res = 0, scale = 0;
  for (int j = 0; j <= N; ++j) {
    res = std::max(res, max_abs(R[j] - pred[j]));
    scale = std::max(scale, max_abs(R[j]));
  }
  return scale > 0 ? res / scale : res;
}

real leading_term_residual(const MatrixSeries& R, cplx q) {
  Mat r0 = R[0] / R[0](0, 0);
  return max_abs(r0 - rational_R21(q, 0));
}

}  // namespace dyqg::exchange
