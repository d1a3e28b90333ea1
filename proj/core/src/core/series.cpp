#include "dyqg/core/series.hpp"

#include <sstream>

namespace dyqg {

MatrixSeries::MatrixSeries(Eigen::Index rows, Eigen::Index cols, int lo, int hi, cplx offset)
    : rows_(rows), cols_(cols), lo_(lo), hi_(hi), offset_(offset) {
  if (hi < lo - 1) throw Error("MatrixSeries: invalid window");
  c_.assign(static_cast<std::size_t>(hi - lo + 1), Mat::Zero(rows, cols));
}

MatrixSeries MatrixSeries::identity(Eigen::Index n, int lo, int hi) {
  MatrixSeries s(n, n, lo, hi);
  if (s.has(0)) s[0] = Mat::Identity(n, n);
  return s;
}

MatrixSeries MatrixSeries::constant(const Mat& a, int hi) {
  MatrixSeries s(a.rows(), a.cols(), 0, hi);
  s[0] = a;
  return s;
}

Mat& MatrixSeries::operator[](int m) {
  if (!has(m)) throw Error("MatrixSeries: power " + std::to_string(m) + " outside window");
  return c_[static_cast<std::size_t>(m - lo_)];
}

const Mat& MatrixSeries::operator[](int m) const {
  if (!has(m)) throw Error("MatrixSeries: power " + std::to_string(m) + " outside window");
  return c_[static_cast<std::size_t>(m - lo_)];
}

Mat MatrixSeries::sum_at(cplx z) const {
  Mat r = Mat::Zero(rows_, cols_);
  // Horner from the top power.
  for (int m = hi_; m >= lo_; --m) r = r * z + (*this)[m];
  if (lo_ != 0) r *= std::pow(z, lo_);
  return r;
}

Mat MatrixSeries::at_u(cplx u) const {
  Mat r = Mat::Zero(rows_, cols_);
  for (int m = lo_; m <= hi_; ++m) r += (*this)[m] * e2pi(u * cplx(m));
  return r * e2pi(-u * offset_);
}

MatrixSeries MatrixSeries::window(int lo, int hi) const {
  MatrixSeries s(rows_, cols_, lo, hi, offset_);
  for (int m = lo; m <= hi; ++m)
    if (has(m)) s[m] = (*this)[m];
  return s;
}

MatrixSeries MatrixSeries::scaled(cplx f) const {
  MatrixSeries s = *this;
  for (auto& c : s.c_) c *= f;
  return s;
}

namespace {

void same_shape(const MatrixSeries& a, const MatrixSeries& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("series shape mismatch");
  if (a.offset() != b.offset()) throw Error("series offset mismatch in sum");
}

MatrixSeries combine(const MatrixSeries& a, const MatrixSeries& b, real s) {
  same_shape(a, b);
  // Below its window a series is zero; above it the value is unknown.
  int lo = std::min(a.lo(), b.lo()), hi = std::min(a.hi(), b.hi());
  MatrixSeries r(a.rows(), a.cols(), lo, hi, a.offset());
  for (int m = lo; m <= hi; ++m) {
    if (a.has(m)) r[m] += a[m];
    if (b.has(m)) r[m] += s * b[m];
  }
  return r;
}

}  // namespace

MatrixSeries operator+(const MatrixSeries& a, const MatrixSeries& b) { return combine(a, b, 1); }
MatrixSeries operator-(const MatrixSeries& a, const MatrixSeries& b) { return combine(a, b, -1); }

int exact_hi(const MatrixSeries& a, const MatrixSeries& b) {
  return std::min(a.hi() + b.lo(), a.lo() + b.hi());
}

MatrixSeries series_mul(const MatrixSeries& a, const MatrixSeries& b) {
  return series_mul(a, b, a.lo() + b.lo(), exact_hi(a, b));
}

MatrixSeries series_mul(const MatrixSeries& a, const MatrixSeries& b, int lo, int hi) {
  if (a.cols() != b.rows()) throw Error("series shape mismatch in product");
  if (hi > exact_hi(a, b)) {
    int m = exact_hi(a, b) + 1;
    std::ostringstream os;
    os << "series window underflow: coefficient of z^" << m << " needs a_" << (m - b.lo())
       << " or b_" << (m - a.lo()) << ", outside the stored windows";
    throw Error(os.str());
  }
  MatrixSeries r(a.rows(), b.cols(), lo, hi, a.offset() + b.offset());
  for (int m = lo; m <= hi; ++m) {
    for (int i = a.lo(); i <= a.hi(); ++i) {
      int j = m - i;
      if (b.has(j)) r[m].noalias() += a[i] * b[j];
    }
  }
  return r;
}

MatrixSeries series_invert(const MatrixSeries& a, real cond_bound) {
  if (a.rows() != a.cols()) throw Error("series_invert: non-square coefficients");
  const Mat& a0 = a[a.lo()];
  Eigen::JacobiSVD<Mat> svd(a0);
  const auto& sv = svd.singularValues();
  real smax = sv.size() ? sv(0) : 0, smin = sv.size() ? sv(sv.size() - 1) : 0;
  if (!(smin > 0) || smax / smin > cond_bound) {
    std::ostringstream os;
    os << "series_invert: leading coefficient singular (condition "
       << static_cast<double>(smin > 0 ? smax / smin : INFINITY) << ")";
    throw SingularLeading(os.str(), a0);
  }
  Eigen::PartialPivLU<Mat> lu(a0);
  int len = a.hi() - a.lo();
  MatrixSeries r(a.rows(), a.cols(), -a.lo(), -a.lo() + len, -a.offset());
  r[-a.lo()] = lu.inverse();
  for (int m = 1; m <= len; ++m) {
    Mat s = Mat::Zero(a.rows(), a.cols());
    for (int j = 1; j <= m; ++j) s.noalias() += a[a.lo() + j] * r[-a.lo() + m - j];
    r[-a.lo() + m] = -lu.solve(s);
  }
  return r;
}

}  // namespace dyqg
