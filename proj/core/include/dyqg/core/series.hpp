#pragma once

#include <vector>

#include "dyqg/core/scalar.hpp"

namespace dyqg {

// z^{-offset} * sum_{m=lo}^{hi} A_m z^m, all A_m of one shape.
class MatrixSeries {
 public:
  MatrixSeries() = default;
  MatrixSeries(Eigen::Index rows, Eigen::Index cols, int lo, int hi, cplx offset = {});

  static MatrixSeries identity(Eigen::Index n, int lo, int hi);
  static MatrixSeries constant(const Mat& a, int hi);

  Eigen::Index rows() const { return rows_; }
  Eigen::Index cols() const { return cols_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  cplx offset() const { return offset_; }
  void set_offset(cplx d) { offset_ = d; }

  bool has(int m) const { return m >= lo_ && m <= hi_; }
  Mat& operator[](int m);
  const Mat& operator[](int m) const;

  // Integer-power part at z.
  Mat sum_at(cplx z) const;
  // Full value at z = e^{2 pi i u}; z^{-offset} taken as e^{-2 pi i u offset}.
  Mat at_u(cplx u) const;

  MatrixSeries window(int lo, int hi) const;
  MatrixSeries scaled(cplx s) const;

 private:
  Eigen::Index rows_ = 0, cols_ = 0;
  int lo_ = 0, hi_ = -1;
  cplx offset_{};
  std::vector<Mat> c_;
};

// Singular leading coefficient in series_invert.
class SingularLeading : public Error {
 public:
  SingularLeading(const std::string& what, Mat m) : Error(what), matrix(std::move(m)) {}
  Mat matrix;
};

MatrixSeries operator+(const MatrixSeries& a, const MatrixSeries& b);
MatrixSeries operator-(const MatrixSeries& a, const MatrixSeries& b);

// Largest window on which every coefficient of a*b is exact.
int exact_hi(const MatrixSeries& a, const MatrixSeries& b);

MatrixSeries series_mul(const MatrixSeries& a, const MatrixSeries& b);
// Explicit target window; throws naming the first power that needs
// coefficients outside the stored windows.
MatrixSeries series_mul(const MatrixSeries& a, const MatrixSeries& b, int lo, int hi);

// Inverse on the window [-a.lo, -a.lo + (a.hi - a.lo)].
MatrixSeries series_invert(const MatrixSeries& a, real cond_bound = 1e12L);

}  // namespace dyqg
