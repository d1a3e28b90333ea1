#pragma once

#include <vector>

#include "dyqg/core/series.hpp"

namespace dyqg {

// x^{-dx} y^{-dy} * sum_{i,j} A_{ij} x^i y^j over a rectangular window.
class MatrixSeries2 {
 public:
  MatrixSeries2() = default;
  MatrixSeries2(Eigen::Index rows, Eigen::Index cols, int xlo, int xhi, int ylo, int yhi,
                cplx dx = {}, cplx dy = {});

  Eigen::Index rows() const { return rows_; }
  Eigen::Index cols() const { return cols_; }
  int xlo() const { return xlo_; }
  int xhi() const { return xhi_; }
  int ylo() const { return ylo_; }
  int yhi() const { return yhi_; }
  cplx dx() const { return dx_; }
  cplx dy() const { return dy_; }

  bool has(int i, int j) const { return i >= xlo_ && i <= xhi_ && j >= ylo_ && j <= yhi_; }
  Mat& operator()(int i, int j);
  const Mat& operator()(int i, int j) const;

  // Coefficients of y^0 as a series in x.
  MatrixSeries at_y0() const;
  Mat sum_at(cplx x, cplx y) const;

 private:
  Eigen::Index rows_ = 0, cols_ = 0;
  int xlo_ = 0, xhi_ = -1, ylo_ = 0, yhi_ = -1;
  cplx dx_{}, dy_{};
  std::vector<Mat> c_;
};

// Product truncated to the exact rectangle.
MatrixSeries2 series_mul(const MatrixSeries2& a, const MatrixSeries2& b);

}  // namespace dyqg
