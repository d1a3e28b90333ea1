#include "dyqg/core/series2.hpp"

namespace dyqg {

MatrixSeries2::MatrixSeries2(Eigen::Index rows, Eigen::Index cols, int xlo, int xhi, int ylo,
                             int yhi, cplx dx, cplx dy)
    : rows_(rows), cols_(cols), xlo_(xlo), xhi_(xhi), ylo_(ylo), yhi_(yhi), dx_(dx), dy_(dy) {
  if (xhi < xlo - 1 || yhi < ylo - 1) throw Error("MatrixSeries2: invalid window");
  c_.assign(static_cast<std::size_t>((xhi - xlo + 1) * (yhi - ylo + 1)), Mat::Zero(rows, cols));
}

Mat& MatrixSeries2::operator()(int i, int j) {
  if (!has(i, j)) throw Error("MatrixSeries2: bidegree outside window");
  return c_[static_cast<std::size_t>((i - xlo_) * (yhi_ - ylo_ + 1) + (j - ylo_))];
}

const Mat& MatrixSeries2::operator()(int i, int j) const {
  if (!has(i, j)) throw Error("MatrixSeries2: bidegree outside window");
  return c_[static_cast<std::size_t>((i - xlo_) * (yhi_ - ylo_ + 1) + (j - ylo_))];
}

MatrixSeries MatrixSeries2::at_y0() const {
  if (ylo_ > 0) throw Error("MatrixSeries2: y^0 outside window");
  MatrixSeries s(rows_, cols_, xlo_, xhi_, dx_);
  if (yhi_ < 0) return s;
  for (int i = xlo_; i <= xhi_; ++i) s[i] = (*this)(i, 0);
  return s;
}

Mat MatrixSeries2::sum_at(cplx x, cplx y) const {
  Mat r = Mat::Zero(rows_, cols_);
  for (int i = xlo_; i <= xhi_; ++i)
    for (int j = ylo_; j <= yhi_; ++j) r += (*this)(i, j) * std::pow(x, i) * std::pow(y, j);
  return r;
}

MatrixSeries2 series_mul(const MatrixSeries2& a, const MatrixSeries2& b) {
  if (a.cols() != b.rows()) throw Error("series shape mismatch in product");
  int xlo = a.xlo() + b.xlo(), ylo = a.ylo() + b.ylo();
  int xhi = std::min(a.xhi() + b.xlo(), a.xlo() + b.xhi());
  int yhi = std::min(a.yhi() + b.ylo(), a.ylo() + b.yhi());
  MatrixSeries2 r(a.rows(), b.cols(), xlo, xhi, ylo, yhi, a.dx() + b.dx(), a.dy() + b.dy());
  for (int i = xlo; i <= xhi; ++i)
    for (int j = ylo; j <= yhi; ++j)
      for (int i1 = a.xlo(); i1 <= a.xhi(); ++i1)
        for (int j1 = a.ylo(); j1 <= a.yhi(); ++j1)
          if (b.has(i - i1, j - j1)) r(i, j).noalias() += a(i1, j1) * b(i - i1, j - j1);
  return r;
}

}  // namespace dyqg
