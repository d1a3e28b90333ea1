#include "dyqg/exchange/trig.hpp"

namespace dyqg::exchange {

Mat rational_R21(cplx q, cplx x) {
  Mat R = Mat::Zero(4, 4);
  const cplx den = 1.0L - x / (q * q), a = 1.0L - 1.0L / (q * q);
  R(0, 0) = R(3, 3) = 1;
  R(1, 1) = R(2, 2) = (1.0L - x) / (q * den);
  R(2, 1) = a / den;
  R(1, 2) = a * x / den;
  return R;
}

MatrixSeries rational_R21_series(cplx q, int N) {
  MatrixSeries s(4, 4, 0, N);
  const cplx r = 1.0L / (q * q), a = 1.0L - r;
  cplx g = 1, gprev = 0;  // r^j and r^{j-1}
  for (int j = 0; j <= N; ++j) {
    Mat& c = s[j];
    if (j == 0) c(0, 0) = c(3, 3) = 1;
    c(1, 1) = c(2, 2) = (g - gprev) / q;
    c(2, 1) = a * g;
    c(1, 2) = a * gprev;
    gprev = g;
    g *= r;
  }
  return s;
}

Mat flip4() {
  Mat P = Mat::Zero(4, 4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) P(2 * b + a, 2 * a + b) = 1;
  return P;
}

}  // namespace dyqg::exchange
