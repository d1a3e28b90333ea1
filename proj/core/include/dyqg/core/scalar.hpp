#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace dyqg {

// Internal arithmetic runs in extended precision; serialized values are doubles.
using real = long double;
using cplx = std::complex<real>;

using Mat = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<cplx, Eigen::Dynamic, 1>;
using RVec = Eigen::Matrix<real, Eigen::Dynamic, 1>;

inline constexpr real pi = std::numbers::pi_v<real>;
inline const cplx I{0.0L, 1.0L};

// e^{2 pi i x}
inline cplx e2pi(cplx x) { return std::exp(2.0L * pi * I * x); }

inline real max_abs(const Mat& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0L; }

inline real rel_diff(const Mat& a, const Mat& b) {
  real s = std::max(max_abs(a), max_abs(b));
  return s > 0 ? max_abs(a - b) / s : 0.0L;
}

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dyqg
