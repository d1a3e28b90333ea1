#pragma once

#include <vector>

#include "dyqg/core/scalar.hpp"

namespace dyqg {

// Affine weight (nu, r, s): finite part in fundamental-weight coordinates,
// level r (eigenvalue of c) and degree s (eigenvalue of d).
struct Weight {
  std::vector<cplx> coords;
  cplx level{};
  cplx degree{};

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
};

// (omega_i, omega_j) for sl_n under the trace form, 1-based i, j.
real fundamental_pairing(int n, int i, int j);

// Symmetric bilinear form on h* in fundamental coordinates.
cplx pairing(int n, const std::vector<cplx>& a, const std::vector<cplx>& b);

// rho = sum of fundamental weights.
std::vector<cplx> rho(int n);

// Finite part of the affine simple root alpha_i (i = 0..n-1).
std::vector<cplx> simple_root(int n, int i);

// lambda(h_i) for i = 0..n-1 at level k; lambda(h_0) = k - sum_{i>0} lambda(h_i).
std::vector<cplx> affine_labels(const std::vector<cplx>& lambda, cplx k);

}  // namespace dyqg
