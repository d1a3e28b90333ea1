#pragma once

#include <climits>
#include <string>
#include <vector>

#include "dyqg/core/params.hpp"

namespace dyqg::qaff {

struct AlgebraPresentation {
  int n = 2;
  Eigen::MatrixXi cartan;  // affine Cartan matrix, indices 0..n-1
  std::vector<std::string> labels;

  static AlgebraPresentation affine_sl(int n);
};

// Matrices of all generators on a finite (possibly truncated) weight space.
// K_i and d are diagonal in every module built here.
struct GeneratorTable {
  int n = 2;
  Eigen::Index dim = 0;
  std::vector<Mat> E, F;
  std::vector<Vec> K;
  Vec d;                    // empty when the module carries no degree operator
  cplx qc{1.0L, 0.0L};      // scalar action of q^c
  std::vector<int> length;  // F-word length per basis vector
  int max_length = INT_MAX; // truncation depth

  Mat Kmat(int i) const { return K[i].asDiagonal(); }
  Mat Kinv(int i) const { return K[i].cwiseInverse().asDiagonal(); }
};

}  // namespace dyqg::qaff
