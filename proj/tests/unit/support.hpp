#pragma once

#include <doctest.h>

#include "dyqg/core/params.hpp"

namespace dyqg::test {

inline Mat random_mat(Rng& g, Eigen::Index r, Eigen::Index c) {
  Mat m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = {g.uniform(-1, 1), g.uniform(-1, 1)};
  return m;
}

inline double dbl(real x) { return static_cast<double>(x); }

}  // namespace dyqg::test
