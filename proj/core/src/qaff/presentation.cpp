#include "dyqg/qaff/presentation.hpp"

namespace dyqg::qaff {

AlgebraPresentation AlgebraPresentation::affine_sl(int n) {
  if (n < 2) throw Error("affine_sl: n must be at least 2");
  AlgebraPresentation a;
  a.n = n;
  a.cartan = Eigen::MatrixXi::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    a.cartan(i, i) = 2;
    if (n == 2) {
      a.cartan(i, 1 - i) = -2;
    } else {
      a.cartan(i, (i + 1) % n) = -1;
      a.cartan(i, (i + n - 1) % n) = -1;
    }
  }
  for (int i = 0; i < n; ++i)
    for (const char* g : {"E", "F", "K"}) a.labels.push_back(std::string(g) + std::to_string(i));
  a.labels.push_back("q^c");
  a.labels.push_back("d");
  return a;
}

}  // namespace dyqg::qaff
