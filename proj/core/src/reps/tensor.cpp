#include "dyqg/reps/tensor.hpp"

namespace dyqg::reps {

BoundedRepresentation tensor_product(const BoundedRepresentation& A, const BoundedRepresentation& B) {
  const Eigen::Index na = A.dim(), nb = B.dim();
  BoundedRepresentation T;
  T.s = std::max(A.s, B.s);
  auto& L = T.L;
  L.dim = na * nb;
  L.level = A.level() + B.level();
  const bool relA = !A.L.reliable.empty(), relB = !B.L.reliable.empty();
  for (Eigen::Index xa = 0; xa < na; ++xa)
    for (Eigen::Index xb = 0; xb < nb; ++xb) {
      L.h1.push_back(A.L.h1[xa] + B.L.h1[xb]);
      T.degree.push_back(A.degree[xa] + B.degree[xb]);
      T.length.push_back(A.length[xa] + B.length[xb]);
      const bool ok = (!relA || A.L.reliable[xa]) && (!relB || B.L.reliable[xb]);
      L.reliable.push_back(ok ? 1 : 0);
    }
  T.safe = A.safe + B.safe;
  exchange::LOperator La = A.L, Lb = B.L;
  // Rows (a na + xa) nb + xb.
  L.apply = [La, Lb, na, nb](cplx u, cplx m, cplx k, const Mat& cols) -> Mat {
    const Eigen::Index nc = cols.cols();
    Mat v(cols.rows(), nc);
    // L^{13}_B(u, m, k) on (a, xb) for each xa.
    for (Eigen::Index xa = 0; xa < na; ++xa) {
      Mat sub(2 * nb, nc);
      for (int a = 0; a < 2; ++a) sub.middleRows(a * nb, nb) = cols.middleRows((a * na + xa) * nb, nb);
      Mat r = Lb.apply(u, m, k, sub);
      for (int a = 0; a < 2; ++a) v.middleRows((a * na + xa) * nb, nb) = r.middleRows(a * nb, nb);
    }
    // L^{12}_A(u, m - h^{(3)}, k - l_B) on (a, xa) for each xb.
    Mat out(cols.rows(), nc);
    for (Eigen::Index xb = 0; xb < nb; ++xb) {
      Mat sub(2 * na, nc);
      for (int a = 0; a < 2; ++a)
        for (Eigen::Index xa = 0; xa < na; ++xa) sub.row(a * na + xa) = v.row((a * na + xa) * nb + xb);
      Mat r = La.apply(u, m - Lb.h1[xb], k - Lb.level, sub);
      for (int a = 0; a < 2; ++a)
        for (Eigen::Index xa = 0; xa < na; ++xa) out.row((a * na + xa) * nb + xb) = r.row(a * na + xa);
    }
    return out;
  };
  T.recipe = {{"kind", "tensor"}, {"a", A.recipe}, {"b", B.recipe}};
  return T;
}

BoundedRepresentation unit_object() {
  BoundedRepresentation U;
  U.L = exchange::LOperator::from_dense(1, {0}, 0, [](cplx, cplx, cplx) { return Mat(Mat::Identity(2, 2)); });
  U.degree = {0};
  U.length = {0};
  U.recipe = {{"kind", "unit"}};
  return U;
}

}  // namespace dyqg::reps
