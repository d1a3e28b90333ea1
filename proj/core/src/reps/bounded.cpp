#include "dyqg/reps/bounded.hpp"

#include "dyqg/exchange/extract.hpp"

namespace dyqg::reps {

namespace {
const real kWt[2] = {1, -1};
}

std::map<int, int> BoundedRepresentation::graded_dims() const {
  std::map<int, int> d;
  for (int g : degree) d[g] += 1;
  return d;
}

void BoundedRepresentation::check_domain(cplx k) const {
  if (!(k.real() > s))
    throw Error("parameter domain: need Re k > " + std::to_string(static_cast<double>(s)));
}

json graded_dims_json(const BoundedRepresentation& rep) {
  json j = json::array();
  for (auto [g, d] : rep.graded_dims()) j.push_back({g, d});
  return j;
}

bool ClauseReport::smooth_ok() const {
  if (smooth_h < 1e-12L) return true;
  const real r = smooth_h2 / smooth_h;
  return r > 0.15L && r < 0.35L;
}

bool ClauseReport::pass() const {
  return weight_zero < 1e-12L && homogeneity < 1e-12L && lower_violations == 0 && rll < tol &&
         smooth_ok();
}

ClauseReport check_clauses(const BoundedRepresentation& rep, const exchange::RFunction& R, cplx m,
                           cplx k, int samples, std::uint64_t seed, real tol) {
  rep.check_domain(k);
  ClauseReport c;
  c.tol = tol;
  const auto& L = rep.L;
  const Eigen::Index nx = L.dim, dim = 2 * nx;
  std::vector<cplx> w(dim);
  for (int a = 0; a < 2; ++a)
    for (Eigen::Index x = 0; x < nx; ++x) w[a * nx + x] = kWt[a] + L.h1[x];

  // Coefficient at m as a matrix function of the parameter; graded form when available.
  auto coeff = [&](cplx mm) -> Mat {
    if (rep.graded) return rep.graded(mm, k).C;
    return L.dense(0.1L, mm, k);
  };
  const Mat C0 = coeff(m);
  c.weight_zero = exchange::weight_zero_residual(C0, w, w);

  if (rep.graded) {
    const auto& g = rep.graded(m, k);
    // out - degree shift must depend only on (slot index, weight of the X vector); same for in.
    std::map<std::pair<int, std::pair<real, real>>, cplx> seen_out, seen_in;
    for (int a = 0; a < 2; ++a)
      for (Eigen::Index x = 0; x < nx; ++x) {
        const Eigen::Index i = a * nx + x;
        auto key = std::make_pair(a, std::make_pair(L.h1[x].real(), L.h1[x].imag()));
        const cplx oo = g.out(i) + cplx(rep.degree[x]), oi = g.in(i) + cplx(rep.degree[x]);
        auto [it1, f1] = seen_out.try_emplace(key, oo);
        auto [it2, f2] = seen_in.try_emplace(key, oi);
        c.homogeneity = std::max({c.homogeneity, std::abs(it1->second - oo), std::abs(it2->second - oi)});
      }
    // Lower finiteness: column x gets only powers z^{n + offset} with n >= -(F_0 count of x).
    const real scale = max_abs(g.C);
    for (Eigen::Index col = 0; col < dim; ++col) {
      const Eigen::Index xc = col % nx;
      const int bound = rep.degree[xc];
      c.lower_bound_max = std::max(c.lower_bound_max, -bound);
      for (Eigen::Index row = 0; row < dim; ++row) {
        if (std::abs(g.C(row, col)) <= 1e-13L * scale) continue;
        const int n = rep.degree[xc] - rep.degree[row % nx];
        if (n < bound) ++c.lower_violations;
      }
    }
  }

  c.rll = exchange::verify_rll(R, L, m, k, samples, seed, tol).worst();

  const real h = 1e-2L;
  auto second = [&](real step) {
    return max_abs(coeff(m + step) - 2.0L * C0 + coeff(m - step)) / max_abs(C0);
  };
  c.smooth_h = second(h);
  c.smooth_h2 = second(h / 2);
  return c;
}

}  // namespace dyqg::reps
