#include "dyqg/qaff/relations.hpp"

#include <algorithm>

namespace dyqg::qaff {

bool RelationReport::pass() const {
  return std::all_of(entries.begin(), entries.end(), [&](const auto& e) { return e.residual < tol; });
}

real RelationReport::worst() const {
  real w = 0;
  for (const auto& e : entries) w = std::max(w, e.residual);
  return w;
}

cplx qbinomial(cplx q, int m, int r) {
  auto qi = [&](int a) { return (std::pow(q, a) - std::pow(q, -a)) / (q - 1.0L / q); };
  cplx num = 1, den = 1;
  for (int t = 1; t <= r; ++t) {
    num *= qi(m - r + t);
    den *= qi(t);
  }
  return num / den;
}

namespace {

// Max |res| over columns with length <= limit, scaled by the largest term.
real masked(const Mat& res, real scale, const GeneratorTable& t, int room) {
  real m = 0;
  for (Eigen::Index c = 0; c < res.cols(); ++c) {
    if (t.max_length != INT_MAX && t.length[c] > t.max_length - room) continue;
    m = std::max(m, res.col(c).cwiseAbs().maxCoeff());
  }
  return m / std::max<real>(scale, 1);
}

Mat power(const Mat& a, int e) {
  Mat r = Mat::Identity(a.rows(), a.cols());
  for (int i = 0; i < e; ++i) r = r * a;
  return r;
}

}  // namespace

RelationReport check_relations(const GeneratorTable& t, const AlgebraPresentation& pres, cplx q,
                               real tol) {
  const int n = t.n;
  const Eigen::Index dim = t.dim;
  RelationReport rep;
  rep.tol = tol;
  auto add = [&](std::string name, real r) { rep.entries.push_back({std::move(name), r}); };

  // q^c = K_0 K_1 ... K_{n-1}
  {
    Vec prod = Vec::Ones(dim);
    for (int i = 0; i < n; ++i) prod = prod.cwiseProduct(t.K[i]);
    Mat res = (prod - Vec::Constant(dim, t.qc)).asDiagonal();
    add("qc=K0..Kn-1", masked(res, std::abs(t.qc), t, 0));
  }

  for (int i = 0; i < n; ++i) {
    Mat K = t.Kmat(i), Ki = t.Kinv(i);
    for (int j = 0; j < n; ++j) {
      const cplx qa = std::pow(q, pres.cartan(i, j));
      Mat r1 = K * t.E[j] * Ki - qa * t.E[j];
      add("K" + std::to_string(i) + "E" + std::to_string(j), masked(r1, max_abs(t.E[j]), t, 0));
      Mat r2 = K * t.F[j] * Ki - t.F[j] / qa;
      add("K" + std::to_string(i) + "F" + std::to_string(j), masked(r2, max_abs(t.F[j]), t, 1));

      Mat ef = t.E[i] * t.F[j], fe = t.F[j] * t.E[i];
      Mat comm = ef - fe;
      if (i == j) comm -= (K - Ki) / (q - 1.0L / q);
      real sc = std::max({max_abs(ef), max_abs(fe)});
      add("[E" + std::to_string(i) + ",F" + std::to_string(j) + "]", masked(comm, sc, t, 1));

      if (i != j) {
        const int m = 1 - pres.cartan(i, j);
        Mat se = Mat::Zero(dim, dim), sf = Mat::Zero(dim, dim);
        real sce = 0, scf = 0;
        for (int r = 0; r <= m; ++r) {
          cplx c = (r % 2 ? -1.0L : 1.0L) * qbinomial(q, m, r);
          Mat te = c * power(t.E[i], m - r) * t.E[j] * power(t.E[i], r);
          Mat tf = c * power(t.F[i], m - r) * t.F[j] * power(t.F[i], r);
          sce = std::max(sce, max_abs(te));
          scf = std::max(scf, max_abs(tf));
          se += te;
          sf += tf;
        }
        add("serreE" + std::to_string(i) + std::to_string(j), masked(se, sce, t, 0));
        add("serreF" + std::to_string(i) + std::to_string(j), masked(sf, scf, t, m + 1));
      }
    }
  }

  if (t.d.size() == dim) {
    Mat D = t.d.asDiagonal();
    for (int i = 0; i < n; ++i) {
      Mat re = D * t.E[i] - t.E[i] * D - (i == 0 ? 1.0L : 0.0L) * t.E[i];
      Mat rf = D * t.F[i] - t.F[i] * D + (i == 0 ? 1.0L : 0.0L) * t.F[i];
      add("dE" + std::to_string(i), masked(re, max_abs(t.E[i]), t, 0));
      add("dF" + std::to_string(i), masked(rf, max_abs(t.F[i]), t, 1));
    }
  }
  return rep;
}

}  // namespace dyqg::qaff
