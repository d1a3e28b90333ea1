#include "dyqg/qaff/evaluation.hpp"

namespace dyqg::qaff {

EvaluationModule EvaluationModule::vector(const Params& p) {
  const int n = p.n;
  EvaluationModule m;
  m.n = n;
  GeneratorTable& t = m.untwisted;
  t.n = n;
  t.dim = n;
  t.E.assign(n, Mat::Zero(n, n));
  t.F.assign(n, Mat::Zero(n, n));
  t.K.assign(n, Vec::Ones(n));
  t.length.assign(n, 0);
  for (int i = 1; i < n; ++i) {
    t.E[i](i - 1, i) = 1;
    t.F[i](i, i - 1) = 1;
    t.K[i](i - 1) = p.q;
    t.K[i](i) = 1.0L / p.q;
  }
  t.E[0](n - 1, 0) = 1;
  t.F[0](0, n - 1) = 1;
  t.K[0](0) = 1.0L / p.q;
  t.K[0](n - 1) = p.q;
  m.e_twist.assign(n, 0);
  m.f_twist.assign(n, 0);
  m.e_twist[0] = 1;
  m.f_twist[0] = -1;
  m.weights.assign(n, std::vector<cplx>(n - 1, cplx{}));
  for (int j = 0; j < n; ++j)
    for (int i = 1; i < n; ++i)
      m.weights[j][i - 1] = cplx((j == i - 1 ? 1 : 0) - (j == i ? 1 : 0));
  return m;
}

GeneratorTable EvaluationModule::at(cplx z) const {
  GeneratorTable t = untwisted;
  for (int i = 0; i < n; ++i) {
    t.E[i] *= std::pow(z, e_twist[i]);
    t.F[i] *= std::pow(z, f_twist[i]);
  }
  return t;
}

}  // namespace dyqg::qaff
