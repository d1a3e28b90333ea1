#include "dyqg/core/weight.hpp"
#include "dyqg/exchange/extract.hpp"
#include "dyqg/intertwine/correlation.hpp"
#include "dyqg/intertwine/fusion.hpp"
#include "dyqg/intertwine/mixed.hpp"
#include "support.hpp"

using namespace dyqg;
using namespace dyqg::intertwine;

TEST_SUITE("intertwine") {

TEST_CASE("grade-1 coefficients match the hand solve of E_i Phi = 0") {
  // On F_i x_mu (x) X the annihilation condition reads [mu(h_i)] K_i X + E_i w = 0.
  Params p;
  auto V = qaff::EvaluationModule::vector(p);
  auto Y = TargetSpace::evaluation(V);
  for (int iw = 0; iw < 2; ++iw) {
    const Vec w = Vec::Unit(2, iw);
    auto phi = solve_intertwiner(p, p.lambda, p.k, Y, w, 2);
    const auto labels = affine_labels(phi.target, phi.target_level);
    for (int i = 0; i < 2; ++i) {
      qaff::Counts c{0, 0};
      c[i] = 1;
      Vec expect = -(Y.table.K[i].cwiseInverse().asDiagonal() * (Y.table.E[i] * w)) / p.qint(labels[i]);
      auto it = phi.coeff.find(c);
      Vec got = it == phi.coeff.end() ? Vec(Vec::Zero(2)) : Vec(it->second.row(0).transpose());
      CHECK(max_abs(got - expect) < 1e-15L * std::max<real>(1, max_abs(expect)));
    }
  }
}

TEST_CASE("annihilation holds through grade 4 at seeded parameters") {
  auto V = qaff::EvaluationModule::vector(Params{});
  for (std::uint64_t s = 0; s < 4; ++s) {
    auto p = sample_generic(Params{}, 300 + s);
    auto Y = TargetSpace::evaluation(qaff::EvaluationModule::vector(p));
    for (int iw = 0; iw < 2; ++iw) {
      auto phi = solve_intertwiner(p, p.lambda, p.k, Y, Vec::Unit(2, iw), 4);
      CHECK(annihilation_residual(phi, Y, p) < 1e-9L);
      CHECK(phi.gram_cond_max < 1e8L);
    }
  }
}

TEST_CASE("the solution is linear in the expectation value") {
  Params p;
  auto Y = TargetSpace::evaluation(qaff::EvaluationModule::vector(p));
  auto a = solve_intertwiner(p, p.lambda, p.k, Y, Vec::Unit(2, 0), 3);
  auto b = solve_intertwiner(p, p.lambda, p.k, Y, cplx(2.5L, -1) * Vec::Unit(2, 0), 3);
  REQUIRE(a.coeff.size() == b.coeff.size());
  for (const auto& [c, m] : a.coeff) CHECK(max_abs(b.coeff.at(c) - cplx(2.5L, -1) * m) < 1e-14L);
  CHECK_THROWS_AS(solve_intertwiner(p, p.lambda, p.k, Y, Vec::Ones(2), 3), Error);
}

TEST_CASE("correlation functions collapse onto the anti-diagonal") {
  Params p;
  auto J = fusion_matrix(p, 4);
  for (int iv = 0; iv < 2; ++iv)
    for (int iw = 0; iw < 2; ++iw) {
      auto cf = correlation_series(p, iv, iw, 4);
      CHECK(factorization_residual(cf.psi) < 1e-10L);
      // No (z2/z1)^{-1} term: the series is regular at the origin.
      CHECK(max_abs(cf.psi(1, -1)) < 1e-15L);
      for (int a = 0; a <= 4; ++a) CHECK(max_abs(cf.psi(-a, a) - J.F[a].col(2 * iv + iw)) < 1e-14L);
    }
}

TEST_CASE("factorization residual flags an off-diagonal term") {
  MatrixSeries2 s(1, 1, -1, 0, 0, 1);
  s(0, 0) = Mat::Constant(1, 1, 1);
  s(-1, 1) = Mat::Constant(1, 1, 2);
  CHECK(factorization_residual(s) == 0);
  s(-1, 0) = Mat::Constant(1, 1, 1e-3L);
  CHECK(factorization_residual(s) > 1e-4L);
}

TEST_CASE("fusion matrix is weight-preserving with no negative powers") {
  auto p = sample_generic(Params{}, 5);
  auto J = fusion_matrix(p, 4);
  CHECK(J.F.lo() == 0);
  CHECK(exchange::weight_zero_residual(J.F) < 1e-12L);
  // Grade 0 is the leading vector itself on the diagonal.
  CHECK(std::abs(J.F[0](0, 0) - cplx(1)) < 1e-15L);
  CHECK(std::abs(J.F[0](3, 3) - cplx(1)) < 1e-15L);
}

TEST_CASE("fusion matrix prefactors follow the conformal weights") {
  Params p;
  auto J = fusion_matrix(p, 2);
  const real wt[2] = {1, -1};
  const cplx m = p.m();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const int col = 2 * a + b;
      CHECK(std::abs(J.D1(col) - (qaff::delta_k(m - wt[b], p.k) - qaff::delta_k(m - wt[b] - wt[a], p.k))) < 1e-15L);
      CHECK(std::abs(J.D2(col) - (qaff::delta_k(m, p.k) - qaff::delta_k(m - wt[b], p.k))) < 1e-15L);
    }
  const cplx u1{0.1L, 0.02L}, u2{0.3L, -0.01L};
  // J(z1, z2) diag(z1^{D1 + D2}) = J(1, z2 / z1).
  const Vec D = J.D1 + J.D2;
  const Vec phase = D.unaryExpr([&](cplx d) { return e2pi(d * u1); });
  CHECK(max_abs(J.at(0, u2 - u1) - J.at(u1, u2) * phase.asDiagonal()) < 1e-14L * max_abs(J.at(0, u2 - u1)));
}

TEST_CASE("mixed fusion operators are weight-preserving") {
  Params p = Params{}.with_k({0, -6});
  qaff::VermaOptions o;
  o.depth = 3;
  qaff::TruncatedVermaModule M(p, {cplx(0.3L, 0.1L)}, cplx(0.7L, 0.2L), o);
  auto X = TargetSpace::verma(M);
  const Eigen::Index nx = X.dim();
  const real e[2] = {1, -1};
  std::vector<cplx> wvx(2 * nx), wxv(2 * nx);
  for (int j = 0; j < 2; ++j)
    for (Eigen::Index x = 0; x < nx; ++x) {
      wvx[j * nx + x] = e[j] + X.weights[x][0];
      wxv[2 * x + j] = e[j] + X.weights[x][0];
    }
  VermaCache cache;
  auto a = fusion_VX(p, X, &cache);
  auto b = fusion_XV(p, X, 3, &cache);
  CHECK(exchange::weight_zero_residual(a.C, wvx, wvx) < 1e-12L);
  CHECK(exchange::weight_zero_residual(b.C, wxv, wxv) < 1e-12L);
  CHECK(max_abs(swap_VX(nx) * swap_VX(nx).transpose() - Mat::Identity(2 * nx, 2 * nx)) == 0);
}

TEST_CASE("Verma cache shares modules across solves") {
  Params p;
  auto Y = TargetSpace::evaluation(qaff::EvaluationModule::vector(p));
  VermaCache cache;
  solve_intertwiner(p, p.lambda, p.k, Y, Vec::Unit(2, 0), 3, &cache);
  const auto n1 = cache.size();
  solve_intertwiner(p, p.lambda, p.k, Y, Vec::Unit(2, 0), 3, &cache);
  CHECK(cache.size() == n1);
}

}  // TEST_SUITE
