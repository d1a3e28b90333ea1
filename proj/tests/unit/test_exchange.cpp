#include "dyqg/exchange/exchange.hpp"
#include "dyqg/exchange/extract.hpp"
#include "dyqg/exchange/mixed_exchange.hpp"
#include "dyqg/exchange/periodicity.hpp"
#include "dyqg/exchange/qdybe.hpp"
#include "dyqg/exchange/trig.hpp"
#include "dyqg/exchange/unitarity.hpp"
#include "dyqg/intertwine/fusion.hpp"
#include "dyqg/qaff/verma.hpp"
#include "support.hpp"

using namespace dyqg;
using namespace dyqg::exchange;

namespace {

RFunction wrap(const FiniteExchange& X) {
  return [&X](cplx u, cplx m, cplx k) { return X(u, m, k); };
}

}  // namespace

TEST_SUITE("exchange") {

TEST_CASE("extracted R satisfies both qKZ equations and is weight zero") {
  Params p;
  auto e = extract_R_from_qkz(intertwine::fusion_matrix(p, 4));
  CHECK(qkz2_residual(e) < 1e-9L);
  CHECK(weight_zero_residual(e.R) < 1e-10L);
  CHECK(leading_term_residual(e.R, p.q) < 1e-10L);
  CHECK(rational_agreement(e.R, p.q) < 1e-9L);
}

TEST_CASE("extracted R does not depend on lambda") {
  Params p;
  auto a = extract_R_from_qkz(intertwine::fusion_matrix(p, 4));
  auto b = extract_R_from_qkz(intertwine::fusion_matrix(p.with_m({-0.4L, 0.5L}), 4));
  CHECK(series_distance(a.R, b.R) < 1e-9L);
}

TEST_CASE("rational R-matrix is unitary up to a scalar and reduces to P-compatible form") {
  Params p;
  const cplx x{0.3L, 0.2L};
  Mat a = rational_R21(p.q, x), b = flip4() * rational_R21(p.q, 1.0L / x) * flip4();
  Mat prod = a * b;
  CHECK(max_abs(prod - prod(0, 0) * Mat::Identity(4, 4)) < 1e-14L * std::abs(prod(0, 0)));
}

TEST_CASE("identity twist gives back R21") {
  Rng g(3);
  Mat R = test::random_mat(g, 4, 4);
  Mat I4 = Mat::Identity(4, 4);
  CHECK(max_abs(exchange_value(I4, R, I4) - R) == 0);
}

TEST_CASE("exchange matrix satisfies the QDYBE and depends on lambda") {
  Params p;
  FiniteExchange X(p, 3);
  auto rep = verify_qdybe(wrap(X), p.m(), p.k, 2, 5, 1e-8L);
  CHECK(rep.pass());
  CHECK(rep.worst() < 1e-8L);
  const cplx u{0.21L, 0.03L};
  CHECK(max_abs(X(u, p.m()) - X(u, p.m() + cplx(0.5L, -0.3L))) > 1e-3L);
  Mat R = X(u, p.m());
  std::vector<cplx> w{2, 0, 0, -2};
  CHECK(weight_zero_residual(R, w, w) < 1e-12L);
}

TEST_CASE("identity R gives a vanishing QDYBE residual") {
  RFunction one = [](cplx, cplx, cplx) { return Mat(Mat::Identity(4, 4)); };
  CHECK(verify_qdybe(one, {0.3L, 0.1L}, {0, -4.5L}, 3, 1, 1e-8L).worst() == 0);
}

TEST_CASE("a perturbed R fails the QDYBE") {
  Params p;
  FiniteExchange X(p, 3);
  RFunction bad = [&X](cplx u, cplx m, cplx k) {
    Mat r = X(u, m, k);
    r(1, 2) *= 1.01L;
    return r;
  };
  CHECK(verify_qdybe(bad, p.m(), p.k, 1, 5, 1e-8L).worst() > 1e-5L);
}

TEST_CASE("scalar rescaling of R leaves the verdicts unchanged") {
  Params p;
  FiniteExchange X(p, 3);
  RFunction scaled = [&X](cplx u, cplx m, cplx k) { return Mat(std::exp(cplx(0.7L, 0.2L) * u) * cplx(1.3L) * X(u, m, k)); };
  auto a = verify_qdybe(wrap(X), p.m(), p.k, 1, 9, 1e-8L);
  auto b = verify_qdybe(scaled, p.m(), p.k, 1, 9, 1e-8L);
  CHECK(a.pass() == b.pass());
  CHECK(b.worst() < 1e-8L);
}

TEST_CASE("unitarity factor is scalar and independent of lambda and k") {
  Params p;
  FiniteExchange X(p, 3);
  const cplx u{0.17L, -0.02L};
  auto a = unitarity_factor(wrap(X), u, p.m(), p.k);
  auto b = unitarity_factor(wrap(X), u, {-0.5L, 0.3L}, p.k);
  auto c = unitarity_factor(wrap(X), u, p.m(), p.k + cplx(0.2L, -0.1L));
  CHECK(a.scalar_residual < 1e-9L);
  CHECK(std::abs(a.chi - b.chi) < 1e-9L);
  CHECK(std::abs(a.chi - c.chi) < 1e-9L);
  auto z = unitarity_factor(wrap(X), 0, p.m(), p.k);
  CHECK(z.scalar_residual < 1e-12L);
}

TEST_CASE("unit shift in u matches the exponent ledger") {
  Params p;
  FiniteExchange X(p, 4);
  auto r = verify_unit_shift(X, p.m(), 4, 3);
  CHECK(r.ledger < 1e-10L);
  CHECK(r.sampled < 1e-10L);
  // Entry (0, 0) picks up e^{2 pi i (D1 - D2)} with both read off e1 (x) e1.
  const cplx u{0.11L, 0.01L}, m = p.m(), k = p.k;
  const cplx d1 = qaff::delta_k(m - 1.0L, k) - qaff::delta_k(m - 2.0L, k);
  const cplx d2 = qaff::delta_k(m, k) - qaff::delta_k(m - 1.0L, k);
  CHECK(std::abs(X(u + 1.0L, m)(0, 0) - e2pi(d1 - d2) * X(u, m)(0, 0)) < 1e-14L);
}

TEST_CASE("mixed exchange satisfies the RLL relation with central charge") {
  Params p = Params{}.with_k({0, -6});
  auto cache = std::make_shared<intertwine::VermaCache>();
  qaff::VermaOptions o;
  o.depth = 5;
  auto M = cache->get(p, {cplx(0.3L, 0.1L)}, cplx(0.7L, 0.2L), 5, std::nullopt);
  auto mx = std::make_shared<MixedExchange>(p, intertwine::TargetSpace::verma(*M), 5, cache);
  LOperator L;
  L.dim = mx->X().dim();
  L.level = M->level();
  for (Eigen::Index x = 0; x < L.dim; ++x) {
    L.h1.push_back(mx->X().weights[x][0]);
    L.reliable.push_back(x == 0);
  }
  L.apply = [mx](cplx u, cplx m, cplx k, const Mat& c) { return mx->apply(u, m, k, c); };
  FiniteExchange X(p, 3, cache);
  CHECK(verify_rll(wrap(X), L, p.m(), p.k, 1, 2, 1e-8L).worst() < 1e-8L);
  // Dropping the level shift breaks it.
  LOperator wrong = L;
  wrong.level = 0;
  CHECK(verify_rll(wrap(X), wrong, p.m(), p.k, 1, 2, 1e-8L).worst() > 1e-6L);
}

}  // TEST_SUITE
