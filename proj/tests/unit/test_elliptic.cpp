#include "dyqg/elliptic/felder.hpp"
#include "dyqg/elliptic/gauge.hpp"
#include "dyqg/exchange/periodicity.hpp"
#include "dyqg/exchange/qdybe.hpp"
#include "support.hpp"

using namespace dyqg;
using namespace dyqg::elliptic;

TEST_SUITE("elliptic") {

TEST_CASE("Felder R at u = 0 is alpha = 0, beta = 1") {
  auto fp = felder_params(Params{});
  Mat R = felder_R(0, {0.31L, 0.12L}, fp);
  CHECK(std::abs(R(0, 0) - cplx(1)) < 1e-16L);
  CHECK(std::abs(R(3, 3) - cplx(1)) < 1e-16L);
  CHECK(std::abs(R(1, 1)) < 1e-16L);
  CHECK(std::abs(R(2, 2)) < 1e-16L);
  CHECK(std::abs(R(1, 2) - cplx(1)) < 1e-15L);
  CHECK(std::abs(R(2, 1) - cplx(1)) < 1e-15L);
}

TEST_CASE("Felder R passes the numeric identities at seeded samples") {
  auto s = felder_samples(Params{}, 20, 4);
  CHECK(verify_qdybe_numeric(s, 1e-9L).pass());
  CHECK(felder_unitarity(s, 1e-9L).pass());
  CHECK(felder_periodicity(s, 1e-8L).pass());
  CHECK(felder_trig_limit(s, 1e-8L).pass());
}

TEST_CASE("flipping the sign of beta breaks the QDYBE") {
  auto s = felder_samples(Params{}, 5, 4);
  CHECK(verify_qdybe_numeric(s, 1e-2L, true).worst() > 1e-2L);
}

TEST_CASE("pole guard names the offending argument") {
  auto fp = felder_params(Params{});
  CHECK_THROWS_WITH_AS(felder_R({0.2L, 0.1L}, 0, fp), doctest::Contains("pole"), Error);
}

TEST_CASE("gauge transforms map solutions to solutions") {
  Params p;
  auto fp = felder_params(p);
  GaugeTransform g;
  g.c = {0.4L, -0.2L};
  g.psi = [](cplx u) { return std::exp(cplx(0.1L, 0.5L) * u) + cplx(2); };
  auto R = g.apply(felder_function(fp));
  CHECK(exchange::verify_qdybe(R, p.m(), p.k, 3, 8, 1e-8L).worst() < 1e-8L);
  GaugeTransform trivial;
  const cplx u{0.2L, 0.03L};
  Mat a = felder_R(u, {0.3L, 0.1L}, fp);
  CHECK(max_abs(trivial.apply(u, a) - a) == 0);
}

TEST_CASE("gauge fit matches the exchange series to the elliptic matrix") {
  Params p;
  exchange::FiniteExchange X(p, 4);
  auto g = gauge_fit(X, p.m());
  CHECK(g.pass());
  CHECK(g.coeff_residual < 1e-6L);
  CHECK(g.leading_residual < 1e-8L);
  CHECK(g.exponent_gap < 1e-8L);
  CHECK_FALSE(g.localized);
  CHECK(g.log_fit_residual < 1e-8L);
  // Property 1 on the closed-form path.
  std::vector<cplx> us;
  Rng r(6);
  for (int i = 0; i < 10; ++i) us.push_back({r.uniform(-0.45L, 0.45L), r.uniform(-0.05L, 0.05L)});
  CHECK(exchange::tau_shift_residual([&](cplx u) { return g.closed_form(u); }, [](cplx) { return cplx(1); },
                                     g.fp.tau(), us) < 1e-8L);
}

}  // TEST_SUITE
