#include <functional>

#include "dyqg/core/weight.hpp"
#include "dyqg/qaff/evaluation.hpp"
#include "dyqg/qaff/relations.hpp"
#include "dyqg/qaff/verma.hpp"
#include "support.hpp"

using namespace dyqg;

namespace {

// Partitions of c0 alpha_0 + c1 alpha_1 into positive roots of affine sl_2, enumerated
// directly: alpha_1 + n delta, alpha_0 + n delta (n >= 0) and n delta (n >= 1), delta = alpha_0 + alpha_1.
long long partitions_sl2(int c0, int c1) {
  std::vector<std::pair<int, int>> roots;
  for (int n = 0; n <= c0 + c1; ++n) {
    roots.push_back({n, n + 1});
    roots.push_back({n + 1, n});
    if (n >= 1) roots.push_back({n, n});
  }
  std::function<long long(std::size_t, int, int)> go = [&](std::size_t r, int a, int b) -> long long {
    if (a == 0 && b == 0) return 1;
    if (r == roots.size()) return 0;
    long long total = 0;
    for (int m = 0; m * roots[r].first <= a && m * roots[r].second <= b; ++m)
      total += go(r + 1, a - m * roots[r].first, b - m * roots[r].second);
    return total;
  };
  return go(0, c0, c1);
}

qaff::TruncatedVermaModule verma(const Params& p, int depth) {
  qaff::VermaOptions o;
  o.depth = depth;
  return qaff::TruncatedVermaModule(p, p.lambda, p.k, o);
}

}  // namespace

TEST_SUITE("qaff") {

TEST_CASE("evaluation module satisfies the relations and q^c = 1") {
  Params p;
  auto ev = qaff::EvaluationModule::vector(p);
  auto rep = qaff::check_relations(ev.untwisted, qaff::AlgebraPresentation::affine_sl(2), p.q, 1e-12L);
  CHECK(rep.pass());
  CHECK(ev.untwisted.qc == cplx(1));
  Vec prod = ev.untwisted.K[0].cwiseProduct(ev.untwisted.K[1]);
  CHECK(max_abs(prod - Vec::Ones(2)) < 1e-18L);
  CHECK(ev.h1(0) == cplx(1));
  CHECK(ev.h1(1) == cplx(-1));
}

TEST_CASE("twisted evaluation tables carry z on the affine node only") {
  Params p;
  auto ev = qaff::EvaluationModule::vector(p);
  const cplx z{0.3L, 0.4L};
  auto t = ev.at(z);
  CHECK(max_abs(t.E[0] - z * ev.untwisted.E[0]) < 1e-18L);
  CHECK(max_abs(t.F[0] - ev.untwisted.F[0] / z) < 1e-18L);
  CHECK(max_abs(t.E[1] - ev.untwisted.E[1]) == 0);
  CHECK(qaff::check_relations(t, qaff::AlgebraPresentation::affine_sl(2), p.q, 1e-12L).pass());
}

TEST_CASE("zeroing E_0 is caught by the relation check") {
  Params p;
  auto t = qaff::EvaluationModule::vector(p).untwisted;
  t.E[0].setZero();
  auto rep = qaff::check_relations(t, qaff::AlgebraPresentation::affine_sl(2), p.q, 1e-12L);
  CHECK_FALSE(rep.pass());
  CHECK(rep.worst() > 1e-2L);
}

TEST_CASE("truncated Verma modules satisfy the relations at seeded generic parameters") {
  for (std::uint64_t s = 0; s < 3; ++s) {
    auto p = sample_generic(Params{}, 100 + s);
    auto M = verma(p, 4);
    auto rep = qaff::check_relations(M.flatten().table, qaff::AlgebraPresentation::affine_sl(2), p.q, 1e-10L);
    CHECK(rep.pass());
  }
}

TEST_CASE("rank 3 Verma module satisfies the cubic Serre relations") {
  Params p;
  p.n = 3;
  p.lambda = {cplx(0.7L, 0.2L), cplx(-0.3L, 0.4L)};
  auto M = verma(p, 3);
  auto rep = qaff::check_relations(M.flatten().table, qaff::AlgebraPresentation::affine_sl(3), p.q, 1e-10L);
  CHECK(rep.pass());
  CHECK(rep.entries.size() > 20);
}

TEST_CASE("Gram entry of F_1 x is the q-number [m]") {
  Params p;
  auto M = verma(p, 1);
  const auto* b = M.block({0, 1});
  REQUIRE(b);
  REQUIRE(b->dim() == 1);
  const cplx m = p.m();
  const cplx qm = (std::pow(p.q, m) - std::pow(p.q, -m)) / (p.q - 1.0L / p.q);
  CHECK(std::abs(b->gram(0, 0) - qm) < 1e-15L * std::abs(qm));
}

TEST_CASE("block dimensions equal affine partition counts") {
  auto p = sample_generic(Params{}, 7);
  auto M = verma(p, 5);
  int checked = 0;
  for (const auto& c : M.order()) {
    CHECK(M.block(c)->dim() == partitions_sl2(c[0], c[1]));
    CHECK(qaff::kostant_count(2, c) == partitions_sl2(c[0], c[1]));
    ++checked;
  }
  CHECK(checked > 10);
  // By hand: {delta}, {a0, a1}; and 2delta, (a0+delta)+a1, (a1+delta)+a0, delta+delta,
  // delta+a0+a1, 2a0+2a1.
  CHECK(partitions_sl2(1, 1) == 2);
  CHECK(partitions_sl2(2, 2) == 6);
}

TEST_CASE("lambda = 0 is not generic: F_1 x is singular") {
  Params p;
  p.lambda = {cplx(0)};
  CHECK_THROWS_AS(verma(p, 3), qaff::VermaError);
}

TEST_CASE("contravariance and conditioning on every stored block") {
  for (std::uint64_t s = 0; s < 3; ++s) {
    auto p = sample_generic(Params{}, 200 + s);
    auto M = verma(p, 4);
    for (const auto& [c, b] : M.blocks()) {
      CHECK(b.gram_cond < 1e8L);
      CHECK(max_abs(b.gram - b.gram.transpose()) < 1e-12L * max_abs(b.gram));
      for (int i = 0; i < 2; ++i) {
        if (c[i] == 0) continue;
        auto down = c;
        down[i] -= 1;
        const auto* bd = M.block(down);
        if (!bd || b.F[i].size() == 0) continue;
        Mat lhs = b.gram * b.F[i], rhs = b.E[i].transpose() * bd->gram;
        CHECK(max_abs(lhs - rhs) < 1e-10L * std::max<real>(1, max_abs(lhs)));
      }
    }
  }
}

TEST_CASE("F_i shifts weight by -alpha_i and degree by -delta_i0") {
  Params p;
  auto M = verma(p, 3);
  auto flat = M.flatten();
  for (int i = 0; i < 2; ++i) {
    const auto a = simple_root(2, i);
    const Mat& F = flat.table.F[i];
    for (Eigen::Index r = 0; r < F.rows(); ++r)
      for (Eigen::Index c = 0; c < F.cols(); ++c) {
        if (std::abs(F(r, c)) < 1e-14L) continue;
        CHECK(std::abs(flat.weights[r][0] - (flat.weights[c][0] - a[0])) < 1e-12L);
        CHECK(std::abs(flat.table.d(r) - (flat.table.d(c) - real(i == 0))) < 1e-12L);
      }
  }
}

TEST_CASE("dual pairing reads the top coefficient") {
  Params p;
  auto M = verma(p, 2);
  auto flat = M.flatten();
  Vec x = Vec::Zero(flat.table.dim);
  x(0) = 1;
  CHECK(qaff::dual_pairing(flat, x) == cplx(1));
  Vec y = Vec::Zero(flat.table.dim);
  y(3) = 2.5L;
  CHECK(qaff::dual_pairing(flat, y) == cplx(0));
  CHECK(qaff::dual_pairing(flat, 3.0L * x + y) == cplx(3));
}

TEST_CASE("depth 0 is the one-dimensional top") {
  Params p;
  auto M = verma(p, 0);
  CHECK(M.order().size() == 1);
  CHECK(M.flatten().table.dim == 1);
}

}  // TEST_SUITE
