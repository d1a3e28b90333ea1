#include "dyqg/reps/functor.hpp"
#include "dyqg/reps/morphism.hpp"
#include "dyqg/reps/tensor.hpp"
#include "support.hpp"

using namespace dyqg;
using namespace dyqg::reps;

namespace {

const cplx kNu{0.3L, 0.1L}, kLevel{0.7L, 0.2L};

Params deep() { return Params{}.with_k({0, -6}); }

struct Fixture {
  Params p = deep();
  std::shared_ptr<intertwine::VermaCache> cache = std::make_shared<intertwine::VermaCache>();
  std::shared_ptr<const exchange::FiniteExchange> X =
      std::make_shared<const exchange::FiniteExchange>(p, 3, cache);
  exchange::RFunction R = [x = X](cplx u, cplx m, cplx k) { return (*x)(u, m, k); };

  BoundedRepresentation verma(int depth, int safe, int margin = -1) const {
    FunctorOptions o;
    o.depth = depth;
    o.safe = safe;
    o.margin = margin;
    return functor_Fl(p, kNu, kLevel, o, cache);
  }
};

real dense_gap(const BoundedRepresentation& a, const BoundedRepresentation& b, cplx u, cplx m, cplx k) {
  return max_abs(a.L.dense(u, m, k) - b.L.dense(u, m, k));
}

}  // namespace

TEST_SUITE("reps") {

TEST_CASE("the finite functor puts R on C^2 with trivial grading") {
  Fixture f;
  auto V = functor_F(f.X);
  CHECK(V.dim() == 2);
  CHECK(V.level() == cplx{});
  const cplx u{0.17L, 0.02L};
  CHECK(max_abs(V.L.dense(u, f.p.m(), f.p.k) - (*f.X)(u, f.p.m(), f.p.k)) == 0);
  CHECK(exchange::verify_rll(f.R, V.L, f.p.m(), f.p.k, 3, 1, 1e-8L).pass());
}

TEST_CASE("identity and zero maps are morphisms, a generic constant map is not") {
  Fixture f;
  auto V = functor_F(f.X);
  const cplx m = f.p.m(), k = f.p.k;
  auto id = check_morphism([](cplx) { return Mat(Mat::Identity(2, 2)); }, V, V, m, k, 4, 3, 1e-8L);
  CHECK(id.pass());
  auto zero = check_morphism([](cplx) { return Mat(Mat::Zero(2, 2)); }, V, V, m, k, 4, 3, 1e-8L);
  CHECK(zero.worst() == 0);
  Rng g(11);
  const Mat A = test::random_mat(g, 2, 2);
  auto bad = check_morphism([A](cplx) { return A; }, V, V, m, k, 4, 3, 1e-8L);
  CHECK(bad.worst() > 1e-3L);
}

TEST_CASE("scalar maps on a Verma object are morphisms") {
  Fixture f;
  auto A = f.verma(5, 0);
  const Eigen::Index n = A.dim();
  auto rep = check_morphism([n](cplx) { return Mat(cplx(1.3L, -0.4L) * Mat::Identity(n, n)); }, A, A,
                            f.p.m(), f.p.k, 2, 5, 1e-8L);
  CHECK(rep.pass());
}

TEST_CASE("depth-0 Verma object has a diagonal L") {
  Fixture f;
  auto A = f.verma(0, 0, 0);
  REQUIRE(A.dim() == 1);
  Mat L = A.L.dense({0.21L, 0.01L}, f.p.m(), f.p.k);
  CHECK(std::abs(L(0, 1)) < 1e-14L * max_abs(L));
  CHECK(std::abs(L(1, 0)) < 1e-14L * max_abs(L));
}

TEST_CASE("a window below the required margin is refused with the needed depth") {
  Fixture f;
  const int need = 1 + required_margin(f.p);
  const std::string msg = "need depth >= " + std::to_string(need);
  CHECK_THROWS_WITH_AS(f.verma(need - 1, 1), doctest::Contains(msg.c_str()), Error);
  CHECK(required_margin(f.p) == 5);
  CHECK(required_margin(Params{}) == 7);
}

TEST_CASE("Verma object satisfies the four clauses and has the Verma character") {
  Fixture f;
  auto A = f.verma(5, 0);
  auto c = check_clauses(A, f.R, f.p.m(), f.p.k, 1, 2, 1e-8L);
  CHECK(c.weight_zero < 1e-12L);
  CHECK(c.homogeneity < 1e-12L);
  CHECK(c.lower_violations == 0);
  CHECK(c.rll < 1e-8L);
  CHECK(c.smooth_ok());
  CHECK(c.pass());

  std::map<int, int> expect;
  for (const auto& [cnt, blk] : f.cache->get(f.p, {kNu}, kLevel, 5, std::nullopt)->blocks())
    expect[-cnt[0]] += static_cast<int>(blk.dim());
  CHECK(expect == A.graded_dims());
  CHECK(A.level() == kLevel);
}

TEST_CASE("tensor product is associative and the unit object is neutral") {
  Fixture f;
  auto V = functor_F(f.X);
  auto A = f.verma(5, 0);
  const cplx u{0.23L, -0.01L}, m = f.p.m(), k = f.p.k;
  auto left = tensor_product(tensor_product(V, V), A);
  auto right = tensor_product(V, tensor_product(V, A));
  const real scale = max_abs(left.L.dense(u, m, k));
  CHECK(dense_gap(left, right, u, m, k) < 1e-10L * scale);

  auto U = unit_object();
  CHECK(dense_gap(tensor_product(A, U), A, u, m, k) < 1e-10L * scale);
  CHECK(dense_gap(tensor_product(U, A), A, u, m, k) < 1e-10L * scale);
}

TEST_CASE("tensor of two finite objects satisfies the RLL relation") {
  Fixture f;
  auto V = functor_F(f.X);
  auto T = tensor_product(V, V);
  CHECK(T.dim() == 4);
  CHECK(T.level() == cplx{});
  CHECK(exchange::verify_rll(f.R, T.L, f.p.m(), f.p.k, 3, 9, 1e-8L).pass());
  auto TA = tensor_product(V, f.verma(5, 0));
  CHECK(TA.level() == kLevel);
  CHECK(exchange::verify_rll(f.R, TA.L, f.p.m(), f.p.k, 1, 9, 1e-8L).pass());
}

TEST_CASE("rescaling R by a constant leaves the RLL residual unchanged") {
  Fixture f;
  auto V = functor_F(f.X);
  exchange::RFunction R2 = [R = f.R](cplx u, cplx m, cplx k) { return Mat(2.5L * R(u, m, k)); };
  auto a = exchange::verify_rll(f.R, V.L, f.p.m(), f.p.k, 2, 4, 1e-8L);
  auto b = exchange::verify_rll(R2, V.L, f.p.m(), f.p.k, 2, 4, 1e-8L);
  CHECK(a.pass() == b.pass());
  CHECK(std::abs(a.worst() - b.worst()) < 1e-12L);
}

TEST_CASE("recipes rebuild the same object") {
  Fixture f;
  auto A = tensor_product(functor_F(f.X), f.verma(5, 0));
  auto B = from_recipe(A.recipe, f.cache);
  REQUIRE(B.dim() == A.dim());
  // Recipes hold doubles, so the rebuilt object agrees to double rounding.
  const cplx u{0.11L, 0.02L};
  CHECK(dense_gap(A, B, u, f.p.m(), f.p.k) < 1e-12L * max_abs(A.L.dense(u, f.p.m(), f.p.k)));
  CHECK(std::abs(B.level() - A.level()) < 1e-15L);
}

}  // TEST_SUITE
