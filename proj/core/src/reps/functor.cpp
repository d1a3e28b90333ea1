#include "dyqg/reps/functor.hpp"

#include "dyqg/reps/tensor.hpp"

namespace dyqg::reps {

int required_margin(const Params& p) {
  const real ap = std::abs(p.p());
  if (!(ap < 0.1L)) throw Error("required_margin: |p| must be below 0.1");
  int j = 1;
  for (real t = 10 * ap; t >= 1e-9L; t *= ap) ++j;
  return 2 * j + 1;
}

BoundedRepresentation functor_F(std::shared_ptr<const exchange::FiniteExchange> R) {
  BoundedRepresentation rep;
  rep.L = exchange::LOperator::from_R([R](cplx u, cplx m, cplx k) { return (*R)(u, m, k); });
  rep.degree = {0, 0};
  rep.length = {0, 0};
  rep.safe = 0;
  rep.recipe = {{"kind", "vector"}, {"params", to_json(R->params())}, {"N", R->N()}};
  return rep;
}

BoundedRepresentation functor_Fl(const Params& p, cplx nu, cplx l, const FunctorOptions& opt,
                                 std::shared_ptr<intertwine::VermaCache> cache) {
  if (opt.depth < 0 || opt.safe < 0 || opt.safe > opt.depth)
    throw Error("functor_Fl: need 0 <= safe <= depth");
  const int margin = opt.margin >= 0 ? opt.margin : required_margin(p);
  if (opt.depth < opt.safe + margin)
    throw Error("functor_Fl: window too small for safe window " + std::to_string(opt.safe) +
                ", need depth >= " + std::to_string(opt.safe + margin));
  if (!cache) cache = std::make_shared<intertwine::VermaCache>();
  auto M = cache->get(p, {nu}, l, opt.depth, std::nullopt);
  auto X = intertwine::TargetSpace::verma(*M);
  const int mid = opt.mid_depth >= 0 ? opt.mid_depth : opt.depth;
  auto mx = std::make_shared<exchange::MixedExchange>(p, X, mid, cache);

  BoundedRepresentation rep;
  rep.s = opt.s;
  rep.safe = opt.safe;
  auto& L = rep.L;
  L.dim = X.dim();
  L.level = l;
  for (Eigen::Index x = 0; x < X.dim(); ++x) {
    int len = 0;
    for (int c : X.counts[x]) len += c;
    L.h1.push_back(X.weights[x][0]);
    rep.length.push_back(len);
    rep.degree.push_back(-X.grade[x]);
    L.reliable.push_back(len <= opt.safe ? 1 : 0);
  }
  L.apply = [mx](cplx u, cplx m, cplx k, const Mat& cols) { return mx->apply(u, m, k, cols); };
  rep.graded = [mx](cplx m, cplx k) -> const intertwine::GradedOperator& { return mx->graded(m, k); };
  rep.recipe = {{"kind", "verma"}, {"nu", to_json(nu)},     {"level", to_json(l)},
                {"depth", opt.depth}, {"safe", opt.safe}, {"mid_depth", mid}, {"margin", margin},
                {"s", static_cast<double>(opt.s)}, {"params", to_json(p)}};
  return rep;
}

BoundedRepresentation from_recipe(const json& r, std::shared_ptr<intertwine::VermaCache> cache) {
  if (!cache) cache = std::make_shared<intertwine::VermaCache>();
  const std::string kind = r.at("kind");
  if (kind == "unit") return unit_object();
  if (kind == "tensor") return tensor_product(from_recipe(r.at("a"), cache), from_recipe(r.at("b"), cache));
  const Params p = params_from_json(r.at("params"));
  if (kind == "vector")
    return functor_F(std::make_shared<const exchange::FiniteExchange>(p, r.at("N").get<int>(), cache));
  if (kind == "verma") {
    FunctorOptions o;
    o.depth = r.at("depth");
    o.safe = r.at("safe");
    o.mid_depth = r.value("mid_depth", -1);
    o.margin = r.value("margin", o.margin);
    o.s = r.value("s", -1.0);
    return functor_Fl(p, cplx_from_json(r.at("nu")), cplx_from_json(r.at("level")), o, cache);
  }
  throw Error("unknown representation kind '" + kind + "'");
}

}  // namespace dyqg::reps
