#include <iostream>

#include "commands.hpp"
#include "dyqg/exchange/exchange.hpp"
#include "dyqg/reps/functor.hpp"
#include "dyqg/reps/tensor.hpp"

namespace dyqg::cli {

namespace {

json vec_json(const Vec& v) {
  json j = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) j.push_back(to_json(v(i)));
  return j;
}

std::map<int, int> dims_from_json(const json& j) {
  std::map<int, int> m;
  for (const auto& e : j) m[e[0].get<int>()] = e[1].get<int>();
  return m;
}

// L(u0) on the reliable columns, as sparse [row, col, re, im] entries.
json column_table(const reps::BoundedRepresentation& rep, cplx u0, cplx m, cplx k) {
  const auto& L = rep.L;
  std::vector<Eigen::Index> cols;
  for (int a = 0; a < 2; ++a)
    for (Eigen::Index x = 0; x < L.dim; ++x)
      if (L.reliable.empty() || L.reliable[x]) cols.push_back(a * L.dim + x);
  Mat in = Mat::Zero(2 * L.dim, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) in(cols[c], static_cast<Eigen::Index>(c)) = 1;
  const Mat out = L.apply(u0, m, k, in);
  const real scale = max_abs(out);
  json entries = json::array();
  for (Eigen::Index c = 0; c < out.cols(); ++c)
    for (Eigen::Index r = 0; r < out.rows(); ++r)
      if (std::abs(out(r, c)) > 1e-14L * scale)
        entries.push_back({r, cols[c], d(out(r, c).real()), d(out(r, c).imag())});
  return {{"u", to_json(u0)}, {"m", to_json(m)}, {"k", to_json(k)}, {"entries", entries}};
}

json representation_json(const reps::BoundedRepresentation& rep, cplx m, cplx k) {
  json j = {{"recipe", rep.recipe},
            {"dim", rep.dim()},
            {"central_charge", to_json(rep.level())},
            {"graded_dims", reps::graded_dims_json(rep)},
            {"safe", rep.safe},
            {"s", d(rep.s)}};
  if (rep.graded) {
    const auto& g = rep.graded(m, k);
    j["L"] = {{"form", "diag(z^out) C diag(z^-in)"}, {"m", to_json(m)}, {"k", to_json(k)},
              {"C", to_json(g.C)}, {"out", vec_json(g.out)}, {"in", vec_json(g.in)}};
  } else {
    j["L"] = {{"form", "columns"}, {"table", column_table(rep, {0.1L, 0}, m, k)}};
  }
  return j;
}

}  // namespace

int cmd_functor(const Flags& f) {
  const Params p = build_params(f);
  if (p.n != 2) throw Error("functor: only n = 2 is supported");
  reps::FunctorOptions o;
  o.safe = f.safe;
  o.margin = f.margin;
  o.depth = f.depth >= 0 ? f.depth : f.safe + (f.margin >= 0 ? f.margin : reps::required_margin(p));
  const cplx nu = f.nu.empty() ? cplx(0.3L, 0.1L) : parse_complex(f.nu);
  const cplx l = f.level.empty() ? cplx(0.7L, 0.2L) : parse_complex(f.level);
  if (std::abs(p.k - l + cplx(p.n)) < 1e-12L) throw Error("critical level: k - l = -n");
  json cfg = base_config("functor", f, p);
  cfg["nu"] = to_json(nu);
  cfg["level"] = to_json(l);
  cfg["depth"] = o.depth;
  cfg["safe"] = o.safe;
  cfg["margin"] = f.margin;
  Report rep("functor", cfg);

  auto cache = std::make_shared<intertwine::VermaCache>();
  auto A = reps::functor_Fl(p, nu, l, o, cache);
  auto X = std::make_shared<const exchange::FiniteExchange>(p, f.N, cache);
  exchange::RFunction R = [X](cplx u, cplx m, cplx k) { return (*X)(u, m, k); };
  const int samples = f.samples > 0 ? f.samples : 1;
  auto c = reps::check_clauses(A, R, p.m(), p.k, samples, f.seed, tol_or(f, 1e-8L));

  // Character of the input truncation, read off its blocks.
  std::map<int, int> expect;
  for (const auto& [cnt, blk] : cache->get(p, {nu}, l, o.depth, std::nullopt)->blocks())
    expect[-cnt[0]] += static_cast<int>(blk.dim());
  const int char_bad = expect == A.graded_dims() ? 0 : 1;

  rep.payload()["representation"] = representation_json(A, p.m(), p.k);
  rep.add("weight-zero", c.weight_zero, 1e-12L);
  rep.add("homogeneity", c.homogeneity, 1e-12L);
  rep.add_verdict("lower-finiteness", c.lower_violations, 1, c.lower_violations == 0,
                  {{"block_bound_max", c.lower_bound_max}});
  rep.add("rll-definition", c.rll, c.tol, {{"samples", samples}, {"safe", o.safe}, {"depth", o.depth}});
  // Second differences scale as h^2 for a smooth coefficient, so halving h should give a ratio near 1/4.
  const real ratio = c.smooth_h > 0 ? c.smooth_h2 / c.smooth_h : 0;
  rep.add_verdict("smoothness", ratio, 0.35L, c.smooth_ok(),
                  {{"second_difference_h", d(c.smooth_h)}, {"second_difference_h_half", d(c.smooth_h2)}});
  rep.add_verdict("character", char_bad, 1, char_bad == 0);
  rep.emit(f, std::cout);
  return rep.pass() ? 0 : 1;
}

int cmd_tensor(const Flags& f) {
  const json ja = read_json_file(f.a), jb = read_json_file(f.b);
  const json& ra = ja.at("representation");
  const json& rb = jb.at("representation");
  Params p = params_from_json(ja.at("config").at("params"));
  const Params pb = params_from_json(jb.at("config").at("params"));
  if (std::abs(p.k - pb.k) > 0 || std::abs(p.q - pb.q) > 0)
    throw Error("tensor: the two representations live at different (q, k)");
  if (p.n != 2) throw Error("tensor: only n = 2 is supported");
  p.seed = f.seed;
  json cfg = {{"command", "tensor"}, {"params", to_json(p)}, {"a", ra.at("recipe")}, {"b", rb.at("recipe")},
              {"samples", f.samples}, {"seed", f.seed}, {"N", f.N}};
  Report rep("tensor", cfg);

  auto cache = std::make_shared<intertwine::VermaCache>();
  auto A = reps::from_recipe(ra.at("recipe"), cache);
  auto B = reps::from_recipe(rb.at("recipe"), cache);
  auto T = reps::tensor_product(A, B);
  T.check_domain(p.k);
  auto X = std::make_shared<const exchange::FiniteExchange>(p, f.N, cache);
  exchange::RFunction R = [X](cplx u, cplx m, cplx k) { return (*X)(u, m, k); };
  const int samples = f.samples > 0 ? f.samples : 1;
  auto rll = exchange::verify_rll(R, T.L, p.m(), p.k, samples, f.seed, tol_or(f, 1e-8L));

  const cplx la = cplx_from_json(ra.at("central_charge")), lb = cplx_from_json(rb.at("central_charge"));
  const real cc = std::abs(T.level() - (la + lb));
  std::map<int, int> expect;
  for (auto [ga, da] : dims_from_json(ra.at("graded_dims")))
    for (auto [gb, db] : dims_from_json(rb.at("graded_dims"))) expect[ga + gb] += da * db;
  const int char_bad = expect == T.graded_dims() ? 0 : 1;

  rep.payload()["representation"] = representation_json(T, p.m(), p.k);
  rep.add("tensor-closure", rll.worst(), rll.tol, {{"samples", samples}});
  rep.add_verdict("central-charge", cc, 1, cc == 0);
  rep.add_verdict("character", char_bad, 1, char_bad == 0);
  rep.emit(f, std::cout);
  return rep.pass() ? 0 : 1;
}

}  // namespace dyqg::cli
