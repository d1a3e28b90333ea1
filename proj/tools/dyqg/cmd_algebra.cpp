#include <iostream>

#include "commands.hpp"
#include "dyqg/exchange/extract.hpp"
#include "dyqg/intertwine/correlation.hpp"
#include "dyqg/intertwine/fusion.hpp"
#include "dyqg/intertwine/mixed.hpp"
#include "dyqg/qaff/evaluation.hpp"
#include "dyqg/qaff/relations.hpp"
#include "dyqg/qaff/verma.hpp"

namespace dyqg::cli {

namespace {

json counts_json(const qaff::Counts& c) { return json(c); }

json vec_json(const Vec& v) {
  json j = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) j.push_back(to_json(v(i)));
  return j;
}

json relation_json(const qaff::RelationReport& r) {
  json j = json::object();
  for (const auto& e : r.entries) j[e.name] = d(e.residual);
  return j;
}

}  // namespace

int cmd_verma(const Flags& f) {
  const Params p = build_params(f);
  const int depth = f.depth >= 0 ? f.depth : 4;
  json cfg = base_config("verma", f, p);
  cfg["depth"] = depth;
  Report rep("verma", cfg);

  qaff::VermaOptions o;
  o.depth = depth;
  qaff::TruncatedVermaModule M(p, p.lambda, p.k, o);
  json blocks = json::array();
  real cond = 1;
  int kostant_bad = 0;
  for (const auto& c : M.order()) {
    const auto* b = M.block(c);
    const long long kc = qaff::kostant_count(p.n, c);
    if (kc != b->dim()) ++kostant_bad;
    cond = std::max(cond, b->gram_cond);
    blocks.push_back({{"counts", counts_json(c)},
                      {"length", b->length()},
                      {"dim", b->dim()},
                      {"kostant", kc},
                      {"gram_cond", d(b->gram_cond)},
                      {"d", to_json(M.d_eigen(c))}});
  }
  auto pres = qaff::AlgebraPresentation::affine_sl(p.n);
  auto rv = qaff::check_relations(M.flatten().table, pres, p.q, tol_or(f, 1e-10L));
  auto ev = qaff::EvaluationModule::vector(p);
  auto re = qaff::check_relations(ev.untwisted, pres, p.q, tol_or(f, 1e-12L));

  rep.payload()["module"] = {{"n", p.n},
                             {"lambda", to_json(p).at("lambda")},
                             {"level", to_json(p.k)},
                             {"depth", depth},
                             {"conformal_weight", to_json(M.conformal_weight())},
                             {"dim", M.flatten().table.dim},
                             {"blocks", blocks}};
  rep.add("relations", rv.worst(), rv.tol, relation_json(rv));
  rep.add("relations-evaluation", re.worst(), re.tol, relation_json(re));
  rep.add_verdict("kostant-rank", kostant_bad, 1, kostant_bad == 0);
  rep.add("gram-condition", cond, 1e8L);
  rep.emit(f, std::cout);
  return rep.pass() ? 0 : 1;
}

namespace {

intertwine::TargetSpace verma_target(const Params& p, const Flags& f, int depth,
                                     intertwine::VermaCache& cache, json& cfg) {
  const cplx nu = f.nu.empty() ? cplx(0.3L, 0.1L) : parse_complex(f.nu);
  const cplx l = f.level.empty() ? cplx(0.7L, 0.2L) : parse_complex(f.level);
  if (std::abs(p.k - l + cplx(p.n)) < 1e-12L) throw Error("critical level: k - l = -n");
  cfg["nu"] = to_json(nu);
  cfg["level"] = to_json(l);
  cfg["depth"] = depth;
  auto M = cache.get(p, {nu}, l, depth, std::nullopt);
  return intertwine::TargetSpace::verma(*M);
}

}  // namespace

int cmd_fusion(const Flags& f) {
  const Params p = build_params(f);
  if (p.n != 2) throw Error("fusion: only n = 2 is supported");
  if (f.depth >= 0 && f.depth < f.N) throw Error("depth must be >= N");
  json cfg = base_config("fusion", f, p);
  cfg["flavor"] = f.flavor;
  intertwine::VermaCache cache;
  const real tw = tol_or(f, 1e-10L);

  if (f.flavor == "ff") {
    Report rep("fusion", cfg);
    auto J = intertwine::fusion_matrix(p, f.N, &cache);
    real fact = 0, agree = 0;
    for (int iv = 0; iv < 2; ++iv)
      for (int iw = 0; iw < 2; ++iw) {
        auto cf = intertwine::correlation_series(p, iv, iw, f.N, &cache);
        fact = std::max(fact, intertwine::factorization_residual(cf.psi));
        for (int a = 0; a <= f.N; ++a)
          agree = std::max(agree, max_abs(cf.psi(-a, a) - J.F[a].col(2 * iv + iw)) / max_abs(J.F[0]));
      }
    rep.payload()["J"] = to_json(J.F);
    rep.payload()["D1"] = vec_json(J.D1);
    rep.payload()["D2"] = vec_json(J.D2);
    rep.add("weight-preserving", exchange::weight_zero_residual(J.F), tw);
    rep.add("factorization(3)", fact, tw, {{"method", "torus grid DFT"}});
    rep.add("psi-matches-J", agree, tw);
    rep.add_verdict("no-negative-powers", J.F.lo(), 1, J.F.lo() >= 0);
    rep.add("gram-condition", J.gram_cond_max, 1e8L);
    rep.emit(f, std::cout);
    return rep.pass() ? 0 : 1;
  }

  const int depth = f.depth >= 0 ? f.depth : 4;
  auto X = verma_target(p, f, depth, cache, cfg);
  Report rep("fusion", cfg);
  const Eigen::Index nx = X.dim();
  const real e1[2] = {1, -1};
  std::vector<cplx> w(2 * nx);
  std::vector<int> grade(2 * nx);
  const bool vx = f.flavor == "fO";
  for (int j = 0; j < 2; ++j)
    for (Eigen::Index x = 0; x < nx; ++x) {
      const Eigen::Index i = vx ? j * nx + x : 2 * x + j;
      w[i] = e1[j] + X.weights[x][0];
      grade[i] = X.grade[x];
    }
  auto G = vx ? intertwine::fusion_VX(p, X, &cache) : intertwine::fusion_XV(p, X, depth, &cache);
  rep.payload()["C"] = to_json(G.C);
  rep.payload()["out"] = vec_json(G.out);
  rep.payload()["in"] = vec_json(G.in);
  rep.add("weight-preserving", exchange::weight_zero_residual(G.C, w, w), tw);
  if (vx) {
    // Applied to v (x) x_top the lowest power of z is -(in - out) of that column, exactly.
    const real scale = max_abs(G.C);
    real gap = 0;
    for (Eigen::Index c = 0; c < G.C.cols(); ++c) {
      if (grade[c] != 0) continue;
      int lowest = INT_MAX;
      for (Eigen::Index r = 0; r < G.C.rows(); ++r)
        if (std::abs(G.C(r, c)) > 1e-13L * scale) lowest = std::min(lowest, grade[r]);
      if (lowest != INT_MAX) gap = std::max<real>(gap, lowest);
    }
    rep.add_verdict("finite-negative-window", gap, 1, gap == 0);
  }
  rep.emit(f, std::cout);
  return rep.pass() ? 0 : 1;
}

}  // namespace dyqg::cli
