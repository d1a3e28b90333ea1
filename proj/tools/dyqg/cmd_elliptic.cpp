#include <iostream>

#include "commands.hpp"
#include "dyqg/elliptic/felder.hpp"
#include "dyqg/elliptic/gauge.hpp"
#include "dyqg/exchange/extract.hpp"
#include "dyqg/exchange/qdybe.hpp"
#include "dyqg/intertwine/fusion.hpp"

namespace dyqg::cli {

namespace {

// {"points": [{"u": [re, im], "u2": [re, im], "m": [re, im]}, ...]}
std::vector<elliptic::FelderSample> read_grid(const std::string& path, const elliptic::FelderParams& fp) {
  const json j = read_json_file(path);
  std::vector<elliptic::FelderSample> out;
  for (const auto& pt : j.at("points"))
    out.push_back({cplx_from_json(pt.at("u")), cplx_from_json(pt.at("u2")), cplx_from_json(pt.at("m")), fp});
  if (out.empty()) throw Error("grid has no points");
  return out;
}

json fourier_json(const std::vector<cplx>& c) {
  json j = json::array();
  for (auto z : c) j.push_back(to_json(z));
  return j;
}

}  // namespace

int cmd_felder(const Flags& f) {
  const Params p = build_params(f);
  if (p.n != 2) throw Error("felder: only n = 2 is supported");
  elliptic::FelderParams fp = elliptic::felder_params(p);
  const bool custom = !f.tau.empty() || !f.eta.empty();
  if (!f.tau.empty()) fp.theta.tau = parse_complex(f.tau);
  if (!f.eta.empty()) fp.eta = parse_complex(f.eta);
  if (!(fp.tau().imag() > 0)) throw Error("Im tau must be positive");
  json cfg = base_config("felder", f, p);
  cfg["tau"] = to_json(fp.tau());
  cfg["eta"] = to_json(fp.eta);
  if (!f.grid.empty()) cfg["grid"] = read_json_file(f.grid);
  Report rep("felder", cfg);

  std::vector<elliptic::FelderSample> s;
  if (!f.grid.empty()) {
    s = read_grid(f.grid, fp);
  } else {
    s = elliptic::felder_samples(p, f.samples > 0 ? f.samples : 20, f.seed);
    if (custom)
      for (auto& x : s) x.fp = fp;
  }
  auto qd = elliptic::verify_qdybe_numeric(s, tol_or(f, 1e-9L));
  auto un = elliptic::felder_unitarity(s, tol_or(f, 1e-9L));
  auto pe = elliptic::felder_periodicity(s, tol_or(f, 1e-8L));
  auto tr = elliptic::felder_trig_limit(s, tol_or(f, 1e-8L));
  auto ctl = elliptic::verify_qdybe_numeric(s, 1e-2L, true);

  // Closure: a diagonal gauge with a scalar factor maps the solution to a solution.
  elliptic::GaugeTransform g;
  g.c = {0.37L, -0.11L};
  g.psi = [](cplx u) { return std::exp(cplx(0.3L, 0.1L) * u); };
  real closure = 0;
  for (std::size_t i = 0; i < std::min<std::size_t>(s.size(), 5); ++i) {
    exchange::RFunction R = g.apply(elliptic::felder_function(s[i].fp));
    closure = std::max(closure, exchange::verify_qdybe(R, s[i].m, p.k, 1, f.seed + i, 1e-8L).worst());
  }

  rep.payload()["samples"] = s.size();
  rep.add("qdybe", qd.worst(), qd.tol);
  rep.add("unitarity", un.worst(), un.tol);
  rep.add("periodicity", pe.worst(), pe.tol, {{"laws", "u+1 and u+tau theta quasi-periodicity"}});
  rep.add("trig-limit", tr.worst(), tr.tol, {{"im_tau", 20}});
  rep.add("gauge-closure", closure, tol_or(f, 1e-8L));
  rep.add_verdict("flipped-beta-control", ctl.worst(), 1e-2L, ctl.worst() > 1e-2L,
                  {{"meaning", "residual with the beta sign flipped, must exceed tol"}});
  rep.emit(f, std::cout);
  return rep.pass() ? 0 : 1;
}

int cmd_gauge_fit(const Flags& f) {
  Params p = build_params(f);
  int N = f.N;
  json in;
  if (!f.series.empty()) {
    in = read_json_file(f.series);
    if (!in.contains("series") || !in.contains("series_params"))
      throw Error("--series: expected the output of 'dyqg verify --check qkz'");
    p = params_from_json(in.at("series_params"), p);
    p.validate();
    N = in.at("N").get<int>();
  }
  if (p.n != 2) throw Error("gauge-fit: only n = 2 is supported");
  json cfg = base_config("gauge-fit", f, p);
  cfg["N"] = N;
  cfg["order"] = f.order;
  cfg["fit_grid"] = f.fit_grid;
  if (!in.is_null()) cfg["series"] = in.at("series");
  Report rep("gauge-fit", cfg);

  auto cache = std::make_shared<intertwine::VermaCache>();
  if (!in.is_null()) {
    // The fit re-derives the exchange matrix; it must be the series that was handed in.
    auto e = exchange::extract_R_from_qkz(intertwine::fusion_matrix(p, N, cache.get()));
    rep.add("series-input", exchange::series_distance(series_from_json(in.at("series")), e.R), 1e-12L);
  }
  exchange::FiniteExchange X(p, N, cache);
  auto g = elliptic::gauge_fit(X, p.m(), f.order, f.fit_grid, tol_or(f, 1e-6L));

  json ents = json::array();
  for (std::size_t e = 0; e < 4; ++e)
    ents.push_back({{"entry", {g.entries[e].first, g.entries[e].second}},
                    {"C", to_json(g.C[e])},
                    {"a", to_json(g.a[e])},
                    {"a_fitted", to_json(g.a_fitted[e])},
                    {"series", fourier_json(g.coeff_series[e])},
                    {"closed", fourier_json(g.coeff_closed[e])}});
  rep.payload()["fit"] = {{"m", to_json(g.m)},
                          {"lambda12", to_json(g.lambda12)},
                          {"tau", to_json(g.fp.tau())},
                          {"eta", to_json(g.fp.eta)},
                          {"gauge_c", to_json(g.gauge.c)},
                          {"contour_im_u", d(g.contour)},
                          {"entries", ents},
                          {"localized", g.localized},
                          {"bad_entry", g.bad_entry},
                          {"bad_power", g.bad_power}};
  const bool full = g.pass();
  const bool degraded = !full && g.localized && g.leading_residual < 1e-8L;
  rep.add_verdict("gauge-fit", g.coeff_residual, g.tol, full || degraded,
                  {{"mode", full ? "full" : (degraded ? "degraded to leading coefficients" : "failed")},
                   {"order", g.order}});
  rep.add("exponent-gap", g.exponent_gap, 1e-8L);
  rep.add("log-fit", g.log_fit_residual, 1e-8L);
  rep.add("leading-coefficients", g.leading_residual, 1e-8L);
  rep.emit(f, std::cout);
  return rep.pass() ? 0 : 1;
}

}  // namespace dyqg::cli
