#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace dyqg::cli;

namespace {

void common(CLI::App* app, Flags& f) {
  app->add_option("--params", f.params_file, "JSON file with parameter fields");
  app->add_option("--n", f.n, "rank (2; verma also takes 3)");
  app->add_option("--lambda", f.lambda, "highest weight, re,im[;re,im...]");
  app->add_option("--k", f.k, "level, re,im");
  app->add_option("--q", f.q, "deformation parameter, re,im");
  app->add_option("--N", f.N, "series order");
  app->add_option("--depth", f.depth, "Verma truncation depth");
  app->add_option("--tol", f.tol, "override every pinned tolerance");
  app->add_option("--seed", f.seed, "seed for all sampling");
  app->add_option("--samples", f.samples, "number of sample points");
  app->add_option("--out", f.out, "output JSON");
  app->add_option("--report", f.report, "report JSON");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dyqg: exchange matrices and elliptic quantum group representations"};
  app.require_subcommand(0, 1);
  bool list = false;
  app.add_flag("--list-checks", list, "print the identity suite and exit");

  Flags f;
  auto* verma = app.add_subcommand("verma", "truncated Verma module and relation checks");
  auto* fusion = app.add_subcommand("fusion", "fusion matrix J, J_{V,X} or J*_{X,V}");
  auto* verify = app.add_subcommand("verify", "series-level identities of the exchange matrix");
  auto* felder = app.add_subcommand("felder", "elliptic dynamical R-matrix checks");
  auto* gauge = app.add_subcommand("gauge-fit", "gauge fit of the exchange matrix to the elliptic one");
  auto* functor = app.add_subcommand("functor", "bounded representation from a truncated Verma module");
  auto* tensor = app.add_subcommand("tensor", "tensor product of two bounded representations");
  for (auto* s : {verma, fusion, verify, felder, gauge, functor, tensor}) common(s, f);

  fusion->add_option("--flavor", f.flavor, "ff, fO or Of")->check(CLI::IsMember({"ff", "fO", "Of"}));
  for (auto* s : {fusion, functor, verify}) {
    s->add_option("--nu", f.nu, "highest weight of X, re,im");
    s->add_option("--level", f.level, "level l of X, re,im");
  }
  for (auto* s : {functor, verify}) {
    s->add_option("--safe", f.safe, "safe window (F-word length)");
    s->add_option("--margin", f.margin, "depth headroom above the safe window (default from |p|)");
  }
  verify->add_option("--check", f.check, "qkz, qdybe, qdybe-cc, unitarity or periodicity")
      ->required()
      ->check(CLI::IsMember({"qkz", "qdybe", "qdybe-cc", "unitarity", "periodicity"}));
  verify->add_option("--sets", f.sets, "seeded generic parameter sets (0: use the given parameters)");
  felder->add_option("--tau", f.tau, "elliptic modulus, re,im");
  felder->add_option("--eta", f.eta, "step, re,im");
  felder->add_option("--grid", f.grid, "JSON sample points");
  gauge->add_option("--series", f.series, "exchange series JSON (from verify --check qkz)");
  gauge->add_option("--order", f.order, "highest Fourier order compared");
  gauge->add_option("--fit-grid", f.fit_grid, "quadrature points on the contour");
  tensor->add_option("--a", f.a, "first representation JSON")->required();
  tensor->add_option("--b", f.b, "second representation JSON")->required();

  CLI11_PARSE(app, argc, argv);

  if (list) {
    for (const auto& c : identity_suite()) std::cout << c << "\n";
    return 0;
  }
  try {
    if (*verma) return cmd_verma(f);
    if (*fusion) return cmd_fusion(f);
    if (*verify) return cmd_verify(f);
    if (*felder) return cmd_felder(f);
    if (*gauge) return cmd_gauge_fit(f);
    if (*functor) return cmd_functor(f);
    if (*tensor) return cmd_tensor(f);
  } catch (const std::exception& e) {
    std::cerr << "dyqg: error: " << e.what() << "\n";
    return 2;
  }
  std::cout << app.help();
  return 1;
}
