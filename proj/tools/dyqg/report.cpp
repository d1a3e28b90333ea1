#include "report.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>

namespace dyqg::cli {

Report::Report(std::string command, json config) : command_(std::move(command)), config_(std::move(config)) {}

Check& Report::add(const std::string& name, real residual, real tol, json detail) {
  return add_verdict(name, residual, tol, residual < tol, std::move(detail));
}

Check& Report::add_verdict(const std::string& name, real residual, real tol, bool pass, json detail) {
  checks_.push_back({name, residual, tol, pass, std::move(detail)});
  return checks_.back();
}

bool Report::pass() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; });
}

json Report::document() const {
  json checks = json::array();
  for (const auto& c : checks_) {
    json j = {{"name", c.name}, {"residual", d(c.residual)}, {"tol", d(c.tol)}, {"pass", c.pass}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(std::move(j));
  }
  json doc = {{"schema_version", kSchemaVersion},
              {"command", command_},
              {"config", config_},
              {"config_hash", config_hash(config_)},
              {"checks", checks},
              {"pass", pass()}};
  for (auto it = payload_.begin(); it != payload_.end(); ++it) doc[it.key()] = it.value();
  return doc;
}

void Report::emit(const Flags& f, std::ostream& os) const {
  const json doc = document();
  if (!f.out.empty()) write_json_file(f.out, doc);
  if (!f.report.empty() && f.report != f.out) write_json_file(f.report, doc);
  os << command_ << "  config " << doc["config_hash"].get<std::string>() << "\n";
  for (const auto& c : checks_)
    os << "  " << (c.pass ? "PASS" : "FAIL") << "  " << std::left << std::setw(28) << c.name
       << std::scientific << std::setprecision(2) << d(c.residual) << "  (tol " << d(c.tol) << ")\n";
  os << (pass() ? "all checks passed" : "some checks failed") << "\n";
}

}  // namespace dyqg::cli

namespace dyqg::cli {

const std::vector<std::string>& identity_suite() {
  static const std::vector<std::string> s = {
      "relations",   "intertwiner-annihilation", "factorization(3)", "qkz(1)(2)",
      "qdybe(4)",    "category-C(5)",            "qdybe-cc(6)",      "unitarity",
      "periodicity-1", "periodicity-2",          "rll-definition",   "tensor-closure",
      "gauge-fit"};
  return s;
}

json base_config(const std::string& command, const Flags& f, const Params& p) {
  return {{"command", command}, {"params", to_json(p)}, {"depth", f.depth},
          {"samples", f.samples}, {"seed", f.seed}, {"tol_override", f.tol ? json(*f.tol) : json()}};
}

}  // namespace dyqg::cli
