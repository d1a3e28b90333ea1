#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "config.hpp"

namespace dyqg::cli {

struct Check {
  std::string name;
  real residual = 0;
  real tol = 0;
  bool pass = false;
  json detail;
};

class Report {
 public:
  Report(std::string command, json config);

  // Passes iff residual < tol.
  Check& add(const std::string& name, real residual, real tol, json detail = json::object());
  // Explicit verdict, for controls that must fail and for structural checks.
  Check& add_verdict(const std::string& name, real residual, real tol, bool pass,
                     json detail = json::object());

  json& payload() { return payload_; }
  bool pass() const;
  json document() const;
  // Writes to --out and --report when given, and prints one line per check.
  void emit(const Flags& f, std::ostream& os) const;

 private:
  std::string command_;
  json config_;
  json payload_ = json::object();
  std::vector<Check> checks_;
};

inline double d(real x) { return static_cast<double>(x); }

}  // namespace dyqg::cli
