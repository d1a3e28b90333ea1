#pragma once

#include <optional>
#include <string>

#include "dyqg/core/json_io.hpp"

namespace dyqg::cli {

// Raw flag values; empty strings mean "not given".
struct Flags {
  std::string params_file;
  int n = 2;
  std::string lambda, k, q;
  int N = 3;
  int depth = -1;
  std::optional<double> tol;
  std::uint64_t seed = 0;
  int samples = -1;
  int sets = 0;
  std::string out, report;

  std::string flavor = "ff";
  std::string check;
  std::string nu, level;
  int safe = 1;
  int margin = -1;
  std::string tau, eta, grid;
  std::string series;
  int order = 3;
  int fit_grid = 2048;
  std::string a, b;
};

cplx parse_complex(const std::string& s);
std::vector<cplx> parse_complex_list(const std::string& s);

// Defaults, then --params, then explicit flags. Validates before returning.
Params build_params(const Flags& f);

// Per-check tolerance: the pinned default unless --tol was given.
real tol_or(const Flags& f, real pinned);

}  // namespace dyqg::cli
