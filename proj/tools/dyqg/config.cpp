#include "config.hpp"

#include <sstream>

namespace dyqg::cli {

cplx parse_complex(const std::string& s) {
  const auto comma = s.find(',');
  try {
    if (comma == std::string::npos) return {static_cast<real>(std::stod(s)), 0};
    return {static_cast<real>(std::stod(s.substr(0, comma))),
            static_cast<real>(std::stod(s.substr(comma + 1)))};
  } catch (const std::exception&) {
    throw Error("cannot parse complex value '" + s + "' (expected re,im)");
  }
}

std::vector<cplx> parse_complex_list(const std::string& s) {
  std::vector<cplx> out;
  std::stringstream ss(s);
  for (std::string part; std::getline(ss, part, ';');)
    if (!part.empty()) out.push_back(parse_complex(part));
  return out;
}

Params build_params(const Flags& f) {
  Params p;
  p.n = f.n;
  if (f.n == 3) p.lambda = {cplx(0.7L, 0.2L), cplx(-0.3L, 0.4L)};
  if (!f.params_file.empty()) p = params_from_json(read_json_file(f.params_file), p);
  if (!f.lambda.empty()) p.lambda = parse_complex_list(f.lambda);
  if (!f.k.empty()) p.k = parse_complex(f.k);
  if (!f.q.empty()) p.set_q(parse_complex(f.q));
  p.N = f.N;
  p.seed = f.seed;
  if (f.tol) p.tol = *f.tol;
  p.validate();
  return p;
}

real tol_or(const Flags& f, real pinned) { return f.tol ? static_cast<real>(*f.tol) : pinned; }

}  // namespace dyqg::cli
