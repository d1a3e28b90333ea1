#include "dyqg/core/json_io.hpp"

#include <cstdio>
#include <fstream>

namespace dyqg {

json to_json(cplx z) {
  return json::array({static_cast<double>(z.real()), static_cast<double>(z.imag())});
}

cplx cplx_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) throw Error("complex value must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

json to_json(const Mat& m) {
  json flat = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) flat.push_back(to_json(m(r, c)));
  return {{"shape", {m.rows(), m.cols()}}, {"data", flat}};
}

Mat mat_from_json(const json& j) {
  auto r = j.at("shape")[0].get<Eigen::Index>(), c = j.at("shape")[1].get<Eigen::Index>();
  const auto& d = j.at("data");
  if (static_cast<Eigen::Index>(d.size()) != r * c) throw Error("matrix data size mismatch");
  Mat m(r, c);
  for (Eigen::Index a = 0; a < r; ++a)
    for (Eigen::Index b = 0; b < c; ++b) m(a, b) = cplx_from_json(d[a * c + b]);
  return m;
}

json to_json(const MatrixSeries& s) {
  json coeffs = json::array();
  for (int m = s.lo(); m <= s.hi(); ++m) {
    json flat = json::array();
    const Mat& a = s[m];
    for (Eigen::Index r = 0; r < a.rows(); ++r)
      for (Eigen::Index c = 0; c < a.cols(); ++c) flat.push_back(to_json(a(r, c)));
    coeffs.push_back(flat);
  }
  return {{"offset", to_json(s.offset())},
          {"lo", s.lo()},
          {"hi", s.hi()},
          {"shape", {s.rows(), s.cols()}},
          {"coeffs", coeffs}};
}

MatrixSeries series_from_json(const json& j) {
  int lo = j.at("lo").get<int>(), hi = j.at("hi").get<int>();
  auto r = j.at("shape")[0].get<Eigen::Index>(), c = j.at("shape")[1].get<Eigen::Index>();
  MatrixSeries s(r, c, lo, hi, cplx_from_json(j.at("offset")));
  const auto& co = j.at("coeffs");
  if (static_cast<int>(co.size()) != hi - lo + 1) throw Error("series coeff count mismatch");
  for (int m = lo; m <= hi; ++m) {
    const auto& flat = co[m - lo];
    if (static_cast<Eigen::Index>(flat.size()) != r * c) throw Error("series coeff size mismatch");
    for (Eigen::Index a = 0; a < r; ++a)
      for (Eigen::Index b = 0; b < c; ++b) s[m](a, b) = cplx_from_json(flat[a * c + b]);
  }
  return s;
}

json to_json(const Params& p) {
  json lam = json::array();
  for (auto z : p.lambda) lam.push_back(to_json(z));
  return {{"q", to_json(p.q)},   {"logq", to_json(p.logq)}, {"k", to_json(p.k)},
          {"lambda", lam},       {"n", p.n},                {"N", p.N},
          {"tol", static_cast<double>(p.tol)}, {"seed", p.seed}};
}

Params params_from_json(const json& j, const Params& base) {
  Params p = base;
  if (j.contains("q")) {
    p.set_q(cplx_from_json(j["q"]));
    if (j.contains("logq")) p.logq = cplx_from_json(j["logq"]);
  }
  if (j.contains("k")) p.k = cplx_from_json(j["k"]);
  if (j.contains("n")) p.n = j["n"].get<int>();
  if (j.contains("lambda")) {
    p.lambda.clear();
    const auto& l = j["lambda"];
    if (l.is_array() && !l.empty() && l[0].is_array())
      for (const auto& z : l) p.lambda.push_back(cplx_from_json(z));
    else
      p.lambda.push_back(cplx_from_json(l));
  }
  if (j.contains("N")) p.N = j["N"].get<int>();
  if (j.contains("tol")) p.tol = j["tol"].get<double>();
  if (j.contains("seed")) p.seed = j["seed"].get<std::uint64_t>();
  return p;
}

std::string config_hash(const json& j) {
  std::string s = j.dump();
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  return json::parse(in);
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace dyqg
