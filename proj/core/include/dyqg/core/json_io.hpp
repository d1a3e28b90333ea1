#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "dyqg/core/params.hpp"
#include "dyqg/core/series.hpp"

namespace dyqg {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

json to_json(cplx z);
cplx cplx_from_json(const json& j);

// Flat row-major list of [re, im] pairs plus a shape.
json to_json(const Mat& m);
Mat mat_from_json(const json& j);

// {offset, lo, hi, shape, coeffs}
json to_json(const MatrixSeries& s);
MatrixSeries series_from_json(const json& j);

json to_json(const Params& p);
// Missing fields keep the defaults of `base`; a q without logq gets the principal log.
Params params_from_json(const json& j, const Params& base = {});

// FNV-1a over the canonical dump, as 16 hex digits.
std::string config_hash(const json& j);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace dyqg
