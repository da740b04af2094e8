#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "severi/tropical.hpp"

namespace severi::ops {

// All machine-readable output flows through these entry points. Keys are
// emitted in documented fixed order (insertion order); rationals are
// "p/q" strings in lowest terms with q > 0 (bare integers when integral
// and below 2^53); no floating-point value is ever produced.
using json = nlohmann::ordered_json;

json rat_json(const Rat& r);
json int_json(const Int& n);
std::vector<Rat> parse_rat_csv(const std::string& csv);
std::vector<int> parse_int_csv(const std::string& csv);

json germ_analyze(const std::string& poly_text);
json family_scan(const std::string& family_json_text, const std::string& samples_csv);
json family_stratify_point(const std::string& a, const std::string& b);
json family_stratify_scan(const std::string& t_csv);
json strata_expdim(const std::string& query_json_text);
json defmap_rank(const std::string& spec_json_text);
json defmap_realize(const std::string& spec_json_text, const std::string& target_csv);
json tropical_count(int d, int delta, const std::string& algorithm);
json tropical_contract(const std::string& curve_json_text, const std::string& edges_csv);
json tropical_cusp_signature(const std::string& curve_json_text, const std::string& edges_csv);

json tropical_curve_to_json(const TropicalCurve& c);
TropicalCurve tropical_curve_from_json(const json& j);

/// Flatten a result object into CSV: the first array-of-objects field
/// supplies the rows; scalar fields are repeated per row. Nested values
/// inside cells are serialized as compact JSON.
std::string to_csv(const json& j);

} // namespace severi::ops
