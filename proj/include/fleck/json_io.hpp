#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "fleck/analysis.hpp"
#include "fleck/classify.hpp"

namespace fleck {

using Json = nlohmann::json;

// Algebra file format: {"size": n, "leq": [[0/1,...],...], "prod": [[...]],
// "unit": i, "zero": i} with optional "labels" (n strings) and optional
// "arrow" (cross-checked against the derived residual). "meet" and "join"
// tables may replace "leq". Malformed structure throws MalformedTableError;
// an axiom violation comes back as the failed CheckReport in the result.
BuildResult build_from_json(const Json& j);
FleAlgebra algebra_from_json(const Json& j);  // throws on axiom failure too
FleAlgebra load_algebra(const std::string& path);

Json algebra_to_json(const FleAlgebra& a);
void save_algebra(const FleAlgebra& a, const std::string& path);

// Reports serialize with witness/trace as ordered {"name","value"} arrays;
// no timestamps or timings anywhere, so equal inputs give equal bytes.
Json report_to_json(const CheckReport& r);
Json classification_to_json(const Classification& c);
Json interval_report_to_json(const IntervalReport& r);
Json delta_forcing_to_json(const DeltaForcingReport& r);

}  // namespace fleck
