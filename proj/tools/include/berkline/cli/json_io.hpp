#pragma once

#include <string>
#include <vector>

#include "berkline/capacity.hpp"
#include "berkline/dynamics.hpp"
#include "berkline/graph.hpp"
#include "json.hpp"

namespace berkline::cli {

using Json = nlohmann::json;

// Canonical writers. Exact values are strings ("3/4", "1/2+1*sqrt2", "inf")
// so that no number ever passes through a double. Readers throw
// Error(Errc::schema) on anything malformed.

Json to_json(const Rat& v);
Json to_json(const ValExp& v);
Json to_json(const KernelValue& v);
Json to_json(const BerkPoint& x);
Json to_json(const DiscreteMeasure& m);
Json to_json(const MetrizedGraph& g);
Json to_json(const DiscUnion& e);
Json to_json(const Polynomial& f);
Json to_json(const RationalMap& phi);

Rat rat_from_json(const Json& j);
ValExp valexp_from_json(const Json& j);
KernelValue kernel_value_from_json(const Json& j);
/// Objects {"type": "I", "value"}, {"type": "inf"}, {"type": "disc", "center", "rexp"},
/// or the strings "inf" and "gauss".
BerkPoint point_from_json(const Json& j, const PrimeConfig& cfg);
std::vector<BerkPoint> points_from_json(const Json& j, const PrimeConfig& cfg);
DiscreteMeasure measure_from_json(const Json& j, const PrimeConfig& cfg);
MetrizedGraph graph_from_json(const Json& j, const PrimeConfig& cfg);
/// {"discs": [{"center", "rexp"}, ...]}.
DiscUnion disc_union_from_json(const Json& j, const PrimeConfig& cfg);
/// A list of coefficient strings, constant term first.
Polynomial polynomial_from_json(const Json& j);
/// {"numerator": [...], "denominator": [...]}.
RationalMap map_from_json(const Json& j, const PrimeConfig& cfg);

/// Serialization used by every CLI command: two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace berkline::cli
