#pragma once

#include <optional>
#include <string>

#include "berkline/graph.hpp"

namespace berkline::cli {

/// Graphviz rendering. Vertices are labelled "center, rexp"; edges carry
/// their lengths; a measure adds "mass=..." to the vertices it charges.
std::string export_dot(const MetrizedGraph& graph, const std::optional<DiscreteMeasure>& measure = std::nullopt);

}  // namespace berkline::cli
