#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "berkline/point.hpp"

namespace berkline {

/// Hierarchy of a finite point set as seen from a pole: each internal node
/// is the meet (relative to the pole) of the points below it. An input point
/// that coincides with an internal node hangs off it as its own leaf.
struct ClusterTree {
  struct Node {
    BerkPoint point;
    std::vector<std::size_t> children;
    /// Index of the input point for leaves.
    std::optional<std::size_t> item;
  };
  std::vector<Node> nodes;
  std::size_t root = 0;
};

/// General pole. Duplicate inputs share one leaf (the first index).
/// Quadratic in the worst case; meant for modest inputs.
ClusterTree cluster_tree(const std::vector<BerkPoint>& points, const BerkPoint& zeta);

/// Pole at infinity for closed discs given by center and radius exponent,
/// built by splitting on p-adic digits. A group whose largest disc holds all
/// the others collapses to that disc, so the leaves are exactly the maximal
/// discs. Cost is linear in the input per level.
ClusterTree digit_cluster_tree(const std::vector<Rat>& centers, const std::vector<ValExp>& rexps,
                               const PrimeConfig& cfg);

}  // namespace berkline
