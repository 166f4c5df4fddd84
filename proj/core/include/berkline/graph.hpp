#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "berkline/kernel_value.hpp"
#include "berkline/measure.hpp"
#include "berkline/point.hpp"

namespace berkline {

/// A finite metrized tree of non-type-I points. Each edge is a segment of
/// the Berkovich tree with no other vertex in its interior, and its length
/// is the path distance of its ends.
class MetrizedGraph {
 public:
  struct Edge {
    std::size_t i;
    std::size_t j;
    ValExp length;
  };

  /// Validates the tree invariants; throws Error(invalid_argument).
  MetrizedGraph(std::vector<BerkPoint> vertices, std::vector<Edge> edges);

  const std::vector<BerkPoint>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  /// Edge indices incident to vertex v.
  const std::vector<std::size_t>& incident(std::size_t v) const { return incident_[v]; }
  std::size_t other_end(std::size_t edge, std::size_t v) const {
    return edges_[edge].i == v ? edges_[edge].j : edges_[edge].i;
  }
  std::optional<std::size_t> index_of(const BerkPoint& x) const;

 private:
  std::vector<BerkPoint> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
};

/// A point of a graph: a vertex, or an edge interior point at `offset`
/// from the edge's `i` end (0 < offset < length).
struct GraphPoint {
  std::optional<std::size_t> vertex;
  std::size_t edge = 0;
  ValExp offset;

  static GraphPoint at_vertex(std::size_t v) { return GraphPoint{v, 0, ValExp()}; }
  static GraphPoint on_edge(std::size_t e, ValExp s) { return GraphPoint{std::nullopt, e, std::move(s)}; }
  bool is_vertex() const noexcept { return vertex.has_value(); }
};

/// Convex hull of the points and the anchor (default: the Gauss point).
/// Vertex 0 is the anchor.
MetrizedGraph span(const std::vector<BerkPoint>& points, const std::optional<BerkPoint>& anchor = std::nullopt);

/// The nearest point of the graph along the path from x into it.
GraphPoint retract(const MetrizedGraph& g, const BerkPoint& x);
/// The Berkovich point a graph point denotes.
BerkPoint to_point(const MetrizedGraph& g, const GraphPoint& gp);
/// The graph point of x, or nullopt when x is off the graph.
std::optional<GraphPoint> locate(const MetrizedGraph& g, const BerkPoint& x);
/// A refined copy with the given on-graph points promoted to vertices.
/// Throws POINT_NOT_ON_GRAPH for points off the graph.
MetrizedGraph subdivide(const MetrizedGraph& g, const std::vector<BerkPoint>& points);

/// Distance measured inside the graph, by summing edge lengths.
ValExp graph_distance(const MetrizedGraph& g, const GraphPoint& a, const GraphPoint& b);

/// Continuous piecewise-affine function given by its vertex values; affine on edges.
/// Holds a pointer to the graph, which must outlive it.
struct CPAFunction {
  const MetrizedGraph* graph;
  std::vector<ValExp> values;

  ValExp operator()(const GraphPoint& gp) const;
};

/// Sum over vertices of -(sum of outgoing slopes) times the vertex's Dirac mass.
DiscreteMeasure laplacian(const CPAFunction& f);

/// j_z(x, y) from graph distances: (d(z,x) + d(z,y) - d(x,y)) / 2.
/// Throws POINT_NOT_ON_GRAPH when an argument is off the graph.
ValExp potential_kernel_graph(const MetrizedGraph& g, const BerkPoint& z, const BerkPoint& x, const BerkPoint& y);

}  // namespace berkline
