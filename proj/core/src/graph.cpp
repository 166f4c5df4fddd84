#include "berkline/graph.hpp"

#include <algorithm>
#include <unordered_set>

#include "berkline/error.hpp"
#include "berkline/kernels.hpp"

namespace berkline {

namespace {

ValExp finite_distance(const BerkPoint& a, const BerkPoint& b) { return path_distance(a, b).value(); }

// Distances from vertex `from` to every vertex, by walking the tree.
std::vector<ValExp> distances_from(const MetrizedGraph& g, std::size_t from) {
  std::vector<ValExp> dist(g.vertices().size());
  std::vector<bool> seen(g.vertices().size(), false);
  std::vector<std::size_t> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t e : g.incident(v)) {
      const std::size_t w = g.other_end(e, v);
      if (seen[w]) continue;
      seen[w] = true;
      dist[w] = dist[v] + g.edges()[e].length;
      stack.push_back(w);
    }
  }
  return dist;
}

}  // namespace

MetrizedGraph::MetrizedGraph(std::vector<BerkPoint> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), incident_(vertices_.size()) {
  if (vertices_.empty()) throw Error(Errc::invalid_argument, "a graph needs at least one vertex");
  if (edges_.size() + 1 != vertices_.size()) throw Error(Errc::invalid_argument, "a tree has one edge fewer than vertices");
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].is_type_i()) throw Error(Errc::invalid_argument, "graph vertices must not be type I");
    for (std::size_t w = 0; w < v; ++w) {
      if (vertices_[v] == vertices_[w]) throw Error(Errc::invalid_argument, "repeated graph vertex");
    }
  }
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& ed = edges_[e];
    if (ed.i >= vertices_.size() || ed.j >= vertices_.size() || ed.i == ed.j) {
      throw Error(Errc::invalid_argument, "edge endpoints out of range");
    }
    if (ed.length != finite_distance(vertices_[ed.i], vertices_[ed.j])) {
      throw Error(Errc::invalid_argument, "edge length differs from the path distance of its ends");
    }
    for (std::size_t k = 0; k < vertices_.size(); ++k) {
      if (k == ed.i || k == ed.j) continue;
      if (finite_distance(vertices_[ed.i], vertices_[k]) + finite_distance(vertices_[k], vertices_[ed.j]) == ed.length) {
        throw Error(Errc::invalid_argument, "a vertex lies inside an edge");
      }
    }
    incident_[ed.i].push_back(e);
    incident_[ed.j].push_back(e);
  }
  // |E| = |V| - 1 plus connectivity makes it a tree.
  std::vector<bool> seen(vertices_.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t e : incident_[v]) {
      const std::size_t w = other_end(e, v);
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  if (count != vertices_.size()) throw Error(Errc::invalid_argument, "graph is not connected");
}

std::optional<std::size_t> MetrizedGraph::index_of(const BerkPoint& x) const {
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v] == x) return v;
  }
  return std::nullopt;
}

MetrizedGraph span(const std::vector<BerkPoint>& points, const std::optional<BerkPoint>& anchor_opt) {
  if (points.empty() && !anchor_opt) throw Error(Errc::invalid_argument, "span of nothing");
  const BerkPoint anchor = anchor_opt ? *anchor_opt : BerkPoint::gauss(points.front().prime());
  if (anchor.is_type_i()) throw Error(Errc::invalid_argument, "span anchor must not be type I");
  std::vector<BerkPoint> verts{anchor};
  std::unordered_set<BerkPoint> seen{anchor};
  for (const auto& x : points) {
    if (x.is_type_i()) throw Error(Errc::invalid_argument, "span points must not be type I");
    if (seen.insert(x).second) verts.push_back(x);
  }
  // Branch points of the hull are meets of pairs relative to the anchor.
  const std::size_t n = verts.size();
  for (std::size_t a = 1; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      BerkPoint m = meet_wrt(verts[a], verts[b], anchor);
      if (seen.insert(m).second) verts.push_back(std::move(m));
    }
  }
  std::vector<ValExp> depth(verts.size());
  for (std::size_t v = 1; v < verts.size(); ++v) depth[v] = finite_distance(anchor, verts[v]);
  std::vector<MetrizedGraph::Edge> edges;
  for (std::size_t v = 1; v < verts.size(); ++v) {
    // Parent: the deepest other vertex on the path from v to the anchor.
    std::size_t parent = 0;
    for (std::size_t w = 1; w < verts.size(); ++w) {
      if (w == v || depth[w] >= depth[v] || depth[w] <= depth[parent]) continue;
      if (depth[w] + finite_distance(verts[w], verts[v]) == depth[v]) parent = w;
    }
    edges.push_back({parent, v, depth[v] - depth[parent]});
  }
  return MetrizedGraph(std::move(verts), std::move(edges));
}

std::optional<GraphPoint> locate(const MetrizedGraph& g, const BerkPoint& x) {
  if (x.is_type_i()) return std::nullopt;
  if (auto v = g.index_of(x)) return GraphPoint::at_vertex(*v);
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const auto& ed = g.edges()[e];
    const ValExp a = finite_distance(g.vertices()[ed.i], x);
    if (a >= ed.length) continue;
    if (a + finite_distance(x, g.vertices()[ed.j]) == ed.length) return GraphPoint::on_edge(e, a);
  }
  return std::nullopt;
}

GraphPoint retract(const MetrizedGraph& g, const BerkPoint& x) {
  const auto& vs = g.vertices();
  if (vs.size() == 1) return GraphPoint::at_vertex(0);
  // The retraction is the projection of x onto some path [v0, v_i]
  // farthest from v0.
  BerkPoint best = vs[0];
  ValExp best_depth;
  for (std::size_t i = 1; i < vs.size(); ++i) {
    BerkPoint m = median(x, vs[0], vs[i]);
    ValExp d = finite_distance(vs[0], m);
    if (d > best_depth) {
      best_depth = std::move(d);
      best = std::move(m);
    }
  }
  auto gp = locate(g, best);
  if (!gp) throw Error(Errc::invalid_argument, "retraction left the graph (invalid graph)");
  return *gp;
}

BerkPoint to_point(const MetrizedGraph& g, const GraphPoint& gp) {
  if (gp.is_vertex()) return g.vertices().at(*gp.vertex);
  const auto& ed = g.edges().at(gp.edge);
  const BerkPoint& a = g.vertices()[ed.i];
  const BerkPoint& b = g.vertices()[ed.j];
  const BerkPoint w = meet_inf(a, b);
  const ValExp up = a.rexp() - w.rexp();
  if (gp.offset <= up) return BerkPoint::disc(a.center(), a.rexp() - gp.offset, a.prime());
  return BerkPoint::disc(b.center(), w.rexp() + (gp.offset - up), a.prime());
}

MetrizedGraph subdivide(const MetrizedGraph& g, const std::vector<BerkPoint>& points) {
  std::vector<std::vector<std::pair<ValExp, BerkPoint>>> cuts(g.edges().size());
  for (const auto& x : points) {
    auto gp = locate(g, x);
    if (!gp) throw Error(Errc::point_not_on_graph, to_string(x) + " is not on the graph");
    if (gp->is_vertex()) continue;
    auto& list = cuts[gp->edge];
    const bool dup = std::any_of(list.begin(), list.end(), [&](const auto& c) { return c.first == gp->offset; });
    if (!dup) list.emplace_back(gp->offset, x);
  }
  std::vector<BerkPoint> verts = g.vertices();
  std::vector<MetrizedGraph::Edge> edges;
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const auto& ed = g.edges()[e];
    auto& list = cuts[e];
    std::sort(list.begin(), list.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    std::size_t prev = ed.i;
    ValExp prev_off;
    for (auto& [off, pt] : list) {
      verts.push_back(pt);
      edges.push_back({prev, verts.size() - 1, off - prev_off});
      prev = verts.size() - 1;
      prev_off = off;
    }
    edges.push_back({prev, ed.j, ed.length - prev_off});
  }
  return MetrizedGraph(std::move(verts), std::move(edges));
}

ValExp graph_distance(const MetrizedGraph& g, const GraphPoint& a, const GraphPoint& b) {
  // Distances from a to every vertex.
  std::vector<ValExp> da;
  if (a.is_vertex()) {
    da = distances_from(g, *a.vertex);
  } else {
    const auto& ed = g.edges()[a.edge];
    const auto di = distances_from(g, ed.i);
    const auto dj = distances_from(g, ed.j);
    da.resize(di.size());
    for (std::size_t v = 0; v < di.size(); ++v) da[v] = min(a.offset + di[v], (ed.length - a.offset) + dj[v]);
  }
  if (b.is_vertex()) return da[*b.vertex];
  const auto& fb = g.edges()[b.edge];
  if (!a.is_vertex() && a.edge == b.edge) {
    const ValExp d = a.offset - b.offset;
    return d.sign() < 0 ? -d : d;
  }
  return min(b.offset + da[fb.i], (fb.length - b.offset) + da[fb.j]);
}

ValExp CPAFunction::operator()(const GraphPoint& gp) const {
  if (gp.is_vertex()) return values.at(*gp.vertex);
  const auto& ed = graph->edges().at(gp.edge);
  return values[ed.i] + (values[ed.j] - values[ed.i]) * gp.offset / ed.length;
}

DiscreteMeasure laplacian(const CPAFunction& f) {
  const MetrizedGraph& g = *f.graph;
  if (f.values.size() != g.vertices().size()) throw Error(Errc::invalid_argument, "one value per vertex required");
  std::vector<DiscreteMeasure::Atom> atoms;
  for (std::size_t v = 0; v < g.vertices().size(); ++v) {
    ValExp mass;
    for (std::size_t e : g.incident(v)) {
      mass -= (f.values[g.other_end(e, v)] - f.values[v]) / g.edges()[e].length;
    }
    atoms.push_back({g.vertices()[v], std::move(mass)});
  }
  return DiscreteMeasure::from_distinct(std::move(atoms));
}

ValExp potential_kernel_graph(const MetrizedGraph& g, const BerkPoint& z, const BerkPoint& x, const BerkPoint& y) {
  const auto find = [&g](const BerkPoint& q) {
    auto gp = locate(g, q);
    if (!gp) throw Error(Errc::point_not_on_graph, to_string(q) + " is not on the graph");
    return *gp;
  };
  const GraphPoint gz = find(z);
  const GraphPoint gx = find(x);
  const GraphPoint gy = find(y);
  return (graph_distance(g, gz, gx) + graph_distance(g, gz, gy) - graph_distance(g, gx, gy)) / ValExp(2);
}

}  // namespace berkline
