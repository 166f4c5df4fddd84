#include "berkline/cli/dot.hpp"

#include <sstream>

namespace berkline::cli {

std::string export_dot(const MetrizedGraph& graph, const std::optional<DiscreteMeasure>& measure) {
  std::ostringstream out;
  out << "graph berkline {\n";
  const auto& vs = graph.vertices();
  for (std::size_t v = 0; v < vs.size(); ++v) {
    out << "  v" << v << " [label=\"" << to_string(vs[v].canonical_center()) << ", " << to_string(vs[v].rexp());
    if (measure) {
      const ValExp m = measure->mass_at(vs[v]);
      if (!m.is_zero()) out << "\\nmass=" << to_string(m);
    }
    out << "\"];\n";
  }
  for (const auto& e : graph.edges())
    out << "  v" << e.i << " -- v" << e.j << " [label=\"" << to_string(e.length) << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace berkline::cli
