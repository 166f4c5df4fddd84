#include "berkline/newton_polygon.hpp"

#include "berkline/error.hpp"

namespace berkline {

NewtonPolygon::NewtonPolygon(const Polynomial& g, const PrimeConfig& cfg) {
  if (g.is_zero()) throw Error(Errc::invalid_argument, "Newton polygon of the zero polynomial");
  std::vector<Vertex> pts;
  for (std::size_t k = 0; k < g.coeffs().size(); ++k) {
    const Rat& c = g.coeffs()[k];
    if (sgn(c) == 0) continue;
    pts.push_back({static_cast<long>(k), Rat(ord_nonzero(c, cfg.p()))});
  }
  zero_roots_ = pts.front().index;
  // Monotone chain, lower hull.
  for (const auto& q : pts) {
    while (vertices_.size() >= 2) {
      const auto& a = vertices_[vertices_.size() - 2];
      const auto& b = vertices_.back();
      // Drop b when it lies on or above segment a-q.
      const Rat lhs = (b.valuation - a.valuation) * (q.index - a.index);
      const Rat rhs = (q.valuation - a.valuation) * (b.index - a.index);
      if (lhs >= rhs) {
        vertices_.pop_back();
      } else {
        break;
      }
    }
    vertices_.push_back(q);
  }
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
    const long len = vertices_[i + 1].index - vertices_[i].index;
    const Rat slope = (vertices_[i + 1].valuation - vertices_[i].valuation) / len;
    roots_.push_back({-slope, len});
  }
}

long count_zeros(const Polynomial& g, const Rat& center, const ValExp& t, DiscMode mode,
                 const PrimeConfig& cfg) {
  const NewtonPolygon np(g.shifted(center), cfg);
  long count = np.zero_roots();
  for (const auto& rc : np.root_classes()) {
    const ValExp v(rc.valuation);
    if (mode == DiscMode::closed ? v >= t : v > t) count += rc.multiplicity;
  }
  return count;
}

}  // namespace berkline
