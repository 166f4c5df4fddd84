#pragma once

#include <vector>

#include "berkline/polynomial.hpp"
#include "berkline/valexp.hpp"

namespace berkline {

/// Lower convex hull of {(k, ord_p c_k) : c_k != 0}.
///
/// A hull segment of slope s and horizontal length l accounts for exactly l
/// roots (with multiplicity, in C_p) of valuation -s. Coefficients vanishing
/// below the first nonzero one are roots at 0 of infinite valuation.
class NewtonPolygon {
 public:
  struct Vertex {
    long index;
    Rat valuation;
  };
  struct RootClass {
    Rat valuation;
    long multiplicity;
  };

  NewtonPolygon(const Polynomial& g, const PrimeConfig& cfg);

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  /// Root valuations in decreasing order (so slopes increasing along the hull).
  const std::vector<RootClass>& root_classes() const noexcept { return roots_; }
  /// Number of roots equal to 0 (valuation +infinity).
  long zero_roots() const noexcept { return zero_roots_; }

 private:
  std::vector<Vertex> vertices_;
  std::vector<RootClass> roots_;
  long zero_roots_ = 0;
};

enum class DiscMode { closed, open };

/// Zeros z of g in C_p (with multiplicity) with ord_p(z - center) >= t
/// (closed) or > t (open), via the Newton polygon of g(T + center).
long count_zeros(const Polynomial& g, const Rat& center, const ValExp& t, DiscMode mode,
                 const PrimeConfig& cfg);

}  // namespace berkline
