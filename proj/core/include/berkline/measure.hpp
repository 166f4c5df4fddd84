#pragma once

#include <utility>
#include <vector>

#include "berkline/point.hpp"
#include "berkline/valexp.hpp"

namespace berkline {

/// A finite signed measure: distinct points with nonzero masses.
///
/// Masses are ValExp rather than plain rationals because Laplacians of
/// functions on graphs with type III vertices have masses in Q(sqrt2).
class DiscreteMeasure {
 public:
  struct Atom {
    BerkPoint point;
    ValExp mass;
  };

  DiscreteMeasure() = default;

  /// Adds mass at x, merging with an existing atom; atoms reaching zero are dropped.
  void add(const BerkPoint& x, const ValExp& mass);
  /// Builds from atoms already known to be distinct; zero masses are dropped.
  static DiscreteMeasure from_distinct(std::vector<Atom> atoms);
  static DiscreteMeasure dirac(const BerkPoint& x) {
    DiscreteMeasure m;
    m.add(x, ValExp(1));
    return m;
  }

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  bool empty() const noexcept { return atoms_.empty(); }
  ValExp total_mass() const;
  ValExp mass_at(const BerkPoint& x) const;
  bool is_nonnegative() const;
  bool is_probability() const { return is_nonnegative() && total_mass() == ValExp(1); }

  DiscreteMeasure& operator+=(const DiscreteMeasure& o);
  DiscreteMeasure& operator-=(const DiscreteMeasure& o);
  DiscreteMeasure& operator*=(const ValExp& s);
  friend DiscreteMeasure operator+(DiscreteMeasure a, const DiscreteMeasure& b) { return a += b; }
  friend DiscreteMeasure operator-(DiscreteMeasure a, const DiscreteMeasure& b) { return a -= b; }
  friend DiscreteMeasure operator*(const ValExp& s, DiscreteMeasure a) { return a *= s; }

  /// Equal as measures (atom order ignored).
  friend bool operator==(const DiscreteMeasure& a, const DiscreteMeasure& b);

 private:
  std::vector<Atom> atoms_;
};

}  // namespace berkline
