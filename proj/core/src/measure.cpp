#include "berkline/measure.hpp"

#include <algorithm>

namespace berkline {

void DiscreteMeasure::add(const BerkPoint& x, const ValExp& mass) {
  for (auto it = atoms_.begin(); it != atoms_.end(); ++it) {
    if (it->point == x) {
      it->mass += mass;
      if (it->mass.is_zero()) atoms_.erase(it);
      return;
    }
  }
  if (!mass.is_zero()) atoms_.push_back({x, mass});
}

DiscreteMeasure DiscreteMeasure::from_distinct(std::vector<Atom> atoms) {
  DiscreteMeasure m;
  m.atoms_ = std::move(atoms);
  std::erase_if(m.atoms_, [](const Atom& a) { return a.mass.is_zero(); });
  return m;
}

ValExp DiscreteMeasure::total_mass() const {
  ValExp total;
  for (const auto& a : atoms_) total += a.mass;
  return total;
}

ValExp DiscreteMeasure::mass_at(const BerkPoint& x) const {
  for (const auto& a : atoms_) {
    if (a.point == x) return a.mass;
  }
  return ValExp();
}

bool DiscreteMeasure::is_nonnegative() const {
  return std::all_of(atoms_.begin(), atoms_.end(), [](const Atom& a) { return a.mass.sign() >= 0; });
}

DiscreteMeasure& DiscreteMeasure::operator+=(const DiscreteMeasure& o) {
  for (const auto& a : o.atoms_) add(a.point, a.mass);
  return *this;
}

DiscreteMeasure& DiscreteMeasure::operator-=(const DiscreteMeasure& o) {
  for (const auto& a : o.atoms_) add(a.point, -a.mass);
  return *this;
}

DiscreteMeasure& DiscreteMeasure::operator*=(const ValExp& s) {
  if (s.is_zero()) {
    atoms_.clear();
    return *this;
  }
  for (auto& a : atoms_) a.mass *= s;
  return *this;
}

bool operator==(const DiscreteMeasure& a, const DiscreteMeasure& b) {
  if (a.atoms_.size() != b.atoms_.size()) return false;
  return std::all_of(a.atoms_.begin(), a.atoms_.end(),
                     [&b](const DiscreteMeasure::Atom& x) { return b.mass_at(x.point) == x.mass; });
}

}  // namespace berkline
