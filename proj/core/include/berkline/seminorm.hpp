#pragma once

#include <algorithm>

#include "berkline/kernel_value.hpp"
#include "berkline/point.hpp"
#include "berkline/polynomial.hpp"

namespace berkline {

/// numerator / denominator with both nonzero and coprime.
class RationalFunction {
 public:
  explicit RationalFunction(Polynomial numerator, Polynomial denominator = Polynomial{1});

  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }
  long degree() const noexcept { return std::max(num_.degree(), den_.degree()); }

  friend RationalFunction operator*(const RationalFunction& f, const RationalFunction& g);

 private:
  Polynomial num_;
  Polynomial den_;
};

/// -log_p of the seminorm [g]_x. +inf at a zero of g (or g = 0), -inf when
/// g is nonconstant and x is infinity.
KernelValue seminorm_log(const Polynomial& g, const BerkPoint& x);
/// Difference of numerator and denominator values; +inf at zeros and -inf at poles.
KernelValue seminorm_log(const RationalFunction& f, const BerkPoint& x);

}  // namespace berkline
