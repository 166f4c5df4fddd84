#pragma once

#include <compare>
#include <string>

#include "berkline/rational.hpp"

namespace berkline {

/// An element a + b*sqrt(2) of the ordered field Q(sqrt 2).
///
/// Radius exponents, path lengths and log-seminorms all live here: a radius
/// p^(-t) with t rational is in the value group of Q_p (type II), while a
/// nonzero sqrt(2) part puts it outside (type III). The order is exact.
class ValExp {
 public:
  ValExp() = default;
  ValExp(long value) : rat_(value) {}  // NOLINT(google-explicit-constructor)
  ValExp(Rat rat) : rat_(std::move(rat)) {}  // NOLINT(google-explicit-constructor)
  ValExp(Rat rat, Rat sqrt2) : rat_(std::move(rat)), sqrt2_(std::move(sqrt2)) {}

  const Rat& rat_part() const noexcept { return rat_; }
  const Rat& sqrt2_part() const noexcept { return sqrt2_; }
  bool is_rational() const { return sgn(sqrt2_) == 0; }
  bool is_zero() const { return sgn(rat_) == 0 && sgn(sqrt2_) == 0; }

  /// -1, 0 or +1.
  int sign() const;
  double to_double() const;

  ValExp& operator+=(const ValExp& o);
  ValExp& operator-=(const ValExp& o);
  ValExp& operator*=(const ValExp& o);
  /// Throws Error(invalid_argument) on division by zero.
  ValExp& operator/=(const ValExp& o);

  friend ValExp operator+(ValExp a, const ValExp& b) { return a += b; }
  friend ValExp operator-(ValExp a, const ValExp& b) { return a -= b; }
  friend ValExp operator*(ValExp a, const ValExp& b) { return a *= b; }
  friend ValExp operator/(ValExp a, const ValExp& b) { return a /= b; }
  ValExp operator-() const { return ValExp(-rat_, -sqrt2_); }

  friend bool operator==(const ValExp& a, const ValExp& b) {
    return a.rat_ == b.rat_ && a.sqrt2_ == b.sqrt2_;
  }
  friend std::strong_ordering operator<=>(const ValExp& a, const ValExp& b);

 private:
  Rat rat_;
  Rat sqrt2_;
};

std::strong_ordering valexp_cmp(const ValExp& a, const ValExp& b);

/// "a/b", "c/d*sqrt2", or "a/b+c/d*sqrt2".
std::string to_string(const ValExp& v);
/// Inverse of to_string; also accepts plain rationals.
ValExp parse_valexp(std::string_view text);

/// Exact floor and ceiling (values must fit in a long).
long floor(const ValExp& v);
long ceil(const ValExp& v);

inline const ValExp& min(const ValExp& a, const ValExp& b) { return b < a ? b : a; }
inline const ValExp& max(const ValExp& a, const ValExp& b) { return a < b ? b : a; }

}  // namespace berkline
