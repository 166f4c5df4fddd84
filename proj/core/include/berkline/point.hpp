#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>

#include "berkline/rational.hpp"
#include "berkline/valexp.hpp"

namespace berkline {

enum class PointType { type_i, type_ii, type_iii };

/// A point of the Berkovich projective line with rational data: a type I
/// point (a rational or infinity), or the point of the closed disc
/// B(center, p^(-rexp)). A rational rexp gives type II, an irrational one
/// type III. Type IV points are not representable.
class BerkPoint {
 public:
  static BerkPoint type_i(Rat value, const PrimeConfig& cfg);
  static BerkPoint infinity(const PrimeConfig& cfg);
  static BerkPoint disc(Rat center, ValExp rexp, const PrimeConfig& cfg);
  /// Disc(0, 0).
  static BerkPoint gauss(const PrimeConfig& cfg);

  const PrimeConfig& prime() const noexcept { return cfg_; }
  bool is_infinity() const noexcept { return kind_ == Kind::infinity; }
  bool is_type_i() const noexcept { return kind_ != Kind::disc; }
  bool is_disc() const noexcept { return kind_ == Kind::disc; }

  /// Value of a finite type I point, or the center of a disc.
  const Rat& center() const;
  /// Radius exponent of a disc.
  const ValExp& rexp() const;

  /// Center reduced to a canonical representative of the disc: a rational
  /// whose denominator is a power of p. Type I points return their value.
  Rat canonical_center() const;

  friend bool operator==(const BerkPoint& a, const BerkPoint& b);

 private:
  enum class Kind : unsigned char { finite, infinity, disc };
  BerkPoint(Kind kind, Rat center, ValExp rexp, const PrimeConfig& cfg)
      : kind_(kind), center_(std::move(center)), rexp_(std::move(rexp)), cfg_(cfg) {}

  Kind kind_;
  Rat center_;
  ValExp rexp_;
  PrimeConfig cfg_;
};

PointType classify(const BerkPoint& x);

/// Whether `inner` lies in the closed disc of `outer` (a Disc point).
bool contains(const BerkPoint& outer, const BerkPoint& inner);

std::string to_string(const BerkPoint& x);

/// z -> (a z + b)/(c z + d).
struct Mobius {
  Rat a, b, c, d;

  Rat det() const { return a * d - b * c; }
  /// Composition: (h1 * h2)(z) = h1(h2(z)).
  friend Mobius operator*(const Mobius& h1, const Mobius& h2);
};

/// Throws SINGULAR_MATRIX when det(h) = 0.
BerkPoint mobius_apply(const Mobius& h, const BerkPoint& x);

}  // namespace berkline

template <>
struct std::hash<berkline::BerkPoint> {
  std::size_t operator()(const berkline::BerkPoint& x) const;
};
