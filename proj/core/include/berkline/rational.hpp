#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace berkline {

using Integer = mpz_class;
using Rat = mpq_class;

/// n/d in canonical form (mpq_class(n, d) alone does not canonicalize).
inline Rat frac(long n, long d) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

/// Parses "a", "-a" or "a/b" (canonicalized). Throws Error(schema) on junk.
Rat parse_rat(std::string_view text);
/// "a" for integers, "a/b" otherwise.
std::string to_string(const Rat& value);

/// The residue characteristic. Construction checks primality.
class PrimeConfig {
 public:
  explicit PrimeConfig(unsigned long p);

  unsigned long p() const noexcept { return p_; }

  friend bool operator==(const PrimeConfig&, const PrimeConfig&) = default;

 private:
  unsigned long p_;
};

/// ord_p of a rational; infinite exactly for zero.
class Valuation {
 public:
  static Valuation infinity() { return Valuation(); }
  explicit Valuation(long value) : value_(value) {}

  bool is_infinite() const noexcept { return !value_.has_value(); }
  /// Requires !is_infinite().
  long value() const { return *value_; }

  friend bool operator==(const Valuation&, const Valuation&) = default;
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.is_infinite() || b.is_infinite()) {
      return a.is_infinite() <=> b.is_infinite();
    }
    return *a.value_ <=> *b.value_;
  }

 private:
  Valuation() = default;
  std::optional<long> value_;
};

Valuation ord_p(const Rat& x, const PrimeConfig& cfg);
Valuation ord_p(const Integer& x, const PrimeConfig& cfg);

/// ord_p for a value known to be nonzero.
long ord_nonzero(const Rat& x, unsigned long p);
long ord_nonzero(const Integer& x, unsigned long p);

/// p^k for any integer k.
Rat prime_power(unsigned long p, long k);

}  // namespace berkline
