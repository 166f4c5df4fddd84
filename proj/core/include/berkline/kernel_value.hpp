#pragma once

#include <compare>
#include <string>

#include "berkline/valexp.hpp"

namespace berkline {

/// A ValExp extended by +inf and -inf. Kernels are reported in -log_p form,
/// so +inf is the -log of 0 (a type I point meeting itself) and -inf is the
/// -log of an infinite kernel value (an argument at a type I pole).
class KernelValue {
 public:
  enum class Kind : unsigned char { finite, plus_infinity, minus_infinity };

  KernelValue() = default;
  KernelValue(ValExp v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  KernelValue(long v) : value_(v) {}                // NOLINT(google-explicit-constructor)

  static KernelValue plus_infinity() { return KernelValue(Kind::plus_infinity); }
  static KernelValue minus_infinity() { return KernelValue(Kind::minus_infinity); }

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::finite; }
  bool is_plus_infinity() const noexcept { return kind_ == Kind::plus_infinity; }
  bool is_minus_infinity() const noexcept { return kind_ == Kind::minus_infinity; }
  /// Throws Error(invalid_argument) unless finite.
  const ValExp& value() const;

  /// inf + (-inf) throws Error(invalid_argument).
  friend KernelValue operator+(const KernelValue& a, const KernelValue& b);
  friend KernelValue operator-(const KernelValue& a, const KernelValue& b) { return a + (-b); }
  KernelValue operator-() const;
  /// Scaling by a finite value; zero times infinity throws.
  friend KernelValue operator*(const ValExp& s, const KernelValue& a);

  friend bool operator==(const KernelValue& a, const KernelValue& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::finite || a.value_ == b.value_);
  }
  friend std::strong_ordering operator<=>(const KernelValue& a, const KernelValue& b);

 private:
  explicit KernelValue(Kind k) : kind_(k) {}
  Kind kind_ = Kind::finite;
  ValExp value_;
};

/// "inf", "-inf", or the ValExp rendering.
std::string to_string(const KernelValue& v);

}  // namespace berkline
