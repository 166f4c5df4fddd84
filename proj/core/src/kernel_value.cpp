#include "berkline/kernel_value.hpp"

#include "berkline/error.hpp"

namespace berkline {

const ValExp& KernelValue::value() const {
  if (!is_finite()) throw Error(Errc::invalid_argument, "kernel value is " + to_string(*this));
  return value_;
}

KernelValue KernelValue::operator-() const {
  switch (kind_) {
    case Kind::finite: return KernelValue(-value_);
    case Kind::plus_infinity: return minus_infinity();
    case Kind::minus_infinity: return plus_infinity();
  }
  return *this;
}

KernelValue operator+(const KernelValue& a, const KernelValue& b) {
  using K = KernelValue::Kind;
  if (a.kind_ == K::finite && b.kind_ == K::finite) return KernelValue(a.value_ + b.value_);
  if ((a.kind_ == K::plus_infinity && b.kind_ == K::minus_infinity) ||
      (a.kind_ == K::minus_infinity && b.kind_ == K::plus_infinity)) {
    throw Error(Errc::invalid_argument, "inf - inf is undefined");
  }
  return a.kind_ == K::finite ? b : a;
}

KernelValue operator*(const ValExp& s, const KernelValue& a) {
  if (a.is_finite()) return KernelValue(s * a.value_);
  const int sg = s.sign();
  if (sg == 0) throw Error(Errc::invalid_argument, "0 * inf is undefined");
  return sg > 0 ? a : -a;
}

std::strong_ordering operator<=>(const KernelValue& a, const KernelValue& b) {
  auto rank = [](const KernelValue& v) {
    switch (v.kind_) {
      case KernelValue::Kind::minus_infinity: return 0;
      case KernelValue::Kind::finite: return 1;
      case KernelValue::Kind::plus_infinity: return 2;
    }
    return 1;
  };
  const int ra = rank(a);
  const int rb = rank(b);
  if (ra != rb || ra != 1) return ra <=> rb;
  return a.value_ <=> b.value_;
}

std::string to_string(const KernelValue& v) {
  if (v.is_plus_infinity()) return "inf";
  if (v.is_minus_infinity()) return "-inf";
  return to_string(v.value());
}

}  // namespace berkline
