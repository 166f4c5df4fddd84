#include "berkline/seminorm.hpp"

#include <optional>

#include "berkline/error.hpp"

namespace berkline {

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (num_.is_zero() || den_.is_zero()) {
    throw Error(Errc::invalid_argument, "rational function needs nonzero numerator and denominator");
  }
  if (gcd(num_, den_).degree() > 0) {
    throw Error(Errc::invalid_argument, "numerator and denominator share a factor");
  }
}

RationalFunction operator*(const RationalFunction& f, const RationalFunction& g) {
  Polynomial num = f.num_ * g.num_;
  Polynomial den = f.den_ * g.den_;
  const Polynomial common = gcd(num, den);
  if (common.degree() > 0) {
    num = divmod(num, common).first;
    den = divmod(den, common).first;
  }
  return RationalFunction(std::move(num), std::move(den));
}

KernelValue seminorm_log(const Polynomial& g, const BerkPoint& x) {
  if (g.is_zero()) return KernelValue::plus_infinity();
  const unsigned long p = x.prime().p();
  if (x.is_infinity()) {
    if (g.degree() > 0) return KernelValue::minus_infinity();
    return KernelValue(ValExp(ord_nonzero(g.leading(), p)));
  }
  if (x.is_type_i()) {
    const Rat v = g(x.center());
    if (sgn(v) == 0) return KernelValue::plus_infinity();
    return KernelValue(ValExp(ord_nonzero(v, p)));
  }
  const Polynomial shifted = g.shifted(x.center());
  std::optional<ValExp> best;
  const auto& c = shifted.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (sgn(c[k]) == 0) continue;
    ValExp term = x.rexp() * ValExp(static_cast<long>(k));
    term += ValExp(ord_nonzero(c[k], p));
    if (!best || term < *best) best = std::move(term);
  }
  return KernelValue(*best);
}

KernelValue seminorm_log(const RationalFunction& f, const BerkPoint& x) {
  if (x.is_infinity()) {
    const long dn = f.numerator().degree();
    const long dd = f.denominator().degree();
    if (dn > dd) return KernelValue::minus_infinity();
    if (dn < dd) return KernelValue::plus_infinity();
    return KernelValue(ValExp(ord_nonzero(Rat(f.numerator().leading() / f.denominator().leading()),
                                          x.prime().p())));
  }
  const KernelValue num = seminorm_log(f.numerator(), x);
  const KernelValue den = seminorm_log(f.denominator(), x);
  // Coprimality keeps both from being infinite at once.
  if (den.is_plus_infinity()) return KernelValue::minus_infinity();
  return num - den;
}

}  // namespace berkline
