#include "berkline/point.hpp"

#include "berkline/error.hpp"

namespace berkline {

BerkPoint BerkPoint::type_i(Rat value, const PrimeConfig& cfg) {
  return BerkPoint(Kind::finite, std::move(value), ValExp(), cfg);
}

BerkPoint BerkPoint::infinity(const PrimeConfig& cfg) {
  return BerkPoint(Kind::infinity, Rat(0), ValExp(), cfg);
}

BerkPoint BerkPoint::disc(Rat center, ValExp rexp, const PrimeConfig& cfg) {
  return BerkPoint(Kind::disc, std::move(center), std::move(rexp), cfg);
}

BerkPoint BerkPoint::gauss(const PrimeConfig& cfg) { return disc(Rat(0), ValExp(0), cfg); }

const Rat& BerkPoint::center() const {
  if (kind_ == Kind::infinity) throw Error(Errc::invalid_argument, "the point at infinity has no center");
  return center_;
}

const ValExp& BerkPoint::rexp() const {
  if (kind_ != Kind::disc) throw Error(Errc::invalid_argument, "type I points have no radius exponent");
  return rexp_;
}

Rat BerkPoint::canonical_center() const {
  if (kind_ != Kind::disc) return center();
  // Equivalent centers agree in every p-adic digit below ceil(rexp).
  const long k = ceil(rexp_);
  if (sgn(center_) == 0) return Rat(0);
  const unsigned long p = cfg_.p();
  const long v = ord_nonzero(center_, p);
  if (v >= k) return Rat(0);
  const Rat unit = center_ / prime_power(p, v);
  Integer modulus;
  mpz_ui_pow_ui(modulus.get_mpz_t(), p, static_cast<unsigned long>(k - v));
  Integer inv_den;
  mpz_invert(inv_den.get_mpz_t(), unit.get_den_mpz_t(), modulus.get_mpz_t());
  Integer digits = unit.get_num() * inv_den;
  mpz_fdiv_r(digits.get_mpz_t(), digits.get_mpz_t(), modulus.get_mpz_t());
  Rat out(digits);
  out *= prime_power(p, v);
  return out;
}

bool operator==(const BerkPoint& a, const BerkPoint& b) {
  if (!(a.cfg_ == b.cfg_)) throw Error(Errc::invalid_argument, "points over different primes");
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case BerkPoint::Kind::infinity:
      return true;
    case BerkPoint::Kind::finite:
      return a.center_ == b.center_;
    case BerkPoint::Kind::disc:
      break;
  }
  if (a.rexp_ != b.rexp_) return false;
  if (a.center_ == b.center_) return true;
  return ValExp(ord_nonzero(Rat(a.center_ - b.center_), a.cfg_.p())) >= a.rexp_;
}

PointType classify(const BerkPoint& x) {
  if (x.is_type_i()) return PointType::type_i;
  return x.rexp().is_rational() ? PointType::type_ii : PointType::type_iii;
}

bool contains(const BerkPoint& outer, const BerkPoint& inner) {
  if (!outer.is_disc()) throw Error(Errc::invalid_argument, "contains() needs a disc as the outer point");
  if (inner.is_infinity()) return false;
  if (inner.is_disc() && inner.rexp() < outer.rexp()) return false;
  const Rat diff = inner.center() - outer.center();
  if (sgn(diff) == 0) return true;
  return ValExp(ord_nonzero(diff, outer.prime().p())) >= outer.rexp();
}

std::string to_string(const BerkPoint& x) {
  if (x.is_infinity()) return "inf";
  if (x.is_type_i()) return to_string(x.center());
  return "Disc(" + to_string(x.center()) + ", " + to_string(x.rexp()) + ")";
}

Mobius operator*(const Mobius& h1, const Mobius& h2) {
  return Mobius{h1.a * h2.a + h1.b * h2.c, h1.a * h2.b + h1.b * h2.d, h1.c * h2.a + h1.d * h2.c,
                h1.c * h2.b + h1.d * h2.d};
}

namespace {

// z -> a z + b with a != 0.
BerkPoint affine(const Rat& a, const Rat& b, const BerkPoint& x) {
  const PrimeConfig& cfg = x.prime();
  if (x.is_infinity()) return x;
  if (x.is_type_i()) return BerkPoint::type_i(a * x.center() + b, cfg);
  return BerkPoint::disc(a * x.center() + b, x.rexp() + ValExp(ord_nonzero(a, cfg.p())), cfg);
}

BerkPoint invert(const BerkPoint& x) {
  const PrimeConfig& cfg = x.prime();
  if (x.is_infinity()) return BerkPoint::type_i(Rat(0), cfg);
  if (x.is_type_i()) {
    if (sgn(x.center()) == 0) return BerkPoint::infinity(cfg);
    return BerkPoint::type_i(Rat(1) / x.center(), cfg);
  }
  const Rat& c = x.center();
  if (sgn(c) == 0) return BerkPoint::disc(Rat(0), -x.rexp(), cfg);
  const long v = ord_nonzero(c, cfg.p());
  if (ValExp(v) >= x.rexp()) return BerkPoint::disc(Rat(0), -x.rexp(), cfg);
  return BerkPoint::disc(Rat(1) / c, x.rexp() - ValExp(2 * v), cfg);
}

}  // namespace

BerkPoint mobius_apply(const Mobius& h, const BerkPoint& x) {
  const Rat det = h.det();
  if (sgn(det) == 0) throw Error(Errc::singular_matrix, "Mobius matrix has zero determinant");
  const PrimeConfig& cfg = x.prime();
  if (sgn(h.c) == 0) {
    if (x.is_infinity()) return x;
    return affine(h.a / h.d, h.b / h.d, x);
  }
  if (x.is_infinity()) return BerkPoint::type_i(h.a / h.c, cfg);
  if (x.is_type_i()) {
    const Rat den = h.c * x.center() + h.d;
    if (sgn(den) == 0) return BerkPoint::infinity(cfg);
    return BerkPoint::type_i((h.a * x.center() + h.b) / den, cfg);
  }
  // h(z) = a/c - (det/c) / (c z + d).
  const BerkPoint y = invert(affine(h.c, h.d, x));
  return affine(-det / h.c, h.a / h.c, y);
}

}  // namespace berkline

std::size_t std::hash<berkline::BerkPoint>::operator()(const berkline::BerkPoint& x) const {
  if (x.is_infinity()) return 0x9e3779b97f4a7c15ULL;
  const std::size_t h1 = std::hash<std::string>{}(x.canonical_center().get_str());
  if (x.is_type_i()) return h1;
  const std::size_t h2 = std::hash<std::string>{}(berkline::to_string(x.rexp()));
  return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6U) + (h1 >> 2U));
}
