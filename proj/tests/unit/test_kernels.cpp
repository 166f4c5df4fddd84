#include "berkline/kernels.hpp"
#include "berkline/point.hpp"
#include "berkline/polynomial.hpp"
#include "berkline/seminorm.hpp"
#include "doctest.h"
#include "generators.hpp"
#include "printers.hpp"

using namespace berkline;
using berkline::testing::Gen;

namespace {

BerkPoint D(const Rat& c, ValExp t, const PrimeConfig& cfg) { return BerkPoint::disc(c, std::move(t), cfg); }
BerkPoint I(const Rat& v, const PrimeConfig& cfg) { return BerkPoint::type_i(v, cfg); }

KernelValue ord_kv(const Rat& x, unsigned long p) {
  if (sgn(x) == 0) return KernelValue::plus_infinity();
  return KernelValue(ValExp(ord_nonzero(x, p)));
}

// -log of the spherical metric on P^1(Q) in homogeneous form.
KernelValue spherical_oracle(const BerkPoint& x, const BerkPoint& y) {
  const unsigned long p = x.prime().p();
  const auto homog = [](const BerkPoint& z) {
    return z.is_infinity() ? std::pair<Rat, Rat>{Rat(0), Rat(1)} : std::pair<Rat, Rat>{Rat(1), z.center()};
  };
  const auto [x0, x1] = homog(x);
  const auto [y0, y1] = homog(y);
  const auto minord = [p](const Rat& a, const Rat& b) {
    return std::min(sgn(a) ? ord_nonzero(a, p) : 1L << 40, sgn(b) ? ord_nonzero(b, p) : 1L << 40);
  };
  const KernelValue num = ord_kv(x0 * y1 - x1 * y0, p);
  return num - KernelValue(ValExp(minord(x0, x1) + minord(y0, y1)));
}

// Minimum of a type I kernel over the residue classes of two discs with
// integer radius exponents; this realizes the kernel of the disc points.
// With `spherical`, discs containing the Gauss point are read in the 1/T chart.
template <typename K>
KernelValue over_classes(const BerkPoint& x, const BerkPoint& y, K kernel, bool spherical = false) {
  const unsigned long p = x.prime().p();
  const auto reps = [p, spherical](const BerkPoint& z) {
    std::vector<BerkPoint> out;
    if (z.is_type_i()) return std::vector<BerkPoint>{z};
    const long t = floor(z.rexp());
    const bool flip = spherical && contains(z, BerkPoint::gauss(z.prime()));
    for (unsigned long k = 0; k < p; ++k) {
      const Rat step = Rat(static_cast<long>(k)) * prime_power(p, flip ? -t : t);
      if (!flip) {
        out.push_back(BerkPoint::type_i(z.center() + step, z.prime()));
      } else {
        out.push_back(k == 0 ? BerkPoint::infinity(z.prime()) : BerkPoint::type_i(1 / step, z.prime()));
      }
    }
    return out;
  };
  KernelValue best = KernelValue::plus_infinity();
  for (const auto& u : reps(x)) {
    for (const auto& v : reps(y)) {
      const KernelValue k = kernel(u, v);
      if (k < best) best = k;
    }
  }
  return best;
}

BerkPoint integral_point(Gen& g, const PrimeConfig& cfg) {
  if (g.integer(0, 4) == 0) return g.integer(0, 5) == 0 ? BerkPoint::infinity(cfg) : I(g.rational(cfg.p()), cfg);
  return D(g.rational(cfg.p()), ValExp(g.integer(-3, 4)), cfg);
}

}  // namespace

TEST_CASE("meet examples") {
  for (unsigned long p : {2UL, 3UL, 5UL}) {
    const PrimeConfig cfg(p);
    const BerkPoint inf = BerkPoint::infinity(cfg);
    const Rat pr(static_cast<long>(p));
    CHECK(meet_wrt(D(Rat(0), 1, cfg), D(Rat(1), 1, cfg), inf) == BerkPoint::gauss(cfg));
    CHECK(meet_wrt(I(Rat(0), cfg), I(pr, cfg), inf) == D(Rat(0), 1, cfg));
    const BerkPoint x = D(Rat(3, 7), ValExp(Rat(1, 2), Rat(1)), cfg);
    CHECK(meet_wrt(x, x, BerkPoint::gauss(cfg)) == x);
    CHECK(meet_wrt(x, x, inf) == x);
  }
}

TEST_CASE("kernel examples") {
  for (unsigned long p : {3UL, 5UL, 7UL}) {
    const PrimeConfig cfg(p);
    const BerkPoint inf = BerkPoint::infinity(cfg);
    const BerkPoint g0 = BerkPoint::gauss(cfg);
    const Rat pr(static_cast<long>(p));
    CHECK(hsia_log(D(Rat(0), 1, cfg), D(Rat(0), 2, cfg), inf) == KernelValue(1));
    CHECK(hsia_log(I(Rat(1), cfg), I(Rat(1) + pr * pr, cfg), inf) == KernelValue(2));
    CHECK(hsia_log(D(Rat(4), Rat(5, 3), cfg), D(Rat(4), Rat(5, 3), cfg), inf) == KernelValue(ValExp(Rat(5, 3))));
    CHECK(spherical_log(I(Rat(0), cfg), inf) == KernelValue(0));
    CHECK(spherical_log(g0, D(Rat(1, 9), 4, cfg)) == KernelValue(0));
    CHECK(spherical_log(I(pr, cfg), I(2 * pr, cfg)) == KernelValue(1));
    CHECK(path_distance(g0, D(Rat(0), 2, cfg)) == KernelValue(2));
    CHECK(path_distance(D(pr, 3, cfg), g0) == KernelValue(3));
    CHECK(path_distance(D(1 / pr, 1, cfg), g0) == KernelValue(3));
    CHECK(path_distance(I(Rat(0), cfg), g0).is_plus_infinity());
    CHECK(j_kernel(I(Rat(0), cfg), I(pr * pr, cfg), g0) == KernelValue(2));
    CHECK(j_kernel(D(Rat(5), 3, cfg), g0, g0) == KernelValue(0));
  }
}

TEST_CASE("spherical kernel matches the homogeneous formula on type I points") {
  Gen g(41);
  for (int i = 0; i < 500; ++i) {
    const PrimeConfig cfg(berkline::testing::pick_prime(g));
    const BerkPoint x = g.coin() ? I(g.rational(cfg.p()), cfg) : BerkPoint::infinity(cfg);
    const BerkPoint y = I(g.rational(cfg.p()), cfg);
    CHECK(spherical_log(x, y) == spherical_oracle(x, y));
  }
}

TEST_CASE("disc kernels are realized over residue classes") {
  Gen g(42);
  for (int i = 0; i < 300; ++i) {
    const PrimeConfig cfg(berkline::testing::pick_prime(g));
    const BerkPoint x = integral_point(g, cfg);
    const BerkPoint y = integral_point(g, cfg);
    INFO(to_string(x), " ", to_string(y));
    CHECK(spherical_log(x, y) == over_classes(x, y, spherical_oracle, true));
    if (x.is_infinity() || y.is_infinity()) continue;
    const auto hsia_inf = [](const BerkPoint& u, const BerkPoint& v) { return ord_kv(u.center() - v.center(), u.prime().p()); };
    CHECK(hsia_log(x, y, BerkPoint::infinity(cfg)) == over_classes(x, y, hsia_inf));
  }
}

TEST_CASE("general pole agrees with the spherical quotient form") {
  Gen g(43);
  for (int i = 0; i < 1000; ++i) {
    const PrimeConfig cfg(berkline::testing::pick_prime(g));
    const BerkPoint x = g.point(cfg);
    const BerkPoint y = g.point(cfg);
    const BerkPoint zeta = g.point(cfg);
    if (zeta.is_type_i() && (x == zeta || y == zeta)) {
      CHECK(hsia_log(x, y, zeta).is_minus_infinity());
      continue;
    }
    if (x.is_type_i() && x == y) {
      CHECK(hsia_log(x, y, zeta).is_plus_infinity());
      continue;
    }
    const KernelValue expected = spherical_log(x, y) - spherical_log(x, zeta) - spherical_log(y, zeta);
    CHECK(hsia_log(x, y, zeta) == expected);
    CHECK(hsia_log(x, y, zeta) == hsia_log(y, x, zeta));
  }
}

TEST_CASE("pole at infinity agrees with the Gauss-point identity") {
  Gen g(44);
  for (int i = 0; i < 200; ++i) {
    const PrimeConfig cfg(berkline::testing::pick_prime(g));
    const BerkPoint inf = BerkPoint::infinity(cfg);
    const BerkPoint x = g.disc(cfg);
    const BerkPoint y = g.point(cfg, true);
    if (y.is_infinity()) continue;
    CHECK(hsia_log(x, y, inf) == spherical_log(x, y) - spherical_log(x, inf) - spherical_log(y, inf));
    // Same identity relative to an arbitrary non-type-I base point z, with the radius correction.
    const BerkPoint z = g.disc(cfg);
    CHECK(hsia_log(x, y, inf) ==
          j_kernel(x, y, z) - j_kernel(x, inf, z) - j_kernel(y, inf, z) + KernelValue(z.rexp()));
  }
}

TEST_CASE("ultrametric inequality with sharpness") {
  Gen g(45);
  for (int i = 0; i < 1000; ++i) {
    const PrimeConfig cfg(berkline::testing::pick_prime(g));
    const BerkPoint x = g.point(cfg);
    const BerkPoint y = g.point(cfg);
    const BerkPoint z = g.point(cfg);
    const BerkPoint zeta = g.point(cfg);
    if (zeta.is_type_i() && (x == zeta || y == zeta || z == zeta)) continue;
    const KernelValue a = hsia_log(x, z, zeta);
    const KernelValue b = hsia_log(y, z, zeta);
    const KernelValue lhs = hsia_log(x, y, zeta);
    CHECK(lhs >= std::min(a, b));
    if (a != b) CHECK(lhs == std::min(a, b));
  }
}

TEST_CASE("cocycle identity for j") {
  Gen g(46);
  for (int i = 0; i < 500; ++i) {
    const PrimeConfig cfg(berkline::testing::pick_prime(g));
    const BerkPoint x = g.disc(cfg);
    const BerkPoint y = g.disc(cfg);
    const BerkPoint z = g.disc(cfg);
    const BerkPoint zeta = g.disc(cfg);
    CHECK(j_kernel(x, y, zeta) == j_kernel(x, y, z) - j_kernel(x, zeta, z) - j_kernel(zeta, y, z) + j_kernel(zeta, zeta, z));
    CHECK(j_kernel(x, y, z) == j_kernel(y, x, z));
    CHECK(j_kernel(z, y, z) == KernelValue(0));
  }
}

TEST_CASE("path distance is a metric invariant under Mobius maps") {
  Gen g(47);
  for (int i = 0; i < 500; ++i) {
    const PrimeConfig cfg(berkline::testing::pick_prime(g));
    const BerkPoint x = g.disc(cfg);
    const BerkPoint y = g.disc(cfg);
    const BerkPoint z = g.disc(cfg);
    CHECK(path_distance(x, y) == path_distance(y, x));
    CHECK(path_distance(x, z) <= path_distance(x, y) + path_distance(y, z));
    const Mobius h{g.rational(cfg.p()), g.rational(cfg.p()), g.rational(cfg.p()), g.rational(cfg.p())};
    if (sgn(h.det()) == 0) continue;
    CHECK(path_distance(mobius_apply(h, x), mobius_apply(h, y)) == path_distance(x, y));
  }
}

TEST_CASE("seminorm decomposes into Hsia kernels") {
  Gen g(48);
  for (int i = 0; i < 100; ++i) {
    const PrimeConfig cfg(berkline::testing::pick_prime(g));
    const unsigned long p = cfg.p();
    // f = c * prod (T - a_i)^{n_i} with the divisor completed at infinity.
    Polynomial num = Polynomial::constant(g.nonzero_rational(p));
    Polynomial den{1};
    std::vector<std::pair<Rat, long>> divisor;
    for (int k = 0; k < 3; ++k) {
      const Rat a = g.rational(p);
      bool dup = false;
      for (const auto& [b, n] : divisor) dup = dup || b == a;
      if (dup) continue;
      const long n = g.coin() ? 1 : -1;
      divisor.emplace_back(a, n);
      (n > 0 ? num : den) = (n > 0 ? num : den) * Polynomial::linear_root(a);
    }
    const RationalFunction f(num, den);
    const BerkPoint zeta = g.disc(cfg);
    const BerkPoint inf = BerkPoint::infinity(cfg);
    long at_inf = 0;
    for (const auto& d : divisor) at_inf -= d.second;
    std::optional<KernelValue> constant;
    for (int k = 0; k < 20; ++k) {
      const BerkPoint x = g.disc(cfg);
      KernelValue v = seminorm_log(f, x);
      for (const auto& [a, n] : divisor) v = v - ValExp(n) * hsia_log(x, I(a, cfg), zeta);
      v = v - ValExp(at_inf) * hsia_log(x, inf, zeta);
      if (!constant) constant = v;
      CHECK(v == *constant);
    }
  }
}

TEST_CASE("diameter decreases toward the pole") {
  Gen g(49);
  for (int i = 0; i < 300; ++i) {
    const PrimeConfig cfg(berkline::testing::pick_prime(g));
    const BerkPoint zeta = g.point(cfg);
    const BerkPoint x = g.disc(cfg);
    // Walk from x toward zeta through the median with a third random point.
    const BerkPoint w = median(x, zeta, g.disc(cfg));
    if (w.is_type_i()) continue;
    CHECK(diam(w, zeta) <= diam(x, zeta));
  }
}
