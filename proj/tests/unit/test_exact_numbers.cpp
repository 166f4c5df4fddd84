#include <cmath>

#include "berkline/error.hpp"
#include "berkline/kernel_value.hpp"
#include "berkline/rational.hpp"
#include "berkline/valexp.hpp"
#include "doctest.h"
#include "generators.hpp"
#include "printers.hpp"

using namespace berkline;
using berkline::testing::Gen;

TEST_CASE("ord_p examples") {
  CHECK(ord_p(Rat(18), PrimeConfig(3)) == Valuation(2));
  CHECK(ord_p(Rat(0), PrimeConfig(5)).is_infinite());
  CHECK(ord_p(Rat(7, 50), PrimeConfig(5)) == Valuation(-2));
  CHECK(ord_p(Integer(96), PrimeConfig(2)) == Valuation(5));
  CHECK(Valuation(3) < Valuation::infinity());
}

TEST_CASE("prime config rejects composites") {
  CHECK_THROWS_AS(PrimeConfig(9), Error);
  CHECK_THROWS_AS(PrimeConfig(1), Error);
  CHECK(PrimeConfig(7919).p() == 7919);
}

TEST_CASE("rational parsing round trip") {
  CHECK(parse_rat("-6/4") == Rat(-3, 2));
  CHECK(to_string(Rat(-3, 2)) == "-3/2");
  CHECK(to_string(Rat(5)) == "5");
  CHECK_THROWS_AS(parse_rat("1/0"), Error);
  CHECK_THROWS_AS(parse_rat("x"), Error);
}

TEST_CASE("ord_p is a valuation") {
  Gen g(11);
  for (int i = 0; i < 1000; ++i) {
    const unsigned long p = berkline::testing::pick_prime(g);
    const Rat x = g.nonzero_rational(p, 400);
    const Rat y = g.nonzero_rational(p, 400);
    CHECK(ord_nonzero(Rat(x * y), p) == ord_nonzero(x, p) + ord_nonzero(y, p));
    const Rat s = x + y;
    const long ox = ord_nonzero(x, p);
    const long oy = ord_nonzero(y, p);
    if (sgn(s) == 0) continue;
    CHECK(ord_nonzero(s, p) >= std::min(ox, oy));
    if (ox != oy) CHECK(ord_nonzero(s, p) == std::min(ox, oy));
  }
}

TEST_CASE("valexp comparison examples") {
  CHECK(valexp_cmp(ValExp(1), ValExp(Rat(0), Rat(1))) == std::strong_ordering::less);
  CHECK(valexp_cmp(ValExp(3), ValExp(Rat(0), Rat(2))) == std::strong_ordering::greater);
  const ValExp x(Rat(2, 3), Rat(-5, 7));
  CHECK(valexp_cmp(x, x) == std::strong_ordering::equal);
}

TEST_CASE("valexp order agrees with floating evaluation") {
  Gen g(12);
  for (int i = 0; i < 2000; ++i) {
    const ValExp a(frac(g.integer(-50, 50), g.integer(1, 9)), frac(g.integer(-50, 50), g.integer(1, 9)));
    const ValExp b(frac(g.integer(-50, 50), g.integer(1, 9)), frac(g.integer(-50, 50), g.integer(1, 9)));
    const double da = a.to_double();
    const double db = b.to_double();
    if (std::abs(da - db) <= std::ldexp(1.0, -20)) continue;
    CHECK((da < db) == (a < b));
  }
}

TEST_CASE("Q(sqrt2) field identities") {
  Gen g(13);
  for (int i = 0; i < 1000; ++i) {
    const ValExp a(frac(g.integer(-20, 20), g.integer(1, 9)), frac(g.integer(-20, 20), g.integer(1, 9)));
    const ValExp b(frac(g.integer(-20, 20), g.integer(1, 9)), frac(g.integer(-20, 20), g.integer(1, 9)));
    if (b.is_zero()) continue;
    CHECK((a * b) / b == a);
    CHECK((a + b) - b == a);
  }
  CHECK(ValExp(Rat(0), Rat(1)) * ValExp(Rat(0), Rat(1)) == ValExp(2));
  CHECK_THROWS_AS(ValExp(1) / ValExp(0), Error);
}

TEST_CASE("valexp sign, floor and text form") {
  CHECK(ValExp(Rat(3), Rat(-2)).sign() == 1);   // 3 > 2 sqrt2
  CHECK(ValExp(Rat(-3), Rat(2)).sign() == -1);
  CHECK(ValExp(Rat(-1), Rat(1)).sign() == 1);
  CHECK(floor(ValExp(Rat(0), Rat(1))) == 1);
  CHECK(floor(ValExp(Rat(0), Rat(-1))) == -2);
  CHECK(ceil(ValExp(Rat(7, 2))) == 4);
  CHECK(floor(ValExp(Rat(-7, 2))) == -4);
  const ValExp v(Rat(1, 2), Rat(-3, 4));
  CHECK(to_string(v) == "1/2-3/4*sqrt2");
  CHECK(parse_valexp(to_string(v)) == v);
  CHECK(parse_valexp("5/3") == ValExp(Rat(5, 3)));
  CHECK(parse_valexp("sqrt2") == ValExp(Rat(0), Rat(1)));
}

TEST_CASE("kernel value arithmetic") {
  const auto inf = KernelValue::plus_infinity();
  const auto ninf = KernelValue::minus_infinity();
  CHECK(inf + KernelValue(3) == inf);
  CHECK(-inf == ninf);
  CHECK(ninf < KernelValue(-1000));
  CHECK(KernelValue(1000) < inf);
  CHECK_THROWS_AS(inf + ninf, Error);
  CHECK(to_string(ninf) == "-inf");
  CHECK(ValExp(2) * KernelValue(ValExp(Rat(1, 4))) == KernelValue(ValExp(Rat(1, 2))));
}
