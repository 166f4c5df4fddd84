#include <algorithm>

#include "berkline/error.hpp"
#include "berkline/graph.hpp"
#include "berkline/harmonic.hpp"
#include "berkline/kernels.hpp"
#include "doctest.h"
#include "generators.hpp"
#include "printers.hpp"

using namespace berkline;
using berkline::testing::Gen;

namespace {

BerkPoint D(const Rat& c, ValExp t, const PrimeConfig& cfg) { return BerkPoint::disc(c, std::move(t), cfg); }

std::vector<BerkPoint> random_boundary(Gen& g, const PrimeConfig& cfg, int m) {
  std::vector<BerkPoint> b;
  while (static_cast<int>(b.size()) < m) {
    BerkPoint x = g.disc(cfg);
    if (std::find(b.begin(), b.end(), x) == b.end()) b.push_back(x);
  }
  return b;
}

std::vector<ValExp> random_values(Gen& g, std::size_t m) {
  std::vector<ValExp> v;
  for (std::size_t i = 0; i < m; ++i) v.emplace_back(frac(g.integer(-12, 12), g.integer(1, 3)));
  return v;
}

}  // namespace

TEST_CASE("dirichlet examples") {
  for (unsigned long p : {2UL, 3UL, 5UL}) {
    const PrimeConfig cfg(p);
    const auto one = solve_dirichlet({D(Rat(1), 2, cfg)}, {ValExp(5)});
    for (const auto& x : {BerkPoint::gauss(cfg), BerkPoint::infinity(cfg), D(Rat(1), 7, cfg)}) {
      CHECK(evaluate_harmonic(one, x) == ValExp(5));
    }
    const std::vector<BerkPoint> annulus{D(Rat(0), 0, cfg), D(Rat(0), 2, cfg)};
    const auto sol = solve_dirichlet(annulus, {ValExp(0), ValExp(1)}, BerkPoint::infinity(cfg));
    CHECK(sol.coefficients == std::vector<ValExp>{ValExp(0), ValExp(frac(-1, 2)), ValExp(frac(1, 2))});
    CHECK(evaluate_harmonic(sol, D(Rat(0), 1, cfg)) == ValExp(frac(1, 2)));
    CHECK(evaluate_harmonic(sol, D(Rat(0), frac(3, 2), cfg)) == ValExp(frac(3, 4)));
    CHECK(evaluate_harmonic(sol, BerkPoint::infinity(cfg)) == ValExp(0));
    CHECK_THROWS_AS(solve_dirichlet({}, {}), Error);
    CHECK_THROWS_AS(solve_dirichlet(annulus, {ValExp(1)}), Error);
    CHECK_THROWS_AS(solve_dirichlet(annulus, {ValExp(1), ValExp(2)}, annulus[0]), Error);
    CHECK_THROWS_AS(solve_dirichlet({annulus[0], annulus[0]}, {ValExp(1), ValExp(2)}), Error);
  }
}

TEST_CASE("harmonic measure examples") {
  const PrimeConfig cfg(3);
  const std::vector<BerkPoint> annulus{D(Rat(0), 0, cfg), D(Rat(0), 2, cfg)};
  CHECK(harmonic_measures(annulus, D(Rat(0), 1, cfg)) == std::vector<ValExp>{ValExp(frac(1, 2)), ValExp(frac(1, 2))});
  CHECK(harmonic_measures(annulus, D(Rat(0), frac(1, 4), cfg)) ==
        std::vector<ValExp>{ValExp(frac(7, 8)), ValExp(frac(1, 8))});
  CHECK(harmonic_measures(annulus, D(Rat(0), frac(1, 8), cfg)) ==
        std::vector<ValExp>{ValExp(frac(15, 16)), ValExp(frac(1, 16))});
  CHECK(harmonic_measures(annulus, BerkPoint::infinity(cfg)) == std::vector<ValExp>{ValExp(1), ValExp(0)});
  CHECK(harmonic_measures({annulus[1]}, BerkPoint::gauss(cfg)) == std::vector<ValExp>{ValExp(1)});
}

TEST_CASE("dirichlet solutions interpolate and do not depend on the auxiliary point") {
  Gen g(401);
  for (int iter = 0; iter < 150; ++iter) {
    const PrimeConfig cfg(berkline::testing::pick_prime(g));
    const int m = static_cast<int>(g.integer(1, 6));
    const auto boundary = random_boundary(g, cfg, m);
    const auto values = random_values(g, boundary.size());
    const BerkPoint g0 = BerkPoint::gauss(cfg);
    if (std::find(boundary.begin(), boundary.end(), g0) != boundary.end()) continue;
    const auto sol = solve_dirichlet(boundary, values);
    ValExp csum(0);
    for (std::size_t i = 1; i < sol.coefficients.size(); ++i) csum += sol.coefficients[i];
    CHECK(csum.is_zero());
    for (std::size_t i = 0; i < boundary.size(); ++i) CHECK(evaluate_harmonic(sol, boundary[i]) == values[i]);
    BerkPoint z2 = g.point(cfg);
    while (std::find(boundary.begin(), boundary.end(), z2) != boundary.end()) z2 = g.point(cfg);
    const auto other = solve_dirichlet(boundary, values, z2);
    const auto lo = *std::min_element(values.begin(), values.end());
    const auto hi = *std::max_element(values.begin(), values.end());
    for (int k = 0; k < 15; ++k) {
      const BerkPoint x = g.point(cfg);
      if (x.is_type_i() && x == z2) continue;
      const ValExp f = evaluate_harmonic(sol, x);
      CHECK(f == evaluate_harmonic(other, x));
      CHECK(lo <= f);
      CHECK(f <= hi);
    }
    CHECK(determinant(cantor_matrix(boundary, g0)) != ValExp(0));
  }
}

TEST_CASE("constant boundary data gives a constant") {
  Gen g(402);
  for (int iter = 0; iter < 50; ++iter) {
    const PrimeConfig cfg(berkline::testing::pick_prime(g));
    const auto boundary = random_boundary(g, cfg, static_cast<int>(g.integer(2, 5)));
    const BerkPoint z = BerkPoint::infinity(cfg);
    const ValExp a(frac(g.integer(-9, 9), 4));
    const auto sol = solve_dirichlet(boundary, std::vector<ValExp>(boundary.size(), a), z);
    for (int k = 0; k < 10; ++k) CHECK(evaluate_harmonic(sol, g.point(cfg)) == a);
  }
}

TEST_CASE("harmonic measures form a probability vector") {
  Gen g(403);
  for (int iter = 0; iter < 120; ++iter) {
    const PrimeConfig cfg(berkline::testing::pick_prime(g));
    const auto boundary = random_boundary(g, cfg, static_cast<int>(g.integer(1, 5)));
    BerkPoint z = g.point(cfg);
    while (std::find(boundary.begin(), boundary.end(), z) != boundary.end()) z = g.point(cfg);
    const auto h = harmonic_measures(boundary, z);
    ValExp sum(0);
    for (const auto& v : h) {
      CHECK(v >= ValExp(0));
      CHECK(v <= ValExp(1));
      sum += v;
    }
    CHECK(sum == ValExp(1));
    // h_i(z) is the solution with data e_i evaluated at z.
    for (std::size_t i = 0; i < boundary.size() && boundary.size() > 1; ++i) {
      std::vector<ValExp> e(boundary.size(), ValExp(0));
      e[i] = ValExp(1);
      BerkPoint aux = BerkPoint::infinity(cfg);
      if (z.is_infinity()) aux = D(Rat(0), 100, cfg);
      CHECK(evaluate_harmonic(solve_dirichlet(boundary, e, aux), z) == h[i]);
    }
  }
}

TEST_CASE("solutions are constant off the main dendrite") {
  Gen g(404);
  for (int iter = 0; iter < 100; ++iter) {
    const PrimeConfig cfg(berkline::testing::pick_prime(g));
    const auto boundary = random_boundary(g, cfg, static_cast<int>(g.integer(2, 5)));
    const auto sol = solve_dirichlet(boundary, random_values(g, boundary.size()), BerkPoint::infinity(cfg));
    // The hull of the boundary alone: anchor at one of its points.
    const MetrizedGraph hull = span(boundary, boundary[0]);
    for (int k = 0; k < 10; ++k) {
      const BerkPoint x = g.point(cfg);
      const BerkPoint r = to_point(hull, retract(hull, x));
      if (x.is_infinity()) continue;
      CHECK(evaluate_harmonic(sol, x) == evaluate_harmonic(sol, r));
    }
  }
}

TEST_CASE("harmonicity certificate on a spanning graph") {
  Gen g(405);
  for (int iter = 0; iter < 80; ++iter) {
    const PrimeConfig cfg(berkline::testing::pick_prime(g));
    const auto boundary = random_boundary(g, cfg, static_cast<int>(g.integer(2, 5)));
    const BerkPoint g0 = BerkPoint::gauss(cfg);
    if (std::find(boundary.begin(), boundary.end(), g0) != boundary.end()) continue;
    const auto sol = solve_dirichlet(boundary, random_values(g, boundary.size()));
    std::vector<BerkPoint> pts = boundary;
    for (int k = 0; k < 3; ++k) pts.push_back(g.disc(cfg));
    const MetrizedGraph gr = span(pts, g0);
    CPAFunction f{&gr, {}};
    for (const auto& v : gr.vertices()) f.values.push_back(evaluate_harmonic(sol, v));
    const DiscreteMeasure lap = laplacian(f);
    for (const auto& a : lap.atoms()) {
      CHECK(std::find(boundary.begin(), boundary.end(), a.point) != boundary.end());
    }
  }
}

TEST_CASE("reproducing property against the equilibrium measure") {
  Gen g(406);
  for (int iter = 0; iter < 100; ++iter) {
    const PrimeConfig cfg(berkline::testing::pick_prime(g));
    const DiscUnion e = berkline::testing::random_union(g, cfg, static_cast<int>(g.integer(1, 5)));
    const BerkPoint zeta = iter % 2 == 0 ? BerkPoint::infinity(cfg) : berkline::testing::point_outside(g, e);
    const auto boundary = e.boundary_points();
    const auto values = random_values(g, boundary.size());
    const auto mu = equilibrium(e, zeta).measure;
    ValExp expect(0);
    for (std::size_t i = 0; i < boundary.size(); ++i) expect += values[i] * mu.mass_at(boundary[i]);
    const BerkPoint aux = zeta.is_type_i() ? zeta : BerkPoint::infinity(cfg);
    CHECK(evaluate_harmonic(solve_dirichlet(boundary, values, aux), zeta) == expect);
  }
}

TEST_CASE("green function examples") {
  for (unsigned long p : {2UL, 3UL, 5UL}) {
    const PrimeConfig cfg(p);
    const BerkPoint inf = BerkPoint::infinity(cfg);
    const DiscUnion unit({{Rat(0), ValExp(0)}}, cfg);
    for (long t = 0; t <= 5; ++t) CHECK(green_function(unit, inf, D(Rat(0), -t, cfg)) == KernelValue(t));
    CHECK(green_function(unit, inf, D(Rat(0), frac(5, 2), cfg)) == KernelValue(0));
    CHECK(green_function(unit, inf, BerkPoint::type_i(Rat(p), cfg)) == KernelValue(0));
    CHECK(green_function(unit, inf, BerkPoint::type_i(frac(1, p), cfg)) == KernelValue(1));
    CHECK(green_function(unit, inf, inf).is_plus_infinity());
  }
}

TEST_CASE("green function properties") {
  Gen g(407);
  for (int iter = 0; iter < 100; ++iter) {
    const PrimeConfig cfg(berkline::testing::pick_prime(g));
    const DiscUnion e = berkline::testing::random_union(g, cfg, static_cast<int>(g.integer(1, 4)));
    const BerkPoint z1 = berkline::testing::point_outside(g, e);
    BerkPoint z2 = berkline::testing::point_outside(g, e);
    if (z1 == z2) continue;
    const KernelValue a = green_function(e, z1, z2);
    CHECK(a == green_function(e, z2, z1));
    CHECK(a > KernelValue(0));
    for (const auto& x : e.boundary_points()) CHECK(green_function(e, z1, x) == KernelValue(0));
    for (int k = 0; k < 5; ++k) {
      const BerkPoint x = g.point(cfg);
      if (x == z1) continue;
      const KernelValue v = green_function(e, z1, x);
      CHECK(v >= KernelValue(0));
      CHECK((v == KernelValue(0)) == e.contains(x));
    }
  }
}

TEST_CASE("laplacian of the green function") {
  Gen g(408);
  for (int iter = 0; iter < 80; ++iter) {
    const PrimeConfig cfg(berkline::testing::pick_prime(g));
    const DiscUnion e = berkline::testing::random_union(g, cfg, static_cast<int>(g.integer(1, 4)));
    const BerkPoint zeta = berkline::testing::point_outside(g, e, false);
    const auto eq = equilibrium(e, zeta);
    std::vector<BerkPoint> pts = e.boundary_points();
    pts.push_back(g.disc(cfg));
    const MetrizedGraph gr = span(pts, zeta);
    CPAFunction f{&gr, {}};
    for (const auto& v : gr.vertices()) f.values.push_back(green_function(e, zeta, v).value());
    CHECK(laplacian(f) == DiscreteMeasure::dirac(zeta) - eq.measure);
  }
}
