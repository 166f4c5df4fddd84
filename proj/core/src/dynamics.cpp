#include "berkline/dynamics.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>

#include "berkline/error.hpp"
#include "berkline/finite_field.hpp"
#include "berkline/kernels.hpp"
#include "berkline/newton_polygon.hpp"
#include "berkline/seminorm.hpp"

namespace berkline {

namespace {

// Coefficients of g read at formal degree d, reversed: U^d g(1/U).
Polynomial reversed(const Polynomial& g, unsigned d) {
  std::vector<Rat> c(d + 1);
  for (unsigned k = 0; k <= d; ++k) c[d - k] = g.coeff(k);
  return Polynomial(std::move(c));
}

long min_ord_all(std::initializer_list<const Polynomial*> polys, unsigned long p) {
  std::optional<long> m;
  for (const Polynomial* g : polys) {
    if (g->is_zero()) continue;
    const long o = min_coeff_ord(*g, p);
    if (!m || o < *m) m = o;
  }
  return m.value_or(0);
}

// min over nonzero coefficients of ord(c_k) + k*s: -log_p of the seminorm
// at Disc(0, s) of the polynomial with coefficients c.
ValExp gauss_value(const std::vector<Rat>& c, const ValExp& s, unsigned long p) {
  std::optional<ValExp> best;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (sgn(c[k]) == 0) continue;
    ValExp v = ValExp(ord_nonzero(c[k], p)) + ValExp(static_cast<long>(k)) * s;
    if (!best || v < *best) best = std::move(v);
  }
  if (!best) throw Error(Errc::invalid_argument, "seminorm of the zero polynomial");
  return *best;
}

// Usual-sign log_p of a seminorm: -inf at zeros, +inf for nonconstant g at infinity.
KernelValue log_seminorm(const Polynomial& g, const BerkPoint& x) { return -seminorm_log(g, x); }

BerkPoint apply_disc(const RationalMap& phi, const BerkPoint& x) {
  const unsigned long p = phi.prime().p();
  const Rat& a = x.center();
  const ValExp& s = x.rexp();
  const Polynomial ps = phi.numerator().shifted(a);
  const Polynomial qs = phi.denominator().shifted(a);
  const std::size_t n = static_cast<std::size_t>(phi.degree()) + 1;
  std::vector<Rat> pc(n);
  std::vector<Rat> qc(n);
  for (std::size_t k = 0; k < n; ++k) {
    pc[k] = ps.coeff(k);
    qc[k] = qs.coeff(k);
  }
  // The best center b of [P - b Q]_x lies in the smallest of a family of
  // closed discs centered at the ratios p_k / q_k, so one of them works.
  std::optional<Rat> best_center;
  std::optional<ValExp> best_value;
  std::vector<Rat> diff(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(qc[k]) == 0) continue;
    const Rat beta = pc[k] / qc[k];
    for (std::size_t j = 0; j < n; ++j) diff[j] = pc[j] - beta * qc[j];
    ValExp v = gauss_value(diff, s, p);
    if (!best_value || v > *best_value) {
      best_value = std::move(v);
      best_center = beta;
    }
  }
  const ValExp rho = *best_value - gauss_value(qc, s, p);
  BerkPoint y = BerkPoint::disc(*best_center, rho, phi.prime());

  const Rat& b = *best_center;
  const std::vector<Rat> probes{b, Rat(0), Rat(1), b + prime_power(p, floor(rho)), b + prime_power(p, ceil(rho) + 1)};
  for (const Rat& beta : probes) {
    const Polynomial num = phi.numerator() - phi.denominator() * beta;
    const KernelValue lhs = seminorm_log(RationalFunction(num, phi.denominator()), x);
    const KernelValue rhs = seminorm_log(Polynomial::linear_root(beta), y);
    if (!(lhs == rhs)) {
      throw Error(Errc::verification_failed, "image of " + to_string(x) + " fails the probe T - " + to_string(beta));
    }
  }
  return y;
}

}  // namespace

RationalMap::RationalMap(Polynomial numerator, Polynomial denominator, const PrimeConfig& cfg)
    : p_(std::move(numerator)), q_(std::move(denominator)), cfg_(cfg) {
  if (q_.is_zero()) throw Error(Errc::invalid_argument, "zero denominator");
  if (p_.is_zero()) throw Error(Errc::invalid_argument, "constant map");
  if (gcd(p_, q_).degree() > 0) throw Error(Errc::invalid_argument, "numerator and denominator share a factor");
  const long d = std::max(p_.degree(), q_.degree());
  if (d < 1) throw Error(Errc::invalid_argument, "constant map");
  d_ = static_cast<unsigned>(d);
  const unsigned long p = cfg_.p();
  b1_ = formal_resultant(q_, p_, d_);
  const Polynomial qr = reversed(q_, d_);
  const Polynomial pr = reversed(p_, d_);
  b2_ = formal_resultant(qr, pr, d_);
  const auto [g1, g2] = resultant_cofactors(q_, p_, d_);
  const auto [h1, h2] = resultant_cofactors(qr, pr, d_);
  log_b2_ = ValExp(-min_ord_all({&p_, &q_}, p));
  const long ord_b = std::max(ord_nonzero(b1_, p), ord_nonzero(b2_, p));
  neg_log_b1_ = ValExp(ord_b - min_ord_all({&g1, &g2, &h1, &h2}, p));
  c1_ = max(log_b2_, neg_log_b1_);
}

BerkPoint apply(const RationalMap& phi, const BerkPoint& x) {
  if (x.prime() != phi.prime()) throw Error(Errc::invalid_argument, "mixed primes");
  const Polynomial& num = phi.numerator();
  const Polynomial& den = phi.denominator();
  if (x.is_infinity()) {
    if (num.degree() > den.degree()) return x;
    if (num.degree() < den.degree()) return BerkPoint::type_i(Rat(0), x.prime());
    return BerkPoint::type_i(num.leading() / den.leading(), x.prime());
  }
  if (x.is_type_i()) {
    const Rat q = den(x.center());
    if (sgn(q) == 0) return BerkPoint::infinity(x.prime());
    return BerkPoint::type_i(num(x.center()) / q, x.prime());
  }
  return apply_disc(phi, x);
}

bool lipschitz_check(const RationalMap& phi, const BerkPoint& x, const BerkPoint& y) {
  if (x.is_type_i() || y.is_type_i()) throw Error(Errc::invalid_argument, "Lipschitz bound is for non-type-I points");
  const KernelValue image = path_distance(apply(phi, x), apply(phi, y));
  return image <= ValExp(static_cast<long>(phi.degree())) * path_distance(x, y);
}

namespace {

struct SideCounts {
  long outside = 0;
  std::map<fp::Poly, int> directions;
};

// Preimages of the type I point `target` near q = Disc(a, t): how many lie
// outside the closed disc, and how they split among the residue directions
// inside it (one entry per irreducible factor of the reduction).
SideCounts preimage_counts(const RationalMap& phi, const Rat& target, const Rat& a, long t) {
  const unsigned long p = phi.prime().p();
  const Polynomial f = phi.numerator() - phi.denominator() * target;
  const long inside = count_zeros(f, a, ValExp(t), DiscMode::closed, phi.prime());
  SideCounts out;
  out.outside = static_cast<long>(phi.degree()) - inside;
  const Polynomial g = f.shifted(a).scaled(prime_power(p, t));
  const Polynomial unit = g * prime_power(p, -min_coeff_ord(g, p));
  const fp::Field field(p);
  const fp::Poly reduced = field.reduce(unit);
  if (reduced.degree() != inside) throw Error(Errc::verification_failed, "reduction degree disagrees with the Newton polygon");
  for (const auto& [factor, e] : field.factor(reduced)) out.directions[factor] += e;
  return out;
}

}  // namespace

int multiplicity(const RationalMap& phi, const BerkPoint& q) {
  if (!q.is_disc() || !q.rexp().is_rational() || q.rexp().rat_part().get_den() != 1) {
    throw Error(Errc::unsupported_point, "multiplicity needs a type II point with integer radius exponent");
  }
  const unsigned long p = phi.prime().p();
  const long t = q.rexp().rat_part().get_num().get_si();
  const BerkPoint b = apply(phi, q);
  const ValExp& rho = b.rexp();
  if (!rho.is_rational() || rho.rat_part().get_den() != 1) {
    throw Error(Errc::verification_failed, "image of an integral point is not integral");
  }
  // b0 inside the image disc, zeta outside it.
  const Rat b0 = b.center();
  const Rat zeta = b0 + prime_power(p, rho.rat_part().get_num().get_si() - 1);
  const SideCounts na = preimage_counts(phi, b0, q.center(), t);
  const SideCounts nz = preimage_counts(phi, zeta, q.center(), t);
  long m = std::max(0L, nz.outside - na.outside);
  for (const auto& [factor, e] : nz.directions) {
    const auto it = na.directions.find(factor);
    const int ea = it == na.directions.end() ? 0 : it->second;
    m += factor.degree() * std::max(0, e - ea);
  }
  if (m < 1 || m > static_cast<long>(phi.degree())) throw Error(Errc::verification_failed, "multiplicity out of range");
  return static_cast<int>(m);
}

int ramification(const RationalMap& phi, const BerkPoint& q) { return multiplicity(phi, q) - 1; }

bool good_reduction(const RationalMap& phi) {
  const unsigned long p = phi.prime().p();
  const Polynomial& num = phi.numerator();
  const Polynomial& den = phi.denominator();
  const Rat scale = prime_power(p, -min_ord_all({&num, &den}, p));
  const Rat res = formal_resultant(den * scale, num * scale, phi.degree());
  return ord_nonzero(res, p) == 0;
}

DiscreteMeasure pushforward(const RationalMap& phi, const DiscreteMeasure& nu) {
  DiscreteMeasure out;
  for (const auto& a : nu.atoms()) out.add(apply(phi, a.point), a.mass);
  return out;
}

DiscreteMeasure pullback(const RationalMap& phi, const DiscreteMeasure& nu, const std::vector<FiberPoint>& fibers) {
  std::vector<long> total(nu.atoms().size(), 0);
  DiscreteMeasure out;
  for (const auto& f : fibers) {
    if (f.multiplicity < 1) throw Error(Errc::fiber_multiplicity_mismatch, "multiplicities must be positive");
    const BerkPoint image = apply(phi, f.point);
    const auto& atoms = nu.atoms();
    const auto it = std::find_if(atoms.begin(), atoms.end(), [&](const auto& a) { return a.point == image; });
    if (it == atoms.end()) {
      throw Error(Errc::fiber_multiplicity_mismatch, to_string(f.point) + " does not map to an atom");
    }
    total[static_cast<std::size_t>(it - atoms.begin())] += f.multiplicity;
    out.add(f.point, ValExp(static_cast<long>(f.multiplicity)) * it->mass);
  }
  for (std::size_t i = 0; i < total.size(); ++i) {
    if (total[i] != static_cast<long>(phi.degree())) {
      throw Error(Errc::fiber_multiplicity_mismatch,
                  "fiber over " + to_string(nu.atoms()[i].point) + " has total multiplicity " + std::to_string(total[i]));
    }
  }
  return out;
}

std::pair<Polynomial, Polynomial> iterated_lift(const RationalMap& phi, unsigned n) {
  // F o F^(n-1): only d + 1 products per step.
  const unsigned d = phi.degree();
  Polynomial g1{1};
  Polynomial g2 = Polynomial::monomial(Rat(1), 1);
  for (unsigned step = 0; step < n; ++step) {
    std::vector<Polynomial> g1_pow{Polynomial{1}};
    std::vector<Polynomial> g2_pow{Polynomial{1}};
    for (unsigned k = 1; k <= d; ++k) {
      g1_pow.push_back(g1_pow.back() * g1);
      g2_pow.push_back(g2_pow.back() * g2);
    }
    Polynomial n1;
    Polynomial n2;
    for (unsigned k = 0; k <= d; ++k) {
      const Rat& q = phi.denominator().coeff(k);
      const Rat& p = phi.numerator().coeff(k);
      if (sgn(q) == 0 && sgn(p) == 0) continue;
      const Polynomial term = g1_pow[d - k] * g2_pow[k];
      if (sgn(q) != 0) n1 += term * q;
      if (sgn(p) != 0) n2 += term * p;
    }
    g1 = std::move(n1);
    g2 = std::move(n2);
  }
  return {g1, g2};
}

unsigned max_depth() {
  if (const char* env = std::getenv("BERKLINE_MAX_DEPTH")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return 8;
}

namespace {

// log max_i [F_i^(n)(1, T)]_y along the orbit of y, switching to the chart
// at infinity when the orbit passes through it. The chart-at-infinity
// quantity is only ever needed at infinity itself.
struct OrbitHeight {
  const RationalMap& phi;

  ValExp power(unsigned m) const {
    ValExp r(1);
    for (unsigned i = 0; i < m; ++i) r *= ValExp(static_cast<long>(phi.degree()));
    return r;
  }

  KernelValue affine(const BerkPoint& y, unsigned n) const {
    if (y.is_infinity()) return KernelValue::plus_infinity();
    if (n == 0) return max(KernelValue(0), log_seminorm(Polynomial{0, 1}, y));
    const KernelValue l1 = log_seminorm(phi.denominator(), y);
    if (!l1.is_minus_infinity()) return power(n - 1) * l1 + affine(apply(phi, y), n - 1);
    return power(n - 1) * log_seminorm(phi.numerator(), y) + at_infinity(n - 1);
  }

  KernelValue at_infinity(unsigned m) const {
    if (m == 0) return KernelValue(0);
    const unsigned long p = phi.prime().p();
    const Rat q_top = phi.denominator().coeff(phi.degree());
    if (sgn(q_top) != 0) {
      return power(m - 1) * KernelValue(ValExp(-ord_nonzero(q_top, p))) +
             affine(apply(phi, BerkPoint::infinity(phi.prime())), m - 1);
    }
    const Rat p_top = phi.numerator().coeff(phi.degree());
    return power(m - 1) * KernelValue(ValExp(-ord_nonzero(p_top, p))) + at_infinity(m - 1);
  }

  static KernelValue max(const KernelValue& a, const KernelValue& b) { return a < b ? b : a; }
};

void check_depth(unsigned n) {
  if (n < 1) throw Error(Errc::invalid_argument, "iteration depth must be at least 1");
  if (n > max_depth()) {
    throw Error(Errc::depth_guard, "depth " + std::to_string(n) + " exceeds " + std::to_string(max_depth()));
  }
}

}  // namespace

KernelValue call_silverman(const RationalMap& phi, const BerkPoint& x, unsigned n) {
  check_depth(n);
  const OrbitHeight h{phi};
  const KernelValue a = h.affine(x, n);
  if (!a.is_finite()) return a;
  return KernelValue(a.value() / h.power(n));
}

namespace {

// Points strictly inside the vertical segment {Disc(c, t) : lo < t < hi}
// where the minimum of the affine functions ord(a_k) + k t, over the Taylor
// coefficients at c of the given polynomials, changes slope.
std::vector<BerkPoint> breakpoints(const std::vector<Polynomial>& polys, const Rat& c, const ValExp& lo,
                                   const ValExp& hi, const PrimeConfig& cfg) {
  // Lowest intercept per slope, then the lower envelope by slope, decreasing.
  std::map<long, long, std::greater<>> best;
  for (const Polynomial& g : polys) {
    const Polynomial s = g.shifted(c);
    for (std::size_t k = 0; k < s.coeffs().size(); ++k) {
      if (sgn(s.coeffs()[k]) == 0) continue;
      const long b = ord_nonzero(s.coeffs()[k], cfg.p());
      const auto [it, fresh] = best.emplace(static_cast<long>(k), b);
      if (!fresh) it->second = std::min(it->second, b);
    }
  }
  struct Line {
    long slope;
    long intercept;
  };
  // Where the steeper line a stops being the lower one.
  const auto cross = [](const Line& a, const Line& b) { return frac(b.intercept - a.intercept, a.slope - b.slope); };
  std::vector<Line> hull;
  for (const auto& [slope, intercept] : best) {
    const Line l{slope, intercept};
    while (!hull.empty()) {
      const Line& top = hull.back();
      if (hull.size() >= 2 && cross(hull[hull.size() - 2], l) <= cross(hull[hull.size() - 2], top)) {
        hull.pop_back();
        continue;
      }
      break;
    }
    hull.push_back(l);
  }
  std::vector<BerkPoint> out;
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    const Rat t = cross(hull[i], hull[i + 1]);
    if (lo < ValExp(t) && ValExp(t) < hi) out.push_back(BerkPoint::disc(c, ValExp(t), cfg));
  }
  return out;
}

}  // namespace

HeightApprox height_on_graph(const RationalMap& phi, const MetrizedGraph& graph, unsigned n) {
  check_depth(n);
  unsigned long dn = 1;
  for (unsigned i = 0; i < n; ++i) {
    dn *= phi.degree();
    if (dn > 4096) throw Error(Errc::depth_guard, "iterated lift degree above 4096");
  }
  const auto [f1, f2] = iterated_lift(phi, n);
  // Split edges that rise and fall at their top so every edge is vertical.
  std::vector<BerkPoint> tops;
  for (const auto& e : graph.edges()) {
    const BerkPoint top = meet_inf(graph.vertices()[e.i], graph.vertices()[e.j]);
    if (!(top == graph.vertices()[e.i]) && !(top == graph.vertices()[e.j])) tops.push_back(top);
  }
  const MetrizedGraph vertical = subdivide(graph, tops);
  std::vector<BerkPoint> cuts{to_point(vertical, retract(vertical, BerkPoint::infinity(phi.prime())))};
  for (const auto& e : vertical.edges()) {
    const BerkPoint& a = vertical.vertices()[e.i];
    const BerkPoint& b = vertical.vertices()[e.j];
    const BerkPoint& low = a.rexp() < b.rexp() ? b : a;
    const BerkPoint& high = a.rexp() < b.rexp() ? a : b;
    for (auto& x : breakpoints({f1, f2}, low.center(), high.rexp(), low.rexp(), phi.prime())) cuts.push_back(std::move(x));
  }
  HeightApprox out{subdivide(vertical, cuts), {}, n};
  ValExp dpow(1);
  for (unsigned i = 0; i < n; ++i) dpow *= ValExp(static_cast<long>(phi.degree()));
  for (const auto& v : out.graph.vertices()) {
    const KernelValue a = seminorm_log(f1, v);
    const KernelValue b = seminorm_log(f2, v);
    out.values.push_back(-(b < a ? b : a).value() / dpow);
  }
  return out;
}

DiscreteMeasure lyubich_on_graph(const RationalMap& phi, const MetrizedGraph& graph, unsigned n) {
  const HeightApprox h = height_on_graph(phi, graph, n);
  const CPAFunction f{&h.graph, h.values};
  const BerkPoint top = to_point(h.graph, retract(h.graph, BerkPoint::infinity(phi.prime())));
  DiscreteMeasure mu = DiscreteMeasure::dirac(top) - laplacian(f);
  if (!mu.is_probability()) throw Error(Errc::verification_failed, "approximate invariant measure is not a probability measure");
  return mu;
}

}  // namespace berkline
