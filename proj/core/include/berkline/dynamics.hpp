#pragma once

#include <utility>
#include <vector>

#include "berkline/graph.hpp"
#include "berkline/kernel_value.hpp"
#include "berkline/measure.hpp"
#include "berkline/point.hpp"
#include "berkline/polynomial.hpp"

namespace berkline {

/// T -> P(T)/Q(T) with gcd(P, Q) = 1 and degree d = max(deg P, deg Q) >= 1.
///
/// The homogeneous lift is F = (F1, F2) with F1(1, T) = Q and F2(1, T) = P.
/// For all (x, y), log ||F(x, y)|| - d log ||(x, y)|| lies between
/// -neg_log_lower() and log_upper(); c1() is the larger of the two.
class RationalMap {
 public:
  /// Throws invalid_argument for Q = 0, a common factor, or a constant map.
  RationalMap(Polynomial numerator, Polynomial denominator, const PrimeConfig& cfg);

  const Polynomial& numerator() const noexcept { return p_; }
  const Polynomial& denominator() const noexcept { return q_; }
  unsigned degree() const noexcept { return d_; }
  const PrimeConfig& prime() const noexcept { return cfg_; }

  /// Res(F1(1, T), F2(1, T)) and Res(F1(U, 1), F2(U, 1)) at formal degree d.
  const Rat& resultant_affine() const noexcept { return b1_; }
  const Rat& resultant_at_infinity() const noexcept { return b2_; }
  /// log_p of the largest coefficient absolute value.
  const ValExp& log_upper() const noexcept { return log_b2_; }
  /// -log_p of the lower constant, built from the resultants and the
  /// absolute values of their Bezout cofactors.
  const ValExp& neg_log_lower() const noexcept { return neg_log_b1_; }
  const ValExp& c1() const noexcept { return c1_; }

 private:
  Polynomial p_;
  Polynomial q_;
  unsigned d_ = 0;
  PrimeConfig cfg_;
  Rat b1_;
  Rat b2_;
  ValExp log_b2_;
  ValExp neg_log_b1_;
  ValExp c1_;
};

/// Image of a point. Disc images are checked against the seminorm identity
/// [g]_phi(x) = [g o phi]_x on five linear probes (VERIFICATION_FAILED).
BerkPoint apply(const RationalMap& phi, const BerkPoint& x);

/// rho(phi(x), phi(y)) <= d rho(x, y) for non-type-I x, y.
bool lipschitz_check(const RationalMap& phi, const BerkPoint& x, const BerkPoint& y);

/// Local degree of phi at a type II point Disc(a, t) with integer t, from
/// the preimages of two type I points on different sides of phi(q).
/// Other points throw UNSUPPORTED_POINT.
int multiplicity(const RationalMap& phi, const BerkPoint& q);
int ramification(const RationalMap& phi, const BerkPoint& q);

bool good_reduction(const RationalMap& phi);

DiscreteMeasure pushforward(const RationalMap& phi, const DiscreteMeasure& nu);

struct FiberPoint {
  BerkPoint point;
  int multiplicity;
};

/// Each atom b of nu becomes sum of m_q * mass * delta_q over the supplied
/// fiber points q with phi(q) = b. Every fiber point must map to an atom and
/// the multiplicities over each atom must add up to d
/// (FIBER_MULTIPLICITY_MISMATCH).
DiscreteMeasure pullback(const RationalMap& phi, const DiscreteMeasure& nu, const std::vector<FiberPoint>& fibers);

/// (F1^(n)(1, T), F2^(n)(1, T)) for the n-th iterate of the lift.
std::pair<Polynomial, Polynomial> iterated_lift(const RationalMap& phi, unsigned n);

/// Largest accepted iteration depth: BERKLINE_MAX_DEPTH if set, else 8.
unsigned max_depth();

/// Truncated local height (1/d^n) log max([F1^(n)(1,T)]_x, [F2^(n)(1,T)]_x)
/// in the usual log convention (not -log): it grows towards infinity and
/// is +inf there. Computed along the orbit of x without expanding the
/// iterated lift. DEPTH_GUARD beyond max_depth().
KernelValue call_silverman(const RationalMap& phi, const BerkPoint& x, unsigned n);

/// The truncated height restricted to a refinement of a graph on which it is
/// affine along every edge.
struct HeightApprox {
  MetrizedGraph graph;
  std::vector<ValExp> values;
  unsigned n = 0;
};

/// Needs a graph of non-type-I points and d^n <= 4096 (DEPTH_GUARD).
HeightApprox height_on_graph(const RationalMap& phi, const MetrizedGraph& graph, unsigned n);

/// Retraction of infinity minus the graph Laplacian of the truncated height:
/// a probability measure approximating the invariant measure of phi.
DiscreteMeasure lyubich_on_graph(const RationalMap& phi, const MetrizedGraph& graph, unsigned n);

}  // namespace berkline
