#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "berkline/kernel_value.hpp"
#include "berkline/measure.hpp"
#include "berkline/point.hpp"

namespace berkline {

/// Closed disc B(center, p^(-rexp)).
struct Disc {
  Rat center;
  ValExp rexp;
};

/// Finite union of closed discs, stored with every disc that lies inside
/// another one removed.
class DiscUnion {
 public:
  /// Throws invalid_argument on an empty list.
  DiscUnion(std::vector<Disc> discs, const PrimeConfig& cfg);

  const std::vector<Disc>& discs() const noexcept { return discs_; }
  const PrimeConfig& prime() const noexcept { return cfg_; }
  std::size_t size() const noexcept { return discs_.size(); }

  /// The points Disc(center, rexp), one per disc.
  std::vector<BerkPoint> boundary_points() const;
  /// Whether x lies in one of the discs.
  bool contains(const BerkPoint& x) const;

  /// Builds from discs already known to be pairwise non-nested.
  static DiscUnion from_normalized(std::vector<Disc> discs, const PrimeConfig& cfg);

 private:
  DiscUnion(const PrimeConfig& cfg) : cfg_(cfg) {}
  std::vector<Disc> discs_;
  PrimeConfig cfg_;
};

/// The p^n discs B(i, p^-n), i = 0 .. p^n - 1, covering Z_p.
DiscUnion zp_level_set(const PrimeConfig& cfg, unsigned n);

struct EquilibriumResult {
  DiscreteMeasure measure;
  /// Robin constant: the minimal energy.
  ValExp robin;
  /// -log_p of the capacity, equal to -robin.
  ValExp capacity_log() const { return -robin; }
};

/// Sum of m_i m_j hsia_log(x_i, x_j; zeta); +inf when a type I atom carries
/// mass. Throws ZETA_IN_SUPPORT or NOT_PROBABILITY.
KernelValue energy(const DiscreteMeasure& nu, const BerkPoint& zeta);

/// Potential u(x) = sum of m_k hsia_log(x, x_k; zeta).
KernelValue potential(const DiscreteMeasure& mu, const BerkPoint& x, const BerkPoint& zeta);

/// Equilibrium measure and Robin constant, by recursion over the cluster
/// tree of the boundary points seen from zeta. Throws ZETA_IN_SET.
EquilibriumResult equilibrium(const DiscUnion& e, const BerkPoint& zeta);

/// Same answer from the dense stationarity system M w = V 1, 1'w = 1 with
/// active-set descent. Cubic in the number of discs.
EquilibriumResult equilibrium_active_set(const DiscUnion& e, const BerkPoint& zeta);

struct FrostmanReport {
  bool passed = true;
  /// Where a check failed, with the potential there.
  std::optional<BerkPoint> witness;
  KernelValue witness_value;
  std::string reason;
  std::size_t points_checked = 0;
};

/// Checks u = V on the support and u <= V at the boundary points and samples.
FrostmanReport frostman_check(const DiscUnion& e, const EquilibriumResult& result, const BerkPoint& zeta,
                              const std::vector<BerkPoint>& samples);

/// Every point of the p-ary subtree of depth `levels` under each disc point.
/// Requires integer radius exponents.
std::vector<BerkPoint> refined_candidates(const DiscUnion& e, unsigned levels);

/// -log d_n over n-multisets of candidates. Candidates must lie in E.
/// 2 <= n <= 8. Exact, by dynamic programming over the cluster tree.
KernelValue transfinite_diameter(const DiscUnion& e, unsigned n, const std::vector<BerkPoint>& candidates,
                                 const BerkPoint& zeta);

enum class ChebyshevMode { restricted, unrestricted };

/// -log of the n-th Chebyshev constant over candidate centers: the largest,
/// over n-multisets a, of (1/n) min over x in E of sum_i hsia_log(x, a_i).
/// Restricted mode keeps only candidates inside E. 1 <= n <= 8.
KernelValue chebyshev(const DiscUnion& e, unsigned n, ChebyshevMode mode, const std::vector<BerkPoint>& candidates,
                      const BerkPoint& zeta);

/// Energy of nu against the normalized kernel attached to mu. Both must be
/// probability measures without type I atoms (TYPE_I_ATOM, NOT_PROBABILITY).
ValExp mu_energy(const DiscreteMeasure& mu, const DiscreteMeasure& nu);

}  // namespace berkline
