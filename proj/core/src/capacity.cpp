#include "berkline/capacity.hpp"

#include <algorithm>
#include <functional>

#include "berkline/cluster_tree.hpp"
#include "berkline/error.hpp"
#include "berkline/kernels.hpp"
#include "berkline/linalg.hpp"

namespace berkline {

namespace {

void require_probability(const DiscreteMeasure& m, const char* name) {
  if (m.empty() || !m.is_probability()) throw Error(Errc::not_probability, std::string(name) + " is not a probability measure");
}

ClusterTree boundary_tree(const DiscUnion& e, const BerkPoint& zeta) {
  if (zeta.is_infinity()) {
    std::vector<Rat> centers;
    std::vector<ValExp> rexps;
    centers.reserve(e.size());
    rexps.reserve(e.size());
    for (const Disc& d : e.discs()) {
      centers.push_back(d.center);
      rexps.push_back(d.rexp);
    }
    return digit_cluster_tree(centers, rexps, e.prime());
  }
  return cluster_tree(e.boundary_points(), zeta);
}

const ValExp& finite(const KernelValue& v) {
  if (!v.is_finite()) throw Error(Errc::verification_failed, "unexpected infinite kernel value");
  return v.value();
}

}  // namespace

DiscUnion::DiscUnion(std::vector<Disc> discs, const PrimeConfig& cfg) : cfg_(cfg) {
  if (discs.empty()) throw Error(Errc::invalid_argument, "empty disc union");
  std::vector<Rat> centers;
  std::vector<ValExp> rexps;
  for (const Disc& d : discs) {
    centers.push_back(d.center);
    rexps.push_back(d.rexp);
  }
  const ClusterTree tree = digit_cluster_tree(centers, rexps, cfg);
  std::vector<std::size_t> kept;
  for (const auto& node : tree.nodes) {
    if (node.item) kept.push_back(*node.item);
  }
  std::sort(kept.begin(), kept.end());
  for (std::size_t i : kept) discs_.push_back(std::move(discs[i]));
}

DiscUnion DiscUnion::from_normalized(std::vector<Disc> discs, const PrimeConfig& cfg) {
  if (discs.empty()) throw Error(Errc::invalid_argument, "empty disc union");
  DiscUnion u(cfg);
  u.discs_ = std::move(discs);
  return u;
}

std::vector<BerkPoint> DiscUnion::boundary_points() const {
  std::vector<BerkPoint> out;
  out.reserve(discs_.size());
  for (const Disc& d : discs_) out.push_back(BerkPoint::disc(d.center, d.rexp, cfg_));
  return out;
}

bool DiscUnion::contains(const BerkPoint& x) const {
  if (x.prime() != cfg_) throw Error(Errc::invalid_argument, "mixed primes");
  if (x.is_infinity()) return false;
  return std::any_of(discs_.begin(), discs_.end(),
                     [&](const Disc& d) { return berkline::contains(BerkPoint::disc(d.center, d.rexp, cfg_), x); });
}

DiscUnion zp_level_set(const PrimeConfig& cfg, unsigned n) {
  const Integer count = Integer(prime_power(cfg.p(), static_cast<long>(n)));
  if (count > Integer(50'000'000)) throw Error(Errc::invalid_argument, "level set too large");
  std::vector<Disc> discs;
  discs.reserve(count.get_ui());
  for (unsigned long i = 0; i < count.get_ui(); ++i) discs.push_back({Rat(i), ValExp(static_cast<long>(n))});
  return DiscUnion::from_normalized(std::move(discs), cfg);
}

KernelValue energy(const DiscreteMeasure& nu, const BerkPoint& zeta) {
  require_probability(nu, "nu");
  for (const auto& a : nu.atoms()) {
    if (a.point == zeta) throw Error(Errc::zeta_in_support, to_string(zeta));
  }
  for (const auto& a : nu.atoms()) {
    if (a.point.is_type_i()) return KernelValue::plus_infinity();
  }
  const auto& atoms = nu.atoms();
  ValExp total(0);
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    total += atoms[i].mass * atoms[i].mass * finite(hsia_log(atoms[i].point, atoms[i].point, zeta));
    for (std::size_t j = i + 1; j < atoms.size(); ++j) {
      total += ValExp(2) * atoms[i].mass * atoms[j].mass * finite(hsia_log(atoms[i].point, atoms[j].point, zeta));
    }
  }
  return total;
}

KernelValue potential(const DiscreteMeasure& mu, const BerkPoint& x, const BerkPoint& zeta) {
  KernelValue total(0);
  for (const auto& a : mu.atoms()) total = total + a.mass * hsia_log(x, a.point, zeta);
  return total;
}

namespace {

Rat as_number(const ValExp& v, Rat*) { return v.rat_part(); }
ValExp as_number(const ValExp& v, ValExp*) { return v; }

// Seen from a node w with children c, the equilibrium of the union below w
// splits its mass in proportion to 1/(V_c - m_w), m_w = hsia(w, w; zeta),
// and V_w = m_w + 1 / sum_c 1/(V_c - m_w). T is Rat when every height is
// rational, which is the common and much cheaper case.
template <typename T>
EquilibriumResult tree_equilibrium(const ClusterTree& tree, const std::vector<std::size_t>& order,
                                   const std::vector<ValExp>& heights) {
  const std::size_t n = tree.nodes.size();
  std::vector<T> robin(n);
  std::vector<T> height(n);
  for (std::size_t v = 0; v < n; ++v) height[v] = as_number(heights[v], static_cast<T*>(nullptr));
  for (std::size_t k = order.size(); k-- > 0;) {
    const std::size_t v = order[k];
    const auto& node = tree.nodes[v];
    if (node.children.empty()) {
      robin[v] = height[v];
      continue;
    }
    T sum(0);
    for (std::size_t c : node.children) {
      if (!(height[v] < robin[c])) throw Error(Errc::verification_failed, "degenerate cluster tree");
      sum += T(1) / T(robin[c] - height[v]);
    }
    robin[v] = height[v] + T(1) / sum;
  }
  std::vector<T> mass(n);
  mass[tree.root] = T(1);
  std::vector<DiscreteMeasure::Atom> atoms;
  atoms.reserve(n / 2 + 1);
  for (std::size_t v : order) {
    const auto& node = tree.nodes[v];
    if (node.children.empty()) {
      atoms.push_back({node.point, ValExp(mass[v])});
      continue;
    }
    const T scale = mass[v] * T(robin[v] - height[v]);
    for (std::size_t c : node.children) mass[c] = scale / T(robin[c] - height[v]);
  }
  return {DiscreteMeasure::from_distinct(std::move(atoms)), ValExp(robin[tree.root])};
}

}  // namespace

EquilibriumResult equilibrium(const DiscUnion& e, const BerkPoint& zeta) {
  if (e.contains(zeta)) throw Error(Errc::zeta_in_set, to_string(zeta));
  const ClusterTree tree = boundary_tree(e, zeta);
  const std::size_t n = tree.nodes.size();
  std::vector<std::size_t> order;
  order.reserve(n);
  std::vector<std::size_t> stack{tree.root};
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (std::size_t c : tree.nodes[v].children) stack.push_back(c);
  }
  std::vector<ValExp> heights(n);
  bool rational = true;
  for (std::size_t v = 0; v < n; ++v) {
    heights[v] = zeta.is_infinity() ? tree.nodes[v].point.rexp() : finite(diam(tree.nodes[v].point, zeta));
    rational = rational && heights[v].is_rational();
  }
  return rational ? tree_equilibrium<Rat>(tree, order, heights) : tree_equilibrium<ValExp>(tree, order, heights);
}

EquilibriumResult equilibrium_active_set(const DiscUnion& e, const BerkPoint& zeta) {
  if (e.contains(zeta)) throw Error(Errc::zeta_in_set, to_string(zeta));
  const std::vector<BerkPoint> pts = e.boundary_points();
  const std::size_t m = pts.size();
  Matrix<ValExp> kernel(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      kernel(i, j) = finite(hsia_log(pts[i], pts[j], zeta));
      kernel(j, i) = kernel(i, j);
    }
  }
  std::vector<std::size_t> active(m);
  for (std::size_t i = 0; i < m; ++i) active[i] = i;
  std::vector<ValExp> w;
  ValExp robin;
  for (;;) {
    const std::size_t a = active.size();
    Matrix<ValExp> sys(a + 1, a + 1);
    std::vector<ValExp> rhs(a + 1, ValExp(0));
    for (std::size_t i = 0; i < a; ++i) {
      for (std::size_t j = 0; j < a; ++j) sys(i, j) = kernel(active[i], active[j]);
      sys(i, a) = ValExp(-1);
      sys(a, i) = ValExp(1);
    }
    rhs[a] = ValExp(1);
    auto sol = solve(sys, rhs);
    if (!sol) throw Error(Errc::singular_system, "stationarity system");
    std::size_t worst = a;
    for (std::size_t i = 0; i < a; ++i) {
      if ((*sol)[i].sign() < 0 && (worst == a || (*sol)[i] < (*sol)[worst])) worst = i;
    }
    if (worst == a) {
      w.assign(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(a));
      robin = (*sol)[a];
      break;
    }
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(worst));
  }
  std::vector<DiscreteMeasure::Atom> atoms;
  for (std::size_t i = 0; i < active.size(); ++i) atoms.push_back({pts[active[i]], w[i]});
  EquilibriumResult result{DiscreteMeasure::from_distinct(std::move(atoms)), robin};
  for (std::size_t i = 0; i < m; ++i) {
    ValExp u(0);
    for (std::size_t k = 0; k < active.size(); ++k) u += w[k] * kernel(i, active[k]);
    if (u > robin) throw Error(Errc::verification_failed, "dropped atom above the Robin constant");
  }
  return result;
}

FrostmanReport frostman_check(const DiscUnion& e, const EquilibriumResult& result, const BerkPoint& zeta,
                              const std::vector<BerkPoint>& samples) {
  FrostmanReport report;
  const KernelValue v(result.robin);
  auto fail = [&](const BerkPoint& x, KernelValue u, std::string why) {
    report.passed = false;
    report.witness = x;
    report.witness_value = std::move(u);
    report.reason = std::move(why);
  };
  if (!result.measure.is_probability()) {
    report.passed = false;
    report.reason = "not a probability measure";
    return report;
  }
  for (const auto& a : result.measure.atoms()) {
    ++report.points_checked;
    if (!e.contains(a.point)) {
      fail(a.point, KernelValue(), "atom outside E");
      return report;
    }
    KernelValue u = potential(result.measure, a.point, zeta);
    if (!(u == v)) {
      fail(a.point, u, "potential differs from the Robin constant on the support");
      return report;
    }
  }
  auto check_below = [&](const BerkPoint& x) {
    ++report.points_checked;
    KernelValue u = potential(result.measure, x, zeta);
    if (u > v) {
      fail(x, u, "potential exceeds the Robin constant");
      return false;
    }
    return true;
  };
  for (const BerkPoint& x : e.boundary_points()) {
    if (!check_below(x)) return report;
  }
  for (const BerkPoint& x : samples) {
    if (x == zeta) throw Error(Errc::invalid_argument, "sample at the pole");
    if (!check_below(x)) return report;
  }
  return report;
}

std::vector<BerkPoint> refined_candidates(const DiscUnion& e, unsigned levels) {
  const unsigned long p = e.prime().p();
  std::vector<BerkPoint> out;
  for (const Disc& d : e.discs()) {
    if (!d.rexp.is_rational() || d.rexp.rat_part().get_den() != 1) {
      throw Error(Errc::invalid_argument, "refinement needs integer radius exponents");
    }
    const long t = d.rexp.rat_part().get_num().get_si();
    unsigned long count = 1;
    for (unsigned l = 0; l <= levels; ++l, count *= p) {
      for (unsigned long k = 0; k < count; ++k) {
        out.push_back(BerkPoint::disc(d.center + Rat(k) * prime_power(p, t), ValExp(t + static_cast<long>(l)), e.prime()));
      }
    }
  }
  return out;
}

namespace {

// k(k-1) * diam without tripping 0 * inf.
KernelValue self_pairs(long k, const KernelValue& d) {
  if (k < 2) return KernelValue(0);
  return ValExp(k * (k - 1)) * d;
}

}  // namespace

KernelValue transfinite_diameter(const DiscUnion& e, unsigned n, const std::vector<BerkPoint>& candidates,
                                 const BerkPoint& zeta) {
  if (n < 2 || n > 8) throw Error(Errc::invalid_argument, "transfinite diameter needs 2 <= n <= 8");
  if (candidates.empty()) throw Error(Errc::invalid_argument, "no candidates");
  for (const BerkPoint& x : candidates) {
    if (!e.contains(x)) throw Error(Errc::candidates_outside_set, to_string(x));
  }
  if (e.contains(zeta)) throw Error(Errc::zeta_in_set, to_string(zeta));
  const ClusterTree tree = cluster_tree(candidates, zeta);
  // best[v][k]: least sum of hsia over ordered pairs i != j among k points
  // chosen below v. Distinct points below different children of v meet at v.
  using Row = std::vector<std::optional<KernelValue>>;
  std::vector<Row> best(tree.nodes.size());
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    const auto& node = tree.nodes[v];
    const KernelValue h = diam(node.point, zeta);
    Row row(n + 1);
    if (node.children.empty()) {
      for (unsigned k = 0; k <= n; ++k) row[k] = self_pairs(k, h);
      best[v] = std::move(row);
      return;
    }
    // Knapsack over children of sum f(c, k_c) - h * sum k_c^2.
    Row acc(n + 1);
    acc[0] = KernelValue(0);
    for (std::size_t c : node.children) {
      visit(c);
      Row next(n + 1);
      for (unsigned k = 0; k <= n; ++k) {
        if (!acc[k]) continue;
        for (unsigned j = 0; j + k <= n; ++j) {
          if (!best[c][j]) continue;
          KernelValue val = *acc[k] + *best[c][j];
          if (j > 0) val = val - ValExp(static_cast<long>(j * j)) * h;
          if (!next[k + j] || val < *next[k + j]) next[k + j] = std::move(val);
        }
      }
      acc = std::move(next);
    }
    for (unsigned k = 0; k <= n; ++k) {
      if (acc[k]) row[k] = *acc[k] + ValExp(static_cast<long>(k * k)) * h;
    }
    best[v] = std::move(row);
  };
  visit(tree.root);
  const KernelValue total = *best[tree.root][n];
  if (!total.is_finite()) return total;
  return KernelValue(total.value() / ValExp(static_cast<long>(n * (n - 1))));
}

KernelValue chebyshev(const DiscUnion& e, unsigned n, ChebyshevMode mode, const std::vector<BerkPoint>& candidates,
                      const BerkPoint& zeta) {
  if (n < 1 || n > 8) throw Error(Errc::invalid_argument, "chebyshev needs 1 <= n <= 8");
  if (e.contains(zeta)) throw Error(Errc::zeta_in_set, to_string(zeta));
  std::vector<BerkPoint> pool;
  for (const BerkPoint& a : candidates) {
    if (mode == ChebyshevMode::restricted && !e.contains(a)) continue;
    if (std::find(pool.begin(), pool.end(), a) == pool.end()) pool.push_back(a);
  }
  if (pool.empty()) throw Error(Errc::invalid_argument, "no admissible candidates");
  // Moving from a boundary point of E into its disc, away from zeta, no
  // factor hsia(x, a_i) decreases, so the minimum over E of the sum is
  // attained at a boundary point.
  const std::vector<BerkPoint> xs = e.boundary_points();
  const std::size_t nx = xs.size();
  const std::size_t na = pool.size();
  std::vector<std::vector<KernelValue>> h(na, std::vector<KernelValue>(nx));
  std::vector<KernelValue> row_max(nx);
  for (std::size_t a = 0; a < na; ++a) {
    for (std::size_t x = 0; x < nx; ++x) {
      h[a][x] = hsia_log(xs[x], pool[a], zeta);
      if (a == 0 || h[a][x] > row_max[x]) row_max[x] = h[a][x];
    }
  }
  std::optional<KernelValue> best;
  std::vector<KernelValue> sums(nx, KernelValue(0));
  std::function<void(std::size_t, unsigned)> dfs = [&](std::size_t from, unsigned left) {
    if (left == 0) {
      const KernelValue v = *std::min_element(sums.begin(), sums.end());
      if (!best || v > *best) best = v;
      return;
    }
    if (best) {
      std::optional<KernelValue> bound;
      for (std::size_t x = 0; x < nx; ++x) {
        KernelValue b = sums[x] + ValExp(static_cast<long>(left)) * row_max[x];
        if (!bound || b < *bound) bound = std::move(b);
      }
      if (!(*bound > *best)) return;
    }
    for (std::size_t a = from; a < na; ++a) {
      const std::vector<KernelValue> saved = sums;
      for (std::size_t x = 0; x < nx; ++x) sums[x] = sums[x] + h[a][x];
      dfs(a, left - 1);
      sums = saved;
    }
  };
  dfs(0, n);
  if (!best->is_finite()) return *best;
  return KernelValue(best->value() / ValExp(static_cast<long>(n)));
}

ValExp mu_energy(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
  require_probability(mu, "mu");
  require_probability(nu, "nu");
  for (const auto* m : {&mu, &nu}) {
    for (const auto& a : m->atoms()) {
      if (a.point.is_type_i()) throw Error(Errc::type_i_atom, to_string(a.point));
    }
  }
  // Integrating hsia(x, y; s) over s against mu gives
  // j(x, y) - u(x) - u(y), with j the kernel based at the Gauss point and
  // u(x) the integral of j(x, s) against mu. The constant makes the mu-mu
  // energy vanish.
  const BerkPoint base = BerkPoint::gauss(mu.atoms().front().point.prime());
  auto j = [&](const BerkPoint& x, const BerkPoint& y) { return finite(j_kernel(x, y, base)); };
  auto u = [&](const BerkPoint& x) {
    ValExp s(0);
    for (const auto& a : mu.atoms()) s += a.mass * j(x, a.point);
    return s;
  };
  auto raw = [&](const DiscreteMeasure& m) {
    ValExp pair(0);
    ValExp single(0);
    for (const auto& a : m.atoms()) {
      single += a.mass * u(a.point);
      for (const auto& b : m.atoms()) pair += a.mass * b.mass * j(a.point, b.point);
    }
    return pair - ValExp(2) * single;
  };
  return raw(nu) - raw(mu);
}

}  // namespace berkline
