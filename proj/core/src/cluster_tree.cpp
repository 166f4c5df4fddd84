#include "berkline/cluster_tree.hpp"

#include <cstdlib>
#include <algorithm>
#include <map>

#include "berkline/error.hpp"
#include "berkline/kernels.hpp"

namespace berkline {

namespace {

std::size_t add_node(ClusterTree& t, BerkPoint point, std::optional<std::size_t> item) {
  t.nodes.push_back({std::move(point), {}, item});
  return t.nodes.size() - 1;
}

std::size_t build_general(ClusterTree& t, const std::vector<BerkPoint>& pts, std::vector<std::size_t> group,
                          const BerkPoint& zeta) {
  if (group.size() == 1) return add_node(t, pts[group[0]], group[0]);
  BerkPoint top = pts[group[0]];
  for (std::size_t k = 1; k < group.size(); ++k) top = meet_wrt(top, pts[group[k]], zeta);
  const std::size_t node = add_node(t, top, std::nullopt);
  std::vector<std::vector<std::size_t>> parts;
  for (std::size_t idx : group) {
    if (pts[idx] == top) {
      const std::size_t leaf = add_node(t, top, idx);
      t.nodes[node].children.push_back(leaf);
      continue;
    }
    bool placed = false;
    for (auto& part : parts) {
      if (!(meet_wrt(pts[part[0]], pts[idx], zeta) == top)) {
        part.push_back(idx);
        placed = true;
        break;
      }
    }
    if (!placed) parts.push_back({idx});
  }
  for (auto& part : parts) {
    const std::size_t child = build_general(t, pts, std::move(part), zeta);
    t.nodes[node].children.push_back(child);
  }
  return node;
}

// Residue of x mod p for a p-integral rational x.
unsigned long residue(const Rat& x, unsigned long p) {
  const unsigned long n = mpz_fdiv_ui(x.get_num_mpz_t(), p);
  const unsigned long d = mpz_fdiv_ui(x.get_den_mpz_t(), p);
  Integer inv;
  const Integer dz(d);
  const Integer pz(p);
  mpz_invert(inv.get_mpz_t(), dz.get_mpz_t(), pz.get_mpz_t());
  return static_cast<unsigned long>((static_cast<unsigned __int128>(n) * inv.get_ui()) % p);
}

struct DigitBuilder {
  const std::vector<Rat>& centers;
  const std::vector<ValExp>& rexps;
  const PrimeConfig& cfg;
  ClusterTree& tree;

  std::size_t build(const std::vector<std::size_t>& group) {
    const unsigned long p = cfg.p();
    const Rat& a0 = centers[group[0]];
    std::optional<long> k;
    std::vector<Rat> diffs(group.size());
    std::vector<long> ords(group.size(), 0);
    for (std::size_t i = 1; i < group.size(); ++i) {
      diffs[i] = centers[group[i]] - a0;
      if (sgn(diffs[i]) == 0) continue;
      ords[i] = ord_nonzero(diffs[i], p);
      if (!k || ords[i] < *k) k = ords[i];
    }
    std::size_t widest = group[0];
    for (std::size_t idx : group) {
      if (rexps[idx] < rexps[widest]) widest = idx;
    }
    if (!k || rexps[widest] <= ValExp(*k)) {
      return add_node(tree, BerkPoint::disc(centers[widest], rexps[widest], cfg), widest);
    }
    const std::size_t node = add_node(tree, BerkPoint::disc(a0, ValExp(*k), cfg), std::nullopt);
    std::map<unsigned long, std::vector<std::size_t>> parts;
    const Rat scale = prime_power(p, -*k);
    for (std::size_t i = 0; i < group.size(); ++i) {
      unsigned long digit = 0;
      if (i > 0 && sgn(diffs[i]) != 0 && ords[i] == *k) digit = residue(Rat(diffs[i] * scale), p);
      parts[digit].push_back(group[i]);
    }
    diffs.clear();
    for (auto& [digit, part] : parts) {
      const std::size_t child = build(part);
      tree.nodes[node].children.push_back(child);
    }
    return node;
  }
};

// Same split for integer centers that fit in a machine word, partitioning
// one index array in place.
struct SmallDigitBuilder {
  const std::vector<long>& centers;
  const std::vector<Rat>& big_centers;
  const std::vector<ValExp>& rexps;
  const PrimeConfig& cfg;
  ClusterTree& tree;
  std::vector<std::size_t> idx;
  std::vector<std::size_t> scratch;
  std::vector<long> digit;

  std::size_t build(std::size_t lo, std::size_t hi) {
    const long p = static_cast<long>(cfg.p());
    const long a0 = centers[idx[lo]];
    long k = -1;
    for (std::size_t i = lo + 1; i < hi; ++i) {
      long d = centers[idx[i]] - a0;
      if (d == 0) continue;
      long o = 0;
      while (d % p == 0) {
        d /= p;
        ++o;
      }
      if (k < 0 || o < k) k = o;
    }
    std::size_t widest = idx[lo];
    for (std::size_t i = lo + 1; i < hi; ++i) {
      if (rexps[idx[i]] < rexps[widest]) widest = idx[i];
    }
    if (k < 0 || rexps[widest] <= ValExp(k)) {
      return add_node(tree, BerkPoint::disc(big_centers[widest], rexps[widest], cfg), widest);
    }
    const std::size_t node = add_node(tree, BerkPoint::disc(big_centers[idx[lo]], ValExp(k), cfg), std::nullopt);
    long pk = 1;
    for (long j = 0; j < k; ++j) pk *= p;
    std::vector<std::size_t> start(static_cast<std::size_t>(p) + 1, 0);
    for (std::size_t i = lo; i < hi; ++i) {
      digit[idx[i]] = ((centers[idx[i]] - a0) / pk % p + p) % p;
      ++start[static_cast<std::size_t>(digit[idx[i]]) + 1];
    }
    for (long d = 0; d < p; ++d) start[static_cast<std::size_t>(d) + 1] += start[static_cast<std::size_t>(d)];
    std::vector<std::size_t> fill(start.begin(), start.end() - 1);
    for (std::size_t i = lo; i < hi; ++i) scratch[lo + fill[static_cast<std::size_t>(digit[idx[i]])]++] = idx[i];
    std::copy(scratch.begin() + static_cast<std::ptrdiff_t>(lo), scratch.begin() + static_cast<std::ptrdiff_t>(hi),
              idx.begin() + static_cast<std::ptrdiff_t>(lo));
    for (long d = 0; d < p; ++d) {
      const std::size_t a = lo + start[static_cast<std::size_t>(d)];
      const std::size_t b = lo + start[static_cast<std::size_t>(d) + 1];
      if (a == b) continue;
      const std::size_t child = build(a, b);
      tree.nodes[node].children.push_back(child);
    }
    return node;
  }
};

}  // namespace

ClusterTree cluster_tree(const std::vector<BerkPoint>& points, const BerkPoint& zeta) {
  if (points.empty()) throw Error(Errc::invalid_argument, "cluster tree of no points");
  std::vector<std::size_t> group;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool dup = false;
    for (std::size_t j : group) dup = dup || points[j] == points[i];
    if (!dup) group.push_back(i);
  }
  ClusterTree t;
  t.root = build_general(t, points, std::move(group), zeta);
  return t;
}

ClusterTree digit_cluster_tree(const std::vector<Rat>& centers, const std::vector<ValExp>& rexps,
                               const PrimeConfig& cfg) {
  if (centers.empty() || centers.size() != rexps.size()) throw Error(Errc::invalid_argument, "bad disc list");
  std::vector<std::size_t> all(centers.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  ClusterTree t;
  t.nodes.reserve(2 * centers.size());
  constexpr long limit = 1L << 61;
  bool small = cfg.p() <= 1024;
  std::vector<long> machine;
  for (const Rat& c : centers) {
    if (c.get_den() != 1 || !c.get_num().fits_slong_p() || std::labs(c.get_num().get_si()) >= limit) {
      small = false;
      break;
    }
    machine.push_back(c.get_num().get_si());
  }
  if (small) {
    SmallDigitBuilder b{machine, centers, rexps, cfg, t, all, all, std::vector<long>(all.size())};
    t.root = b.build(0, all.size());
  } else {
    DigitBuilder b{centers, rexps, cfg, t};
    t.root = b.build(all);
  }
  return t;
}

}  // namespace berkline
