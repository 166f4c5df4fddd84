#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "berkline/polynomial.hpp"

namespace berkline::fp {

/// Polynomial over F_p, constant term first, trimmed.
struct Poly {
  std::vector<std::uint64_t> c;

  long degree() const noexcept { return static_cast<long>(c.size()) - 1; }
  bool is_zero() const noexcept { return c.empty(); }
  friend bool operator==(const Poly&, const Poly&) = default;
  friend auto operator<=>(const Poly& a, const Poly& b) {
    if (a.c.size() != b.c.size()) return a.c.size() <=> b.c.size();
    for (std::size_t i = a.c.size(); i-- > 0;) {
      if (a.c[i] != b.c[i]) return a.c[i] <=> b.c[i];
    }
    return std::strong_ordering::equal;
  }
};

class Field {
 public:
  explicit Field(std::uint64_t p);

  std::uint64_t p() const noexcept { return p_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p_ - b) % p_; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const;

  Poly trim(Poly f) const;
  Poly add(const Poly& a, const Poly& b) const;
  Poly sub(const Poly& a, const Poly& b) const;
  Poly mul(const Poly& a, const Poly& b) const;
  std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) const;
  Poly mod(const Poly& a, const Poly& m) const { return divmod(a, m).second; }
  Poly monic(const Poly& a) const;
  Poly gcd(Poly a, Poly b) const;
  Poly derivative(const Poly& a) const;
  Poly powmod(Poly base, std::uint64_t e, const Poly& m) const;

  /// Reduction of a p-integral rational polynomial; throws if a coefficient
  /// has negative valuation.
  Poly reduce(const Polynomial& g) const;

  /// Monic irreducible factors with multiplicities, sorted. Uses squarefree
  /// decomposition, distinct-degree splitting and Cantor-Zassenhaus
  /// equal-degree splitting with a deterministic generator.
  std::vector<std::pair<Poly, int>> factor(const Poly& f) const;

 private:
  std::vector<std::pair<Poly, int>> squarefree(const Poly& f) const;
  std::vector<std::pair<Poly, int>> distinct_degree(Poly f) const;
  void equal_degree(const Poly& f, int d, std::vector<Poly>& out, std::mt19937_64& rng) const;

  std::uint64_t p_;
};

}  // namespace berkline::fp
