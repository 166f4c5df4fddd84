#pragma once

#include <initializer_list>
#include <vector>

#include "berkline/rational.hpp"

namespace berkline {

/// Dense univariate polynomial over Q, constant term first. Trailing zero
/// coefficients are trimmed, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rat> coeffs);
  Polynomial(std::initializer_list<long> coeffs);

  static Polynomial constant(Rat c);
  /// The monomial c*T^k.
  static Polynomial monomial(Rat c, std::size_t k);
  /// T - a.
  static Polynomial linear_root(const Rat& a);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rat>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of T^k (zero past the end).
  Rat coeff(std::size_t k) const;
  const Rat& leading() const { return coeffs_.back(); }

  Rat operator()(const Rat& x) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rat& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rat& s) { return a *= s; }
  friend Polynomial operator*(const Rat& s, Polynomial a) { return a *= s; }
  Polynomial operator-() const;
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial pow(unsigned e) const;
  /// g(T + a).
  Polynomial shifted(const Rat& a) const;
  /// g(s*T).
  Polynomial scaled(const Rat& s) const;
  /// g(h(T)).
  Polynomial compose(const Polynomial& h) const;
  Polynomial derivative() const;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

/// Quotient and remainder of Euclidean division; divisor must be nonzero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Monic gcd (zero if both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Determinant of the Sylvester matrix with both polynomials read at the
/// formal degree `formal_degree` (leading zeros allowed).
Rat formal_resultant(const Polynomial& f, const Polynomial& g, std::size_t formal_degree);
/// The usual resultant Res(f, g) at the true degrees.
Rat resultant(const Polynomial& f, const Polynomial& g);

/// Solves g1*f1 + g2*f2 = Res_formal(f1, f2) with deg g_i <= formal_degree - 1.
/// Requires the formal resultant to be nonzero.
std::pair<Polynomial, Polynomial> resultant_cofactors(const Polynomial& f1, const Polynomial& f2,
                                                      std::size_t formal_degree);

/// Smallest ord_p over the nonzero coefficients; requires a nonzero polynomial.
long min_coeff_ord(const Polynomial& g, unsigned long p);

}  // namespace berkline
