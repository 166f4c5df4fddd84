#include "berkline/polynomial.hpp"

#include <algorithm>
#include <limits>

#include "berkline/error.hpp"
#include "berkline/linalg.hpp"

namespace berkline {

Polynomial::Polynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

Polynomial Polynomial::constant(Rat c) { return Polynomial(std::vector<Rat>{std::move(c)}); }

Polynomial Polynomial::monomial(Rat c, std::size_t k) {
  std::vector<Rat> v(k + 1, Rat(0));
  v[k] = std::move(c);
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear_root(const Rat& a) { return Polynomial(std::vector<Rat>{-a, Rat(1)}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rat Polynomial::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rat(0); }

Rat Polynomial::operator()(const Rat& x) const {
  Rat acc(0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc *= x;
    acc += coeffs_[i];
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rat& s) {
  if (sgn(s) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
  Rat t;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      t = a.coeffs_[i] * b.coeffs_[j];
      out[i + j] += t;
    }
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(Rat(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::shifted(const Rat& a) const {
  // With a = u/v and L clearing denominators, g(T) = f(T + a) has
  // g_j = H_j v^j / (L v^D) where H(U) = sum L f_k v^(D-k) (U + u)^k.
  // The Taylor shift of H by the integer u stays in Z.
  const std::size_t n = coeffs_.size();
  if (n <= 1 || sgn(a) == 0) return *this;
  const std::size_t deg = n - 1;
  Integer lcm(1);
  for (const Rat& c : coeffs_) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  const Integer& u = a.get_num();
  const Integer& v = a.get_den();
  std::vector<Integer> vpow{Integer(1)};
  for (std::size_t k = 0; k < deg; ++k) vpow.push_back(vpow.back() * v);
  std::vector<Integer> h(n);
  for (std::size_t k = 0; k < n; ++k) h[k] = coeffs_[k].get_num() * (lcm / coeffs_[k].get_den()) * vpow[deg - k];
  for (std::size_t i = 0; i < deg; ++i) {
    for (std::size_t j = deg; j-- > i;) mpz_addmul(h[j].get_mpz_t(), u.get_mpz_t(), h[j + 1].get_mpz_t());
  }
  const Integer scale = lcm * vpow[deg];
  std::vector<Rat> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    out[j] = Rat(h[j] * vpow[j], scale);
    out[j].canonicalize();
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::scaled(const Rat& s) const {
  std::vector<Rat> c = coeffs_;
  Rat power(1);
  for (auto& x : c) {
    x *= power;
    power *= s;
  }
  return Polynomial(std::move(c));
}

Polynomial Polynomial::compose(const Polynomial& h) const {
  Polynomial acc;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * h;
    acc += constant(coeffs_[i]);
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rat> c(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(Errc::invalid_argument, "polynomial division by zero");
  std::vector<Rat> rem = a.coeffs();
  const long db = b.degree();
  if (a.degree() < db) return {Polynomial(), a};
  std::vector<Rat> q(static_cast<std::size_t>(a.degree() - db + 1), Rat(0));
  for (long k = a.degree() - db; k >= 0; --k) {
    const Rat f = rem[static_cast<std::size_t>(k + db)] / b.leading();
    q[static_cast<std::size_t>(k)] = f;
    if (sgn(f) == 0) continue;
    for (long j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {Polynomial(std::move(q)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x * (Rat(1) / x.leading());
}

namespace {

Matrix<Rat> sylvester(const Polynomial& f, std::size_t df, const Polynomial& g, std::size_t dg) {
  const std::size_t n = df + dg;
  Matrix<Rat> s(n, n);
  // Column-oriented convention: column c of the first dg columns holds T^c * f.
  for (std::size_t c = 0; c < dg; ++c) {
    for (std::size_t k = 0; k <= df; ++k) s(c + k, c) = f.coeff(k);
  }
  for (std::size_t c = 0; c < df; ++c) {
    for (std::size_t k = 0; k <= dg; ++k) s(c + k, dg + c) = g.coeff(k);
  }
  return s;
}

}  // namespace

Rat formal_resultant(const Polynomial& f, const Polynomial& g, std::size_t formal_degree) {
  return determinant(sylvester(f, formal_degree, g, formal_degree));
}

Rat resultant(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) return Rat(0);
  return determinant(sylvester(f, static_cast<std::size_t>(f.degree()), g,
                               static_cast<std::size_t>(g.degree())));
}

std::pair<Polynomial, Polynomial> resultant_cofactors(const Polynomial& f1, const Polynomial& f2,
                                                      std::size_t formal_degree) {
  const std::size_t d = formal_degree;
  const Matrix<Rat> s = sylvester(f1, d, f2, d);
  const Rat res = determinant(s);
  if (sgn(res) == 0) throw Error(Errc::invalid_argument, "resultant vanishes; polynomials share a root");
  std::vector<Rat> rhs(2 * d, Rat(0));
  rhs[0] = res;
  auto x = solve(s, rhs);
  if (!x) throw Error(Errc::singular_system, "Sylvester system unexpectedly singular");
  std::vector<Rat> g1(x->begin(), x->begin() + static_cast<long>(d));
  std::vector<Rat> g2(x->begin() + static_cast<long>(d), x->end());
  return {Polynomial(std::move(g1)), Polynomial(std::move(g2))};
}

long min_coeff_ord(const Polynomial& g, unsigned long p) {
  long best = std::numeric_limits<long>::max();
  for (const auto& c : g.coeffs()) {
    if (sgn(c) != 0) best = std::min(best, ord_nonzero(c, p));
  }
  return best;
}

}  // namespace berkline
