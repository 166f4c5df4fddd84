#include "berkline/finite_field.hpp"

#include <algorithm>

#include "berkline/error.hpp"

namespace berkline::fp {

Field::Field(std::uint64_t p) : p_(p) {
  if (p < 2) throw Error(Errc::invalid_argument, "field characteristic must be prime");
}

std::uint64_t Field::mul(std::uint64_t a, std::uint64_t b) const {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
}

std::uint64_t Field::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1 % p_;
  a %= p_;
  while (e > 0) {
    if (e & 1U) r = mul(r, a);
    a = mul(a, a);
    e >>= 1U;
  }
  return r;
}

std::uint64_t Field::inv(std::uint64_t a) const {
  if (a % p_ == 0) throw Error(Errc::invalid_argument, "inverse of zero in F_p");
  return pow(a, p_ - 2);
}

Poly Field::trim(Poly f) const {
  while (!f.c.empty() && f.c.back() == 0) f.c.pop_back();
  return f;
}

Poly Field::add(const Poly& a, const Poly& b) const {
  Poly r;
  r.c.assign(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = add(r.c[i], b.c[i]);
  return trim(std::move(r));
}

Poly Field::sub(const Poly& a, const Poly& b) const {
  Poly r;
  r.c.assign(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = sub(r.c[i], b.c[i]);
  return trim(std::move(r));
}

Poly Field::mul(const Poly& a, const Poly& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  Poly r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = add(r.c[i + j], mul(a.c[i], b.c[j]));
  }
  return trim(std::move(r));
}

std::pair<Poly, Poly> Field::divmod(const Poly& a, const Poly& b) const {
  if (b.is_zero()) throw Error(Errc::invalid_argument, "division by zero polynomial over F_p");
  Poly rem = a;
  if (a.degree() < b.degree()) return {Poly{}, rem};
  const std::uint64_t lead_inv = inv(b.c.back());
  const long db = b.degree();
  Poly q;
  q.c.assign(static_cast<std::size_t>(a.degree() - db + 1), 0);
  for (long k = a.degree() - db; k >= 0; --k) {
    const std::uint64_t f = mul(rem.c[static_cast<std::size_t>(k + db)], lead_inv);
    q.c[static_cast<std::size_t>(k)] = f;
    if (f == 0) continue;
    for (long j = 0; j <= db; ++j) {
      auto& slot = rem.c[static_cast<std::size_t>(k + j)];
      slot = sub(slot, mul(f, b.c[static_cast<std::size_t>(j)]));
    }
  }
  return {trim(std::move(q)), trim(std::move(rem))};
}

Poly Field::monic(const Poly& a) const {
  if (a.is_zero()) return a;
  const std::uint64_t li = inv(a.c.back());
  Poly r = a;
  for (auto& x : r.c) x = mul(x, li);
  return r;
}

Poly Field::gcd(Poly a, Poly b) const {
  while (!b.is_zero()) {
    Poly r = mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

Poly Field::derivative(const Poly& a) const {
  if (a.c.size() <= 1) return {};
  Poly r;
  r.c.resize(a.c.size() - 1);
  for (std::size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = mul(a.c[i], i % p_);
  return trim(std::move(r));
}

Poly Field::powmod(Poly base, std::uint64_t e, const Poly& m) const {
  Poly r = mod(Poly{{1}}, m);
  base = mod(base, m);
  while (e > 0) {
    if (e & 1U) r = mod(mul(r, base), m);
    e >>= 1U;
    if (e > 0) base = mod(mul(base, base), m);
  }
  return r;
}

Poly Field::reduce(const Polynomial& g) const {
  Poly r;
  r.c.reserve(g.coeffs().size());
  const Integer pz(static_cast<unsigned long>(p_));
  for (const auto& q : g.coeffs()) {
    if (sgn(q) == 0) {
      r.c.push_back(0);
      continue;
    }
    if (ord_nonzero(q, p_) < 0) throw Error(Errc::invalid_argument, "reduction of a non-integral polynomial");
    Integer num = q.get_num() % pz;
    if (num < 0) num += pz;
    Integer den = q.get_den() % pz;
    r.c.push_back(mul(num.get_ui(), inv(den.get_ui())));
  }
  return trim(std::move(r));
}

std::vector<std::pair<Poly, int>> Field::squarefree(const Poly& f) const {
  std::vector<std::pair<Poly, int>> out;
  const Poly one{{1}};
  Poly c = gcd(f, derivative(f));
  Poly w = divmod(f, c).first;
  int i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly fac = divmod(w, y).first;
    if (fac.degree() > 0) out.emplace_back(monic(fac), i);
    w = std::move(y);
    c = divmod(c, w).first;
    ++i;
  }
  if (c.degree() > 0) {
    // c is a p-th power; over F_p its p-th root just drops to every p-th coefficient.
    Poly root;
    for (std::size_t k = 0; k < c.c.size(); k += p_) root.c.push_back(c.c[k]);
    for (auto& [g, e] : squarefree(monic(root))) out.emplace_back(g, e * static_cast<int>(p_));
  }
  return out;
}

std::vector<std::pair<Poly, int>> Field::distinct_degree(Poly f) const {
  std::vector<std::pair<Poly, int>> out;
  const Poly x{{0, 1}};
  Poly h = x;
  int i = 1;
  while (f.degree() >= 2L * i) {
    h = powmod(h, p_, f);
    Poly g = gcd(f, sub(h, x));
    if (g.degree() > 0) {
      out.emplace_back(g, i);
      f = divmod(f, g).first;
      h = mod(h, f);
    }
    ++i;
  }
  if (f.degree() > 0) out.emplace_back(monic(f), static_cast<int>(f.degree()));
  return out;
}

void Field::equal_degree(const Poly& f, int d, std::vector<Poly>& out, std::mt19937_64& rng) const {
  if (f.degree() == d) {
    out.push_back(monic(f));
    return;
  }
  std::uniform_int_distribution<std::uint64_t> coin(0, p_ - 1);
  for (;;) {
    Poly a;
    a.c.resize(static_cast<std::size_t>(f.degree()));
    for (auto& x : a.c) x = coin(rng);
    a = trim(std::move(a));
    if (a.degree() < 1) continue;
    Poly g = gcd(f, a);
    if (g.degree() <= 0) {
      Poly s;
      if (p_ == 2) {
        // Trace map a + a^2 + ... + a^(2^(d-1)).
        Poly term = mod(a, f);
        s = term;
        for (int k = 1; k < d; ++k) {
          term = mod(mul(term, term), f);
          s = add(s, term);
        }
      } else {
        // a^((p^d - 1)/2) as (a * a^p * ... * a^(p^(d-1)))^((p - 1)/2).
        Poly term = mod(a, f);
        Poly norm = term;
        for (int k = 1; k < d; ++k) {
          term = powmod(term, p_, f);
          norm = mod(mul(norm, term), f);
        }
        s = sub(powmod(norm, (p_ - 1) / 2, f), Poly{{1}});
      }
      g = gcd(f, s);
    }
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, out, rng);
      equal_degree(divmod(f, g).first, d, out, rng);
      return;
    }
  }
}

std::vector<std::pair<Poly, int>> Field::factor(const Poly& f) const {
  if (f.is_zero()) throw Error(Errc::invalid_argument, "factorization of the zero polynomial");
  std::vector<std::pair<Poly, int>> out;
  if (f.degree() == 0) return out;
  std::mt19937_64 rng(0x5eedULL + p_);
  for (const auto& [sqf, mult] : squarefree(monic(f))) {
    for (const auto& [block, d] : distinct_degree(sqf)) {
      std::vector<Poly> pieces;
      equal_degree(block, d, pieces, rng);
      for (auto& piece : pieces) out.emplace_back(std::move(piece), mult);
    }
  }
  // A factor can come out of the squarefree pass twice (e.g. exponent p + 1).
  std::sort(out.begin(), out.end());
  std::vector<std::pair<Poly, int>> merged;
  for (auto& [g, e] : out) {
    if (!merged.empty() && merged.back().first == g) {
      merged.back().second += e;
    } else {
      merged.emplace_back(std::move(g), e);
    }
  }
  return merged;
}

}  // namespace berkline::fp
