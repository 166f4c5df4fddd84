#include "berkline/rational.hpp"

#include <cctype>

#include "berkline/error.hpp"

namespace berkline {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw Error(Errc::schema, "not a rational literal: '" + std::string(text) + "'");
  }
  Integer n(std::string(num[0] == '+' ? num.substr(1) : num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw Error(Errc::schema, "zero denominator in '" + std::string(text) + "'");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

PrimeConfig::PrimeConfig(unsigned long p) : p_(p) {
  Integer z(p);
  if (p < 2 || mpz_probab_prime_p(z.get_mpz_t(), 30) == 0) {
    throw Error(Errc::invalid_argument, "p = " + std::to_string(p) + " is not prime");
  }
}

long ord_nonzero(const Integer& x, unsigned long p) {
  if (!mpz_divisible_ui_p(x.get_mpz_t(), p)) return 0;
  Integer t = x;
  long k = 0;
  while (mpz_divisible_ui_p(t.get_mpz_t(), p)) {
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), p);
    ++k;
  }
  return k;
}

long ord_nonzero(const Rat& x, unsigned long p) {
  return ord_nonzero(x.get_num(), p) - ord_nonzero(x.get_den(), p);
}

Valuation ord_p(const Rat& x, const PrimeConfig& cfg) {
  if (sgn(x) == 0) return Valuation::infinity();
  return Valuation(ord_nonzero(x, cfg.p()));
}

Valuation ord_p(const Integer& x, const PrimeConfig& cfg) {
  if (sgn(x) == 0) return Valuation::infinity();
  return Valuation(ord_nonzero(x, cfg.p()));
}

Rat prime_power(unsigned long p, long k) {
  Integer q;
  mpz_ui_pow_ui(q.get_mpz_t(), p, static_cast<unsigned long>(k < 0 ? -k : k));
  if (k >= 0) return Rat(q);
  Rat r(Integer(1), q);
  return r;
}

}  // namespace berkline
