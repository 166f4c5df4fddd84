#include "berkline/valexp.hpp"

#include <cmath>

#include "berkline/error.hpp"

namespace berkline {

int ValExp::sign() const {
  const int a = sgn(rat_);
  const int b = sgn(sqrt2_);
  if (b == 0) return a;
  if (a == 0 || a == b) return b;
  // Opposite signs: compare a^2 against 2 b^2.
  const Rat lhs = rat_ * rat_;
  const Rat rhs = 2 * sqrt2_ * sqrt2_;
  return lhs > rhs ? a : b;
}

double ValExp::to_double() const {
  return rat_.get_d() + sqrt2_.get_d() * std::sqrt(2.0);
}

ValExp& ValExp::operator+=(const ValExp& o) {
  rat_ += o.rat_;
  sqrt2_ += o.sqrt2_;
  return *this;
}

ValExp& ValExp::operator-=(const ValExp& o) {
  rat_ -= o.rat_;
  sqrt2_ -= o.sqrt2_;
  return *this;
}

ValExp& ValExp::operator*=(const ValExp& o) {
  if (o.is_rational()) {
    rat_ *= o.rat_;
    sqrt2_ *= o.rat_;
    return *this;
  }
  Rat r = rat_ * o.rat_ + 2 * sqrt2_ * o.sqrt2_;
  Rat s = rat_ * o.sqrt2_ + sqrt2_ * o.rat_;
  rat_ = std::move(r);
  sqrt2_ = std::move(s);
  return *this;
}

ValExp& ValExp::operator/=(const ValExp& o) {
  if (o.is_zero()) throw Error(Errc::invalid_argument, "division by zero in Q(sqrt2)");
  if (o.is_rational()) {
    rat_ /= o.rat_;
    sqrt2_ /= o.rat_;
    return *this;
  }
  // (a + b r)/(c + d r) = (a + b r)(c - d r)/(c^2 - 2 d^2), r = sqrt 2.
  const Rat norm = o.rat_ * o.rat_ - 2 * o.sqrt2_ * o.sqrt2_;
  Rat r = (rat_ * o.rat_ - 2 * sqrt2_ * o.sqrt2_) / norm;
  Rat s = (sqrt2_ * o.rat_ - rat_ * o.sqrt2_) / norm;
  rat_ = std::move(r);
  sqrt2_ = std::move(s);
  return *this;
}

std::strong_ordering operator<=>(const ValExp& a, const ValExp& b) {
  if (a.is_rational() && b.is_rational()) {
    const int c = cmp(a.rat_, b.rat_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  const int s = (a - b).sign();
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

long floor(const ValExp& v) {
  if (v.is_rational()) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), v.rat_part().get_num_mpz_t(), v.rat_part().get_den_mpz_t());
    return q.get_si();
  }
  // Float guess, then exact correction.
  long n = static_cast<long>(std::floor(v.to_double()));
  while (ValExp(n) > v) --n;
  while (ValExp(n + 1) <= v) ++n;
  return n;
}

long ceil(const ValExp& v) { return -floor(-v); }

std::strong_ordering valexp_cmp(const ValExp& a, const ValExp& b) { return a <=> b; }

std::string to_string(const ValExp& v) {
  if (v.is_rational()) return to_string(v.rat_part());
  std::string s2 = to_string(v.sqrt2_part()) + "*sqrt2";
  if (sgn(v.rat_part()) == 0) return s2;
  if (sgn(v.sqrt2_part()) > 0) return to_string(v.rat_part()) + "+" + s2;
  return to_string(v.rat_part()) + s2;
}

ValExp parse_valexp(std::string_view text) {
  const auto pos = text.find("sqrt2");
  if (pos == std::string_view::npos) return ValExp(parse_rat(text));
  if (pos + 5 != text.size()) throw Error(Errc::schema, "trailing text after sqrt2");
  // Split "a+b*sqrt2" / "a-b*sqrt2" / "b*sqrt2" at the last sign before the sqrt2 coefficient.
  auto head = text.substr(0, pos);
  if (!head.empty() && head.back() == '*') head.remove_suffix(1);
  std::size_t split = std::string_view::npos;
  for (std::size_t i = head.size(); i-- > 1;) {
    if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/') {
      split = i;
      break;
    }
  }
  const auto coeff = [](std::string_view c) {
    if (c.empty() || c == "+") return Rat(1);
    if (c == "-") return Rat(-1);
    return parse_rat(c);
  };
  if (split == std::string_view::npos) return ValExp(Rat(0), coeff(head));
  return ValExp(parse_rat(head.substr(0, split)), coeff(head.substr(split)));
}

}  // namespace berkline
