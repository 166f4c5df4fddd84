#include "berkline/kernels.hpp"

#include <optional>

#include "berkline/error.hpp"

namespace berkline {

namespace {

// Depth below infinity: rexp for discs, nullopt (+inf) for finite type I points.
std::optional<ValExp> depth(const BerkPoint& x) {
  if (x.is_disc()) return x.rexp();
  return std::nullopt;
}

bool deeper(const std::optional<ValExp>& a, const std::optional<ValExp>& b) {
  if (!a) return static_cast<bool>(b);
  return b && *a > *b;
}

}  // namespace

BerkPoint meet_inf(const BerkPoint& x, const BerkPoint& y) {
  if (x.is_infinity() || y.is_infinity()) {
    throw Error(Errc::invalid_argument, "meet_inf needs points other than infinity");
  }
  std::optional<ValExp> m = depth(x);
  const auto dy = depth(y);
  if (deeper(m, dy)) m = dy;
  const Rat diff = x.center() - y.center();
  if (sgn(diff) != 0) {
    const ValExp od(ord_nonzero(diff, x.prime().p()));
    if (!m || od < *m) m = od;
  }
  if (!m) return x;
  if (x.is_disc() && x.rexp() == *m) return x;
  return BerkPoint::disc(x.center(), *m, x.prime());
}

BerkPoint median(const BerkPoint& x, const BerkPoint& y, const BerkPoint& z) {
  if (x.is_infinity()) return y.is_infinity() || z.is_infinity() ? x : meet_inf(y, z);
  if (y.is_infinity()) return z.is_infinity() ? y : meet_inf(x, z);
  if (z.is_infinity()) return meet_inf(x, y);
  // Two of the pairwise meets coincide; the median is the deepest of the three.
  BerkPoint best = meet_inf(x, y);
  for (BerkPoint m : {meet_inf(x, z), meet_inf(y, z)}) {
    if (deeper(depth(m), depth(best))) best = std::move(m);
  }
  return best;
}

KernelValue path_distance(const BerkPoint& x, const BerkPoint& y) {
  if (x == y) return KernelValue(0);
  if (x.is_type_i() || y.is_type_i()) return KernelValue::plus_infinity();
  const ValExp m = meet_inf(x, y).rexp();
  return KernelValue((x.rexp() - m) + (y.rexp() - m));
}

KernelValue j_kernel(const BerkPoint& x, const BerkPoint& y, const BerkPoint& z) {
  return path_distance(z, median(x, y, z));
}

KernelValue spherical_log(const BerkPoint& x, const BerkPoint& y) {
  return j_kernel(x, y, BerkPoint::gauss(x.prime()));
}

KernelValue hsia_log(const BerkPoint& x, const BerkPoint& y, const BerkPoint& zeta) {
  if (zeta.is_infinity()) {
    if (x.is_infinity() || y.is_infinity()) return KernelValue::minus_infinity();
    const BerkPoint w = meet_inf(x, y);
    if (w.is_type_i()) return KernelValue::plus_infinity();
    return KernelValue(w.rexp());
  }
  if (zeta.is_type_i() && (x == zeta || y == zeta)) return KernelValue::minus_infinity();
  const BerkPoint w = median(x, y, zeta);
  if (w.is_type_i()) return KernelValue::plus_infinity();
  // diam_zeta(w) = j0(w, w) - 2 j0(w, zeta) with j0 relative to the Gauss point.
  const BerkPoint gauss = BerkPoint::gauss(w.prime());
  const KernelValue self = path_distance(gauss, w);
  const KernelValue toward = path_distance(gauss, median(w, zeta, gauss));
  return self - ValExp(2) * toward;
}

KernelValue diam(const BerkPoint& x, const BerkPoint& zeta) { return hsia_log(x, x, zeta); }

}  // namespace berkline
