#pragma once

#include "berkline/kernel_value.hpp"
#include "berkline/point.hpp"

namespace berkline {

/// Where the paths from x and y to infinity first meet. Neither may be infinity.
BerkPoint meet_inf(const BerkPoint& x, const BerkPoint& y);

/// The unique point on all three of the paths [x,y], [y,z], [x,z].
BerkPoint median(const BerkPoint& x, const BerkPoint& y, const BerkPoint& z);

/// Where the paths from x and y to zeta first meet.
inline BerkPoint meet_wrt(const BerkPoint& x, const BerkPoint& y, const BerkPoint& zeta) {
  return median(x, y, zeta);
}

/// Path distance; +inf when the points differ and one is type I.
KernelValue path_distance(const BerkPoint& x, const BerkPoint& y);

/// j_z(x, y): distance from z to the meet of x and y relative to z.
KernelValue j_kernel(const BerkPoint& x, const BerkPoint& y, const BerkPoint& z);

/// -log_p of the spherical kernel; j relative to the Gauss point.
KernelValue spherical_log(const BerkPoint& x, const BerkPoint& y);

/// -log_p of the generalized Hsia kernel with pole zeta.
KernelValue hsia_log(const BerkPoint& x, const BerkPoint& y, const BerkPoint& zeta);

/// hsia_log(x, x; zeta).
KernelValue diam(const BerkPoint& x, const BerkPoint& zeta);

}  // namespace berkline
