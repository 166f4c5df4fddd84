#pragma once

#include <optional>
#include <vector>

#include "berkline/capacity.hpp"
#include "berkline/kernel_value.hpp"
#include "berkline/linalg.hpp"
#include "berkline/point.hpp"

namespace berkline {

/// f(x) = c0 + sum_i c_i hsia_log(x, x_i; z): the harmonic function on the
/// simple domain cut out by the boundary points x_i.
struct HarmonicSolution {
  std::vector<BerkPoint> boundary;
  BerkPoint z;
  /// c0, c1, ..., cm.
  std::vector<ValExp> coefficients;
};

/// The bordered matrix with a zero corner, ones on the border and
/// hsia_log(x_i, x_j; z) inside. Requires z off the boundary.
Matrix<ValExp> cantor_matrix(const std::vector<BerkPoint>& boundary, const BerkPoint& z);

/// Harmonic function with the given boundary values. z defaults to the
/// Gauss point. Throws invalid_argument for an empty, repeated or type I
/// boundary, or z on it; SINGULAR_SYSTEM should never happen.
HarmonicSolution solve_dirichlet(const std::vector<BerkPoint>& boundary, const std::vector<ValExp>& values,
                                 const std::optional<BerkPoint>& z = std::nullopt);

/// At x = z (type I) this is the limit value c0.
ValExp evaluate_harmonic(const HarmonicSolution& sol, const BerkPoint& x);

/// Harmonic measures h_i(z) of the boundary points seen from z.
std::vector<ValExp> harmonic_measures(const std::vector<BerkPoint>& boundary, const BerkPoint& z);

/// Green's function V - u(z) of E with pole zeta; +inf at a type I pole.
KernelValue green_function(const DiscUnion& e, const BerkPoint& zeta, const BerkPoint& z);

}  // namespace berkline
