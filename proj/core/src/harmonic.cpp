#include "berkline/harmonic.hpp"

#include "berkline/error.hpp"
#include "berkline/kernels.hpp"

namespace berkline {

namespace {

void check_boundary(const std::vector<BerkPoint>& boundary, const BerkPoint& z) {
  if (boundary.empty()) throw Error(Errc::invalid_argument, "a harmonic function on the whole line is constant");
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    if (boundary[i].is_type_i()) throw Error(Errc::invalid_argument, "type I boundary point");
    if (boundary[i] == z) throw Error(Errc::invalid_argument, "auxiliary point on the boundary");
    for (std::size_t j = 0; j < i; ++j) {
      if (boundary[i] == boundary[j]) throw Error(Errc::invalid_argument, "repeated boundary point");
    }
  }
}

}  // namespace

Matrix<ValExp> cantor_matrix(const std::vector<BerkPoint>& boundary, const BerkPoint& z) {
  check_boundary(boundary, z);
  const std::size_t m = boundary.size();
  Matrix<ValExp> mat(m + 1, m + 1);
  for (std::size_t i = 1; i <= m; ++i) {
    mat(0, i) = ValExp(1);
    mat(i, 0) = ValExp(1);
    for (std::size_t j = i; j <= m; ++j) {
      mat(i, j) = hsia_log(boundary[i - 1], boundary[j - 1], z).value();
      mat(j, i) = mat(i, j);
    }
  }
  return mat;
}

HarmonicSolution solve_dirichlet(const std::vector<BerkPoint>& boundary, const std::vector<ValExp>& values,
                                 const std::optional<BerkPoint>& z) {
  if (boundary.empty()) throw Error(Errc::invalid_argument, "a harmonic function on the whole line is constant");
  if (values.size() != boundary.size()) throw Error(Errc::invalid_argument, "one value per boundary point");
  const BerkPoint aux = z ? *z : BerkPoint::gauss(boundary.front().prime());
  check_boundary(boundary, aux);
  const std::size_t m = boundary.size();
  HarmonicSolution sol{boundary, aux, std::vector<ValExp>(m + 1, ValExp(0))};
  if (m == 1) {
    sol.coefficients[0] = values[0];
    return sol;
  }
  std::vector<ValExp> rhs(m + 1, ValExp(0));
  for (std::size_t i = 0; i < m; ++i) rhs[i + 1] = values[i];
  auto c = solve(cantor_matrix(boundary, aux), rhs);
  if (!c) throw Error(Errc::singular_system, "Cantor matrix");
  sol.coefficients = std::move(*c);
  return sol;
}

ValExp evaluate_harmonic(const HarmonicSolution& sol, const BerkPoint& x) {
  if (x.is_type_i() && x == sol.z) return sol.coefficients[0];
  ValExp f = sol.coefficients[0];
  for (std::size_t i = 0; i < sol.boundary.size(); ++i) {
    if (sol.coefficients[i + 1].is_zero()) continue;
    f += sol.coefficients[i + 1] * hsia_log(x, sol.boundary[i], sol.z).value();
  }
  return f;
}

std::vector<ValExp> harmonic_measures(const std::vector<BerkPoint>& boundary, const BerkPoint& z) {
  check_boundary(boundary, z);
  const std::size_t m = boundary.size();
  if (m == 1) return {ValExp(1)};
  const Matrix<ValExp> mat = cantor_matrix(boundary, z);
  std::vector<ValExp> out;
  out.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<ValExp> rhs(m + 1, ValExp(0));
    rhs[i + 1] = ValExp(1);
    auto c = solve(mat, rhs);
    if (!c) throw Error(Errc::singular_system, "Cantor matrix");
    out.push_back((*c)[0]);
  }
  return out;
}

KernelValue green_function(const DiscUnion& e, const BerkPoint& zeta, const BerkPoint& z) {
  const EquilibriumResult eq = equilibrium(e, zeta);
  return KernelValue(eq.robin) - potential(eq.measure, z, zeta);
}

}  // namespace berkline
