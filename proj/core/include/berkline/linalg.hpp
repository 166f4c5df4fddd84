#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace berkline {

/// Small dense row-major matrix over an exact field (Rat or ValExp).
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

namespace detail {

template <typename T>
bool is_zero(const T& v) {
  return v == T(0);
}

/// Fraction-free (Bareiss) forward elimination on the first `pivot_cols`
/// columns. Returns the sign of the row permutation, or 0 if a pivot is
/// missing (singular leading block).
template <typename T>
int bareiss_forward(Matrix<T>& m, std::size_t pivot_cols) {
  int sign = 1;
  T prev(1);
  const std::size_t n = pivot_cols;
  for (std::size_t k = 0; k < n; ++k) {
    if (is_zero(m(k, k))) {
      std::size_t r = k + 1;
      while (r < m.rows() && is_zero(m(r, k))) ++r;
      if (r == m.rows()) return 0;
      m.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < m.rows(); ++i) {
      for (std::size_t j = k + 1; j < m.cols(); ++j) {
        T v = m(i, j) * m(k, k);
        v -= m(i, k) * m(k, j);
        v /= prev;
        m(i, j) = std::move(v);
      }
      m(i, k) = T(0);
    }
    prev = m(k, k);
  }
  return sign;
}

}  // namespace detail

template <typename T>
T determinant(Matrix<T> m) {
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  const int sign = detail::bareiss_forward(m, n);
  if (sign == 0) return T(0);
  return sign > 0 ? m(n - 1, n - 1) : T(0) - m(n - 1, n - 1);
}

/// Solves m x = b exactly; nullopt when m is singular.
template <typename T>
std::optional<std::vector<T>> solve(const Matrix<T>& m, const std::vector<T>& b) {
  const std::size_t n = m.rows();
  Matrix<T> aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = b[i];
  }
  if (detail::bareiss_forward(aug, n) == 0) return std::nullopt;
  std::vector<T> x(n, T(0));
  for (std::size_t i = n; i-- > 0;) {
    T acc = aug(i, n);
    for (std::size_t j = i + 1; j < n; ++j) acc -= aug(i, j) * x[j];
    acc /= aug(i, i);
    x[i] = std::move(acc);
  }
  return x;
}

}  // namespace berkline
