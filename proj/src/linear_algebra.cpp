#include "wreath/linear_algebra.hpp"

namespace wreath {

std::optional<std::vector<Rational>> solve_linear(Matrix a, std::vector<Rational> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;
  std::vector<Rational> x(cols, 0);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return x;
}

std::optional<Matrix> invert(const Matrix& a) {
  const std::size_t n = a.size();
  Matrix inv(n, std::vector<Rational>(n, 0));
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<Rational> e(n, 0);
    e[col] = 1;
    auto x = solve_linear(a, e);
    if (!x) return std::nullopt;
    // A singular matrix can still give a particular solution; check uniqueness.
    for (std::size_t i = 0; i < n; ++i) inv[i][col] = (*x)[i];
  }
  // Verify A * inv = I, which fails exactly when A is singular.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < n; ++k) s += a[i][k] * inv[k][j];
      if (s != (i == j ? 1 : 0)) return std::nullopt;
    }
  return inv;
}

}  // namespace wreath
