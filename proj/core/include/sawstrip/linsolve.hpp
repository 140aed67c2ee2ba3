#pragma once

#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

#include "sawstrip/error.hpp"

namespace sawstrip {

template <class Field>
using Matrix = std::vector<std::vector<Field>>;

struct NoSolution {};

// Consistent system with free variables; `particular` sets them all to zero.
template <class Field>
struct UnderDeterminedSolution {
  std::size_t nullspace_dim = 0;
  std::vector<Field> particular;
};

template <class Field>
using LinearSolution =
    std::variant<std::vector<Field>, NoSolution, UnderDeterminedSolution<Field>>;

namespace detail {

inline bool is_zero_value(const auto& x) {
  if constexpr (requires { x.is_zero(); }) {
    return x.is_zero();
  } else {
    return x == 0;
  }
}

}  // namespace detail

// Exact Gauss-Jordan elimination over any field type with +, -, *, / and a
// zero test. A is rows x cols, b has `rows` entries.
template <class Field>
LinearSolution<Field> solve_linear_system(Matrix<Field> a, std::vector<Field> b) {
  const std::size_t rows = a.size();
  if (rows != b.size()) throw Error("dimension mismatch");
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  for (const auto& row : a)
    if (row.size() != cols) throw Error("dimension mismatch");

  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && detail::is_zero_value(a[p][c])) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);

    const Field inv = Field(1) / a[r][c];
    for (std::size_t k = c; k < cols; ++k) a[r][k] = a[r][k] * inv;
    b[r] = b[r] * inv;

    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || detail::is_zero_value(a[i][c])) continue;
      const Field factor = a[i][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] = a[i][k] - factor * a[r][k];
      b[i] = b[i] - factor * b[r];
    }
    pivot_cols.push_back(c);
    ++r;
  }

  for (std::size_t i = r; i < rows; ++i)
    if (!detail::is_zero_value(b[i])) return NoSolution{};

  std::vector<Field> x(cols, Field(0));
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = b[i];

  if (pivot_cols.size() < cols)
    return UnderDeterminedSolution<Field>{cols - pivot_cols.size(), std::move(x)};
  return x;
}

}  // namespace sawstrip
