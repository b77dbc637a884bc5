#pragma once

// Exact Gauss-Jordan elimination over a field (Scalar or GaussRational).

#include "e2v/scalar.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace e2v {

template <class K>
using Matrix = std::vector<std::vector<K>>;

/// x = particular + sum t_i * directions[i]; empty when the system is inconsistent.
template <class K>
struct AffineSolution {
  bool consistent = false;
  std::vector<K> particular;
  std::vector<std::vector<K>> directions;

  std::size_t dimension() const { return directions.size(); }
};

namespace detail {

inline std::size_t pivot_cost(const GaussRational& c) { return c.is_real() ? 0 : 1; }
inline std::size_t pivot_cost(const Scalar& c) {
  if (c.is_constant()) return 0;
  return c.num().terms().size() + c.den().terms().size();
}

// Reduces m (rows x cols) in place; returns pivot column per pivot row.
template <class K>
std::vector<std::size_t> rref(Matrix<K>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::optional<std::size_t> best;
    for (std::size_t r = row; r < m.size(); ++r) {
      if (m[r][col].is_zero()) continue;
      if (!best || pivot_cost(m[r][col]) < pivot_cost(m[*best][col])) best = r;
    }
    if (!best) continue;
    std::swap(m[row], m[*best]);
    K inv = K(1) / m[row][col];
    for (auto& x : m[row])
      if (!x.is_zero()) x = x * inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      K f = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c)
        if (!m[row][c].is_zero()) m[r][c] = m[r][c] - f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

template <class K>
std::size_t rank(Matrix<K> m) {
  if (m.empty()) return 0;
  return detail::rref(m, m.front().size()).size();
}

/// Solves A x = b.
template <class K>
AffineSolution<K> solve_affine(const Matrix<K>& a, const std::vector<K>& b, std::size_t unknowns) {
  Matrix<K> m;
  m.reserve(a.size());
  for (std::size_t r = 0; r < a.size(); ++r) {
    auto row = a[r];
    row.resize(unknowns);
    row.push_back(b[r]);
    m.push_back(std::move(row));
  }
  auto pivots = detail::rref(m, unknowns);
  AffineSolution<K> sol;
  for (std::size_t r = pivots.size(); r < m.size(); ++r)
    if (!m[r][unknowns].is_zero()) return sol;
  sol.consistent = true;
  sol.particular.assign(unknowns, K(0));
  std::vector<bool> is_pivot(unknowns, false);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    sol.particular[pivots[r]] = m[r][unknowns];
    is_pivot[pivots[r]] = true;
  }
  for (std::size_t f = 0; f < unknowns; ++f) {
    if (is_pivot[f]) continue;
    std::vector<K> d(unknowns, K(0));
    d[f] = K(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) d[pivots[r]] = -m[r][f];
    sol.directions.push_back(std::move(d));
  }
  return sol;
}

}  // namespace e2v
