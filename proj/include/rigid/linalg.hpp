#pragma once

#include <utility>
#include <vector>

#include "rigid/errors.hpp"
#include "rigid/numeric.hpp"

namespace rigid {

using VecQ = std::vector<Rat>;
using MatQ = std::vector<VecQ>;
using VecZ = std::vector<Int>;
using MatZ = std::vector<VecZ>;

namespace detail {

// Fraction-free Bareiss elimination, in place. Returns the pivot column for
// each pivot row; rows below the returned rank are zero.
inline std::vector<int> bareiss_echelon(MatZ& m) {
  std::vector<int> pivot_cols;
  if (m.empty()) return pivot_cols;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  Int prev(1);
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (m[static_cast<size_t>(i)][static_cast<size_t>(c)] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r) std::swap(m[static_cast<size_t>(sel)], m[static_cast<size_t>(r)]);
    const Int piv = m[static_cast<size_t>(r)][static_cast<size_t>(c)];
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        Int t = piv * m[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                m[static_cast<size_t>(i)][static_cast<size_t>(c)] * m[static_cast<size_t>(r)][static_cast<size_t>(j)];
        m[static_cast<size_t>(i)][static_cast<size_t>(j)] = divexact(t, prev);
      }
      m[static_cast<size_t>(i)][static_cast<size_t>(c)] = 0;
    }
    prev = piv;
    pivot_cols.push_back(c);
    ++r;
  }
  return pivot_cols;
}

inline MatZ clear_denominators(const MatQ& m) {
  MatZ out(m.size());
  for (size_t i = 0; i < m.size(); ++i) {
    Int d(1);
    for (const auto& x : m[i]) d = lcm(d, den(x));
    out[i].reserve(m[i].size());
    for (const auto& x : m[i]) out[i].push_back(num(x) * divexact(d, den(x)));
  }
  return out;
}

}  // namespace detail

inline int rank(const MatQ& m) {
  if (m.empty()) return 0;
  MatZ z = detail::clear_denominators(m);
  return static_cast<int>(detail::bareiss_echelon(z).size());
}

// Basis of the right kernel by fraction-free elimination; one basis vector
// per free column, taken in increasing column order with the free coordinate
// set to 1.
inline std::vector<VecQ> kernel_basis(const MatQ& m, int cols) {
  if (cols < 1) throw Error(Errc::parse_error, "kernel_basis requires at least one column");
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != cols)
      throw Error(Errc::parse_error, "kernel_basis: ragged matrix");
  MatZ z = detail::clear_denominators(m);
  std::vector<int> pivots = detail::bareiss_echelon(z);
  std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
  for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<VecQ> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    VecQ v(static_cast<size_t>(cols), Rat(0));
    v[static_cast<size_t>(f)] = 1;
    // Back-substitute through the pivot rows, bottom-up.
    for (int r = static_cast<int>(pivots.size()) - 1; r >= 0; --r) {
      int pc = pivots[static_cast<size_t>(r)];
      Rat acc(0);
      for (int j = pc + 1; j < cols; ++j)
        if (z[static_cast<size_t>(r)][static_cast<size_t>(j)] != 0)
          acc += Rat(z[static_cast<size_t>(r)][static_cast<size_t>(j)]) * v[static_cast<size_t>(j)];
      v[static_cast<size_t>(pc)] = -acc / Rat(z[static_cast<size_t>(r)][static_cast<size_t>(pc)]);
    }
    basis.push_back(std::move(v));
  }
  // Exactness guard: every basis vector must annihilate every row.
  for (const auto& v : basis)
    for (const auto& row : m) {
      Rat acc(0);
      for (int j = 0; j < cols; ++j) acc += row[static_cast<size_t>(j)] * v[static_cast<size_t>(j)];
      if (acc != 0) throw Error(Errc::parse_error, "kernel_basis: internal elimination error");
    }
  return basis;
}

// Determinant of a square integer matrix (Bareiss: the last pivot).
inline Int determinant(MatZ m) {
  const size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw Error(Errc::parse_error, "determinant: not square");
  if (n == 0) return Int(1);
  int swaps = 0;
  Int prev(1);
  for (size_t r = 0; r < n; ++r) {
    size_t sel = r;
    while (sel < n && m[sel][r] == 0) ++sel;
    if (sel == n) return Int(0);
    if (sel != r) {
      std::swap(m[sel], m[r]);
      ++swaps;
    }
    const Int piv = m[r][r];
    for (size_t i = r + 1; i < n; ++i) {
      for (size_t j = r + 1; j < n; ++j)
        m[i][j] = divexact(piv * m[i][j] - m[i][r] * m[r][j], prev);
      m[i][r] = 0;
    }
    prev = piv;
  }
  Int d = m[n - 1][n - 1];
  return swaps % 2 == 0 ? d : Int(-d);
}

// Solves a square nonsingular rational system exactly.
inline VecQ solve_square(const MatQ& a, const VecQ& rhs) {
  const int n = static_cast<int>(a.size());
  MatQ aug(a);
  for (int i = 0; i < n; ++i) aug[static_cast<size_t>(i)].push_back(-rhs[static_cast<size_t>(i)]);
  auto basis = kernel_basis(aug, n + 1);
  if (basis.size() != 1 || basis[0][static_cast<size_t>(n)] == 0)
    throw Error(Errc::parse_error, "solve_square: singular system");
  VecQ x(static_cast<size_t>(n));
  Rat scale = Rat(1) / basis[0][static_cast<size_t>(n)];
  for (int i = 0; i < n; ++i) x[static_cast<size_t>(i)] = basis[0][static_cast<size_t>(i)] * scale;
  return x;
}

}  // namespace rigid
