#pragma once

// Test-side reference computations. Everything here is dense and naive on
// purpose, and shares no code with the library.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "excol/exactlin/field.hpp"
#include "excol/exactlin/sparse_matrix.hpp"

namespace oracle {

using Dense = std::vector<std::vector<mpq_class>>;

inline Dense zeros(std::size_t r, std::size_t c) { return Dense(r, std::vector<mpq_class>(c, 0)); }

// Row reduction in place; returns the rank.
inline std::size_t eliminate(Dense& m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const mpq_class f = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

inline std::size_t rank(Dense m) { return eliminate(m); }

// Rank over GF(p) of an integer matrix.
inline std::size_t rank_mod(const std::vector<std::vector<long>>& a, long p) {
  std::vector<std::vector<long>> m = a;
  for (auto& row : m)
    for (auto& x : row) x = ((x % p) + p) % p;
  auto inv = [p](long x) {
    long r = 1, e = p - 2, b = x;
    while (e > 0) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    const long iv = inv(m[rank][c]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const long f = m[r][c] * iv % p;
      for (std::size_t j = c; j < cols; ++j) m[r][j] = ((m[r][j] - f * m[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

// Determinant by cofactor expansion.
inline mpq_class det(const Dense& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  mpq_class out = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    Dense minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<mpq_class> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[r][j]);
      minor.push_back(row);
    }
    out += ((c % 2 == 0) ? 1 : -1) * m[0][c] * det(minor);
  }
  return out;
}

// Largest k with a nonzero k x k minor.
inline std::size_t minor_rank(const Dense& m) {
  const std::size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
  for (std::size_t k = std::min(rows, cols); k > 0; --k) {
    std::vector<bool> rsel(rows, false), csel(cols, false);
    std::fill(rsel.begin(), rsel.begin() + k, true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + k, true);
      do {
        Dense sub;
        for (std::size_t r = 0; r < rows; ++r) {
          if (!rsel[r]) continue;
          std::vector<mpq_class> row;
          for (std::size_t c = 0; c < cols; ++c)
            if (csel[c]) row.push_back(m[r][c]);
          sub.push_back(row);
        }
        if (det(sub) != 0) return k;
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
  }
  return 0;
}

// Basis of the null space {v : m v = 0}.
inline std::vector<std::vector<mpq_class>> null_space(Dense m, std::size_t cols) {
  eliminate(m);
  std::vector<std::size_t> pivot_of_row;
  std::vector<bool> is_pivot(cols, false);
  for (const auto& row : m) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (row[c] != 0) {
        pivot_of_row.push_back(c);
        is_pivot[c] = true;
        break;
      }
    }
  }
  std::vector<std::vector<mpq_class>> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<mpq_class> v(cols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < pivot_of_row.size(); ++r) {
      const std::size_t c = pivot_of_row[r];
      v[c] = -m[r][f] / m[r][c];
    }
    out.push_back(v);
  }
  return out;
}

inline Dense to_dense(const excol::lin::SparseMatrix<excol::lin::Rationals>& a) {
  Dense out = zeros(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (const auto& [c, v] : a.row(r)) out[r][c] = v;
  return out;
}

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// dim of degree-d polynomials in v variables.
inline std::size_t sym_dim(int v, int d) { return d < 0 ? 0 : binomial(static_cast<std::size_t>(d + v - 1), v - 1); }

}  // namespace oracle
