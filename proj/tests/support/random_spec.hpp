#pragma once

// Hand-rolled generator of validated collection specs: graded polynomial
// "Beilinson-like" categories in a random basis.
//
// Object i sits in polynomial degree d_i (non-decreasing) and is shifted by
// e_i. A(i,j) = S^{d_j-d_i} in degree e_j - e_i, N(i,j) = S^{D+d_i-d_j} in
// degree g + e_i - e_j. All products are polynomial multiplication, which is
// associative, then every space is re-coordinatised by a random invertible
// matrix.

#include <gmpxx.h>

#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "excol/model/collection.hpp"
#include "oracles.hpp"

namespace gen {

struct Params {
  int n = 2;
  int vars = 2;
  std::vector<int> d;  // polynomial degree of each object
  std::vector<int> e;  // cohomological shift of each object
  int top = 2;         // D
  int g = 1;           // degree of the Serre twist part
};

inline std::vector<std::vector<int>> monomials(int vars, int d) {
  std::vector<std::vector<int>> out;
  if (d < 0) return out;
  std::vector<int> cur(vars, 0);
  // Odometer over exponent vectors with total degree d.
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == vars - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int x = left; x >= 0; --x) {
      cur[pos] = x;
      rec(pos + 1, left - x);
    }
  };
  rec(0, d);
  return out;
}

inline Params random_params(std::mt19937& rng, int max_n = 4) {
  auto uni = [&](int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng); };
  Params p;
  p.n = uni(1, max_n);
  p.vars = uni(1, p.n <= 2 ? 3 : 2);
  p.d.push_back(0);
  for (int i = 1; i < p.n; ++i) p.d.push_back(p.d.back() + uni(0, 1));
  p.top = p.d.back() + uni(0, 1);
  if (p.vars == 3) p.top = std::min(p.top, 2);
  for (int i = 0; i < p.n; ++i) p.e.push_back(uni(-1, 1));
  p.g = uni(0, 3);
  return p;
}

// Random invertible matrix: unit lower triangular times a diagonal.
inline oracle::Dense random_invertible(std::mt19937& rng, std::size_t dim) {
  auto uni = [&](int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng); };
  oracle::Dense m = oracle::zeros(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    static const int diag[] = {1, -1, 2, -2, 3};
    const mpq_class dval = diag[uni(0, 4)];
    for (std::size_t j = 0; j < i; ++j) m[i][j] = uni(-1, 1) * dval;
    m[i][i] = dval;
  }
  return m;
}

inline oracle::Dense inverse(const oracle::Dense& m) {
  const std::size_t n = m.size();
  oracle::Dense aug = oracle::zeros(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  oracle::eliminate(aug);
  oracle::Dense out = oracle::zeros(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = aug[i][n + j] / aug[i][i];
  return out;
}

class Builder {
 public:
  Builder(const Params& p, std::mt19937* rng) : p_(p), rng_(rng) {}

  excol::model::CollectionSpec build() {
    excol::model::CollectionSpec s;
    s.n = p_.n;
    s.dim_x = p_.n - 1;
    for (int i = 1; i <= p_.n; ++i) s.objects.push_back({"E" + std::to_string(i), std::nullopt});
    for (int i = 1; i <= p_.n; ++i) {
      for (int j = i + 1; j <= p_.n; ++j) {
        const auto dim = oracle::sym_dim(p_.vars, a_poly(i, j));
        if (dim > 0) s.A[{i, j}][a_deg(i, j)] = dim;
      }
      for (int j = i; j <= p_.n; ++j) {
        const auto dim = oracle::sym_dim(p_.vars, n_poly(i, j));
        if (dim > 0) s.N[{i, j}][n_deg(i, j)] = dim;
      }
    }
    for (int i = 1; i <= p_.n; ++i)
      for (int j = i + 1; j <= p_.n; ++j)
        for (int l = j + 1; l <= p_.n; ++l)
          add(s, "AA", {i, j, l}, space('A', i, j), space('A', j, l), space('A', i, l), a_deg(i, j), a_deg(j, l));
    for (int j1 = 1; j1 <= p_.n; ++j1)
      for (int j2 = j1 + 1; j2 <= p_.n; ++j2)
        for (int i = 1; i <= j1; ++i)
          add(s, "AN", {j1, j2, i}, space('A', j1, j2), space('N', i, j2), space('N', i, j1), a_deg(j1, j2),
              n_deg(i, j2));
    for (int j = 1; j <= p_.n; ++j)
      for (int i1 = 1; i1 <= j; ++i1)
        for (int i2 = i1 + 1; i2 <= j; ++i2)
          add(s, "NA", {j, i1, i2}, space('N', i1, j), space('A', i1, i2), space('N', i2, j), n_deg(i1, j),
              a_deg(i1, i2));
    excol::model::canonicalize(s);
    return s;
  }

 private:
  struct Space {
    int poly = -1;
    oracle::Dense basis, inv;  // new basis vector k = sum_l basis[l][k] old_l
  };

  int a_poly(int i, int j) const { return p_.d[j - 1] - p_.d[i - 1]; }
  int n_poly(int i, int j) const { return p_.top + p_.d[i - 1] - p_.d[j - 1]; }
  int a_deg(int i, int j) const { return p_.e[j - 1] - p_.e[i - 1]; }
  int n_deg(int i, int j) const { return p_.g + p_.e[i - 1] - p_.e[j - 1]; }

  const Space& space(char letter, int i, int j) {
    auto key = std::make_tuple(letter, i, j);
    auto it = spaces_.find(key);
    if (it != spaces_.end()) return it->second;
    Space sp;
    sp.poly = letter == 'A' ? a_poly(i, j) : n_poly(i, j);
    const auto dim = oracle::sym_dim(p_.vars, sp.poly);
    if (rng_ != nullptr) {
      sp.basis = random_invertible(*rng_, dim);
    } else {
      sp.basis = oracle::zeros(dim, dim);
      for (std::size_t k = 0; k < dim; ++k) sp.basis[k][k] = 1;
    }
    sp.inv = inverse(sp.basis);
    return spaces_[key] = sp;
  }

  void add(excol::model::CollectionSpec& s, const std::string& kind, std::vector<int> path, const Space& x,
           const Space& y, const Space& out, int dx, int dy) {
    const auto mx = monomials(p_.vars, x.poly), my = monomials(p_.vars, y.poly), mo = monomials(p_.vars, out.poly);
    if (mx.empty() || my.empty() || mo.empty()) return;
    std::map<std::vector<int>, std::size_t> out_index;
    for (std::size_t i = 0; i < mo.size(); ++i) out_index[mo[i]] = i;
    // Old-basis product table, then change of basis on all three sides.
    oracle::Dense coef = oracle::zeros(mx.size() * my.size(), mo.size());
    for (std::size_t a = 0; a < mx.size(); ++a) {
      for (std::size_t b = 0; b < my.size(); ++b) {
        std::vector<int> e(p_.vars);
        for (int v = 0; v < p_.vars; ++v) e[v] = mx[a][v] + my[b][v];
        coef[a * my.size() + b][out_index.at(e)] = 1;
      }
    }
    excol::model::ProductBlock blk;
    blk.kind = kind;
    blk.path = std::move(path);
    blk.degs = {dx, dy};
    blk.out_deg = dx + dy;
    for (std::size_t a = 0; a < mx.size(); ++a) {
      for (std::size_t b = 0; b < my.size(); ++b) {
        std::vector<mpq_class> old_out(mo.size(), 0);
        for (std::size_t a0 = 0; a0 < mx.size(); ++a0) {
          if (x.basis[a0][a] == 0) continue;
          for (std::size_t b0 = 0; b0 < my.size(); ++b0) {
            if (y.basis[b0][b] == 0) continue;
            for (std::size_t o = 0; o < mo.size(); ++o) old_out[o] += x.basis[a0][a] * y.basis[b0][b] * coef[a0 * my.size() + b0][o];
          }
        }
        for (std::size_t o = 0; o < mo.size(); ++o) {
          mpq_class c = 0;
          for (std::size_t o0 = 0; o0 < mo.size(); ++o0) c += out.inv[o][o0] * old_out[o0];
          if (c != 0) blk.entries.push_back({{a, b}, o, c});
        }
      }
    }
    if (!blk.entries.empty()) s.products.push_back(std::move(blk));
  }

  Params p_;
  std::mt19937* rng_;
  std::map<std::tuple<char, int, int>, Space> spaces_;
};

// rng == nullptr keeps the monomial basis.
inline excol::model::CollectionSpec make_spec(const Params& p, std::mt19937* rng) { return Builder(p, rng).build(); }

}  // namespace gen
