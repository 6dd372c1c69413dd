#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "excol/exactlin/sparse_matrix.hpp"
#include "excol/nhh/complex.hpp"

namespace excol::nhh {

// E_r for the filtration by columns: F^c keeps the summands with -p >= c.
// Every block built from m_k raises the column by k - 1, so d_r comes from
// the products of arity r + 1.
template <class Field>
struct Page {
  int r = 0;  // 0 marks E_infinity
  std::map<Bidegree, std::size_t> dims;  // (-p, q) -> dim, zeros omitted
  // Cocycle representatives in C^t coordinates (t = q - p), one per basis
  // vector of the subquotient.
  std::map<Bidegree, std::vector<lin::SparseVector<Field>>> reps;

  std::size_t dim(int column, int q) const {
    auto it = dims.find({column, q});
    return it == dims.end() ? 0 : it->second;
  }
  std::size_t dim_at_total(int column, int t) const { return dim(column, t - column); }
  // Sum over columns of total degree t.
  std::size_t total(int t) const;
  bool empty() const { return dims.empty(); }
};

template <class Field>
struct SpectralSequencePages {
  std::vector<Page<Field>> pages;  // E_1 .. E_max_page
  Page<Field> infinity;
  int stable_from = 0;  // first computed page with E_r = E_infinity, 0 if none

  const Page<Field>& page(int r) const { return pages.at(static_cast<std::size_t>(r - 1)); }
};

// Throws Error if max_page < 1.
template <class Field>
SpectralSequencePages<Field> spectral_sequence(const Field& k, const NormalComplex<Field>& cx, int max_page);

}  // namespace excol::nhh
