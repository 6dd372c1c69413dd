#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "excol/exactlin/sparse_matrix.hpp"
#include "excol/model/collection.hpp"
#include "excol/pseudoheight/pseudoheight.hpp"

namespace excol::nhh {

// One summand A(a0,a1)^k0 ⊗ ... ⊗ A(a_{p-1},a_p)^k_{p-1} ⊗ N(a0,a_p)^k_p of
// the normal complex, in bidegree (-p, q) with q = sum k and total degree
// t = q - p. Basis tensors are numbered in mixed radix, first factor most
// significant.
struct ChainTerm {
  ph::Chain chain;
  std::vector<int> degs;
  std::vector<std::size_t> dims;
  std::size_t dim = 0;
  int p = 0;
  int q = 0;
  int t = 0;
  std::size_t offset = 0;  // first coordinate inside C^t

  int column() const { return -p; }
  std::size_t local_index(const std::vector<std::size_t>& tuple) const;
  std::vector<std::size_t> tuple_of(std::size_t local) const;
  std::string name() const;
};

using Bidegree = std::pair<int, int>;  // (column -p, q)

// Every nonzero summand, grouped by total degree. Within C^t the terms are
// ordered by increasing column, so each filtration step F^c C^t (columns
// >= c) is a suffix of the coordinates.
struct E1Page {
  std::map<int, std::vector<ChainTerm>> by_degree;
  std::map<Bidegree, std::size_t> dims;

  std::size_t total_dim(int t) const;
  // First coordinate of C^t whose column is >= c.
  std::size_t suffix_start(int t, int c) const;
  const ChainTerm* find(const ph::Chain& chain, const std::vector<int>& degs) const;
  int min_degree() const;
  int max_degree() const;
  bool empty() const { return by_degree.empty(); }
};

// Needs exact dimensions; throws ValidationError otherwise.
E1Page build_e1(const model::CollectionSpec& spec);

template <class Field>
struct NormalComplex {
  E1Page e1;
  // d.at(t): C^t -> C^{t+1} as a dim C^{t+1} x dim C^t matrix, for every t
  // with C^t != 0.
  std::map<int, lin::SparseMatrix<Field>> d;
  std::size_t max_arity = 2;

  const lin::SparseMatrix<Field>& diff(int t) const { return d.at(t); }
};

// Assembles the total differential from every supplied product, with bar
// signs, and checks d∘d = 0 (ComplexError naming the offending summands
// otherwise). Validates the spec first.
template <class Field>
NormalComplex<Field> assemble_differential(const Field& k, const model::CollectionSpec& spec);

// t -> dim H^t for every t with C^t != 0 (zeros included).
template <class Field>
std::map<int, std::size_t> total_cohomology(const Field& k, const NormalComplex<Field>& cx);

}  // namespace excol::nhh
