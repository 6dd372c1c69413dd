#pragma once

#include <cstddef>
#include <vector>

#include "excol/exactlin/sparse_matrix.hpp"

namespace excol::lin {

// A linear subspace of k^ambient_dim, stored by its canonical reduced
// row-echelon basis. Two subspaces are equal iff their bases are identical.
template <class Field>
class Subspace {
 public:
  using Element = typename Field::Element;
  using Vector = SparseVector<Field>;

  explicit Subspace(std::size_t ambient_dim = 0) : basis_(ambient_dim) {}

  static Subspace span(const Field& k, std::size_t ambient_dim, const std::vector<Vector>& vectors) {
    Subspace s(ambient_dim);
    for (const auto& v : vectors) s.add(k, v);
    return s;
  }

  static Subspace full(const Field& k, std::size_t ambient_dim) {
    Subspace s(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) s.add(k, Vector{{i, k.one()}});
    return s;
  }

  std::size_t ambient_dim() const { return basis_.width(); }
  std::size_t dim() const { return basis_.size(); }
  std::vector<Vector> basis() const { return basis_.sorted_rows(); }
  std::vector<std::size_t> pivots() const { return basis_.pivots(); }

  // Returns true if v enlarged the subspace.
  bool add(const Field& k, const Vector& v) {
    if (!v.empty() && v.back().first >= ambient_dim()) throw Error("Subspace: vector out of range");
    return basis_.insert(k, v);
  }

  Vector reduce(const Field& k, const Vector& v) const { return basis_.reduce(k, v); }
  bool contains(const Field& k, const Vector& v) const { return reduce(k, v).empty(); }

  bool contains(const Field& k, const Subspace& other) const {
    if (other.ambient_dim() != ambient_dim()) return false;
    for (const auto& v : other.basis()) {
      if (!contains(k, v)) return false;
    }
    return true;
  }

  bool equals(const Field& k, const Subspace& other) const {
    return dim() == other.dim() && contains(k, other);
  }

  // W ∩ span(e_first, e_first+1, ...). In reduced echelon form the basis
  // rows whose pivot is >= first are exactly a basis of the intersection.
  Subspace intersect_suffix(const Field& k, std::size_t first) const {
    Subspace out(ambient_dim());
    for (const auto& v : basis()) {
      if (v.front().first >= first) out.add(k, v);
    }
    return out;
  }

 private:
  EchelonBasis<Field> basis_;
};

template <class Field>
Subspace<Field> sum(const Field& k, const Subspace<Field>& a, const Subspace<Field>& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error("sum: ambient dimension mismatch");
  Subspace<Field> out = a;
  for (const auto& v : b.basis()) out.add(k, v);
  return out;
}

// {v : m v = 0} as a subspace of k^cols.
template <class Field>
Subspace<Field> kernel_basis(const Field& k, const SparseMatrix<Field>& m) {
  const auto reduced = rref(k, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : reduced.pivots) is_pivot[c] = true;
  // Kernel vector for free column f: e_f - sum_rows R[row][f] e_{pivot(row)}.
  std::vector<SparseVector<Field>> vecs(m.cols());
  for (std::size_t r = 0; r < reduced.rank; ++r) {
    const std::size_t piv = reduced.pivots[r];
    for (const auto& [c, v] : reduced.matrix.row(r)) {
      if (!is_pivot[c]) vecs[c].emplace_back(piv, k.neg(v));
    }
  }
  Subspace<Field> ker(m.cols());
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    auto& v = vecs[f];
    v.emplace_back(f, k.one());
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    ker.add(k, v);
  }
  return ker;
}

// m(W) as a subspace of k^rows.
template <class Field>
Subspace<Field> image(const Field& k, const SparseMatrix<Field>& m, const Subspace<Field>& w) {
  if (w.ambient_dim() != m.cols()) throw Error("image: dimension mismatch");
  Subspace<Field> out(m.rows());
  for (const auto& v : w.basis()) out.add(k, m.apply(k, v));
  return out;
}

// dim Z - dim B, after checking B ⊆ Z.
template <class Field>
std::size_t subquotient_dim(const Field& k, const Subspace<Field>& z, const Subspace<Field>& b) {
  if (z.ambient_dim() != b.ambient_dim() || !z.contains(k, b)) {
    throw ContainmentError("subquotient: B is not contained in Z");
  }
  return z.dim() - b.dim();
}

// Basis vectors of z that, together with b, span z: representatives of z/b.
template <class Field>
std::vector<SparseVector<Field>> complement_representatives(const Field& k, const Subspace<Field>& z,
                                                            const Subspace<Field>& b) {
  Subspace<Field> acc = b;
  std::vector<SparseVector<Field>> reps;
  for (const auto& v : z.basis()) {
    if (acc.add(k, v)) reps.push_back(v);
  }
  return reps;
}

}  // namespace excol::lin
