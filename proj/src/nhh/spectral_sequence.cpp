#include "excol/nhh/spectral_sequence.hpp"

#include <algorithm>

#include "excol/error.hpp"
#include "excol/exactlin/field.hpp"
#include "excol/exactlin/subspace.hpp"

namespace excol::nhh {

template <class Field>
std::size_t Page<Field>::total(int t) const {
  std::size_t s = 0;
  for (const auto& [bd, d] : dims) {
    if (bd.second + bd.first == t) s += d;
  }
  return s;
}

namespace {

constexpr int kInfinite = 1 << 20;

template <class Field>
class Filtration {
 public:
  using Sub = lin::Subspace<Field>;

  Filtration(const Field& k, const NormalComplex<Field>& cx) : k_(k), cx_(cx) {}

  std::size_t dim(int t) const { return cx_.e1.total_dim(t); }
  std::size_t start(int t, int c) const { return cx_.e1.suffix_start(t, c); }

  // Z_r^c in C^t: x in F^c with dx in F^{c+r}. r = 0 gives F^c itself.
  Sub z(int t, int c, int r) {
    const std::size_t n = dim(t);
    const std::size_t s = std::min(start(t, c), n);
    if (r == 0) {
      Sub out(n);
      for (std::size_t i = s; i < n; ++i) out.add(k_, {{i, k_.one()}});
      return out;
    }
    auto key = std::make_tuple(t, c, std::min(r, kInfinite));
    auto it = z_cache_.find(key);
    if (it != z_cache_.end()) return it->second;
    Sub out(n);
    auto dit = cx_.d.find(t);
    if (dit == cx_.d.end() || n == 0) {
      z_cache_.emplace(key, out);
      return out;
    }
    const auto& d = dit->second;
    const std::size_t row_end = r >= kInfinite ? d.rows() : std::min(start(t + 1, c + r), d.rows());
    const auto blk = d.block(0, row_end, s, n);
    const auto ker = lin::kernel_basis(k_, blk);
    for (auto v : ker.basis()) {
      for (auto& e : v) e.first += s;
      out.add(k_, v);
    }
    z_cache_.emplace(key, out);
    return out;
  }

  // d applied to a subspace of C^{t-1}, landing in C^t.
  Sub image_from(int t, const Sub& w) {
    auto dit = cx_.d.find(t - 1);
    if (dit == cx_.d.end()) return Sub(dim(t));
    return lin::image(k_, dit->second, w);
  }

 private:
  const Field& k_;
  const NormalComplex<Field>& cx_;
  std::map<std::tuple<int, int, int>, Sub> z_cache_;
};

template <class Field>
void record(const Field& k, Page<Field>& page, int c, int t, const lin::Subspace<Field>& z,
            const lin::Subspace<Field>& denom) {
  const std::size_t d = lin::subquotient_dim(k, z, denom);
  if (d == 0) return;
  const Bidegree bd{c, t - c};
  page.dims[bd] = d;
  page.reps[bd] = lin::complement_representatives(k, z, denom);
}

}  // namespace

template <class Field>
SpectralSequencePages<Field> spectral_sequence(const Field& k, const NormalComplex<Field>& cx, int max_page) {
  if (max_page < 1) throw Error("spectral sequence: max_page must be at least 1");
  SpectralSequencePages<Field> out;
  Filtration<Field> f(k, cx);

  std::vector<std::pair<int, int>> spots;  // (t, column) with C^t nonzero in that column
  for (const auto& [t, terms] : cx.e1.by_degree) {
    std::vector<int> cols;
    for (const auto& term : terms) cols.push_back(term.column());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    for (int c : cols) spots.emplace_back(t, c);
  }

  for (int r = 1; r <= max_page; ++r) {
    Page<Field> page;
    page.r = r;
    for (const auto& [t, c] : spots) {
      const auto zr = f.z(t, c, r);
      auto denom = f.z(t, c + 1, r - 1);
      const auto b = f.image_from(t, f.z(t - 1, c - r + 1, r - 1));
      denom = lin::sum(k, denom, b);
      record(k, page, c, t, zr, denom);
    }
    out.pages.push_back(std::move(page));
  }

  out.infinity.r = 0;
  std::map<int, lin::Subspace<Field>> boundaries;
  for (const auto& [t, c] : spots) {
    auto bit = boundaries.find(t);
    if (bit == boundaries.end()) {
      bit = boundaries.emplace(t, f.image_from(t, lin::Subspace<Field>::full(k, f.dim(t - 1)))).first;
    }
    const auto zinf = f.z(t, c, kInfinite);
    auto denom = f.z(t, c + 1, kInfinite);
    denom = lin::sum(k, denom, bit->second.intersect_suffix(k, f.start(t, c)));
    record(k, out.infinity, c, t, zinf, denom);
  }

  for (const auto& page : out.pages) {
    if (page.dims == out.infinity.dims) {
      out.stable_from = page.r;
      break;
    }
  }
  return out;
}

template struct Page<lin::Rationals>;
template struct Page<lin::PrimeField>;
template SpectralSequencePages<lin::Rationals> spectral_sequence(const lin::Rationals&,
                                                                 const NormalComplex<lin::Rationals>&, int);
template SpectralSequencePages<lin::PrimeField> spectral_sequence(const lin::PrimeField&,
                                                                  const NormalComplex<lin::PrimeField>&, int);

}  // namespace excol::nhh
