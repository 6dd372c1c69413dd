#include "excol/nhh/complex.hpp"

#include <algorithm>
#include <tuple>

#include "excol/error.hpp"
#include "excol/exactlin/field.hpp"
#include "excol/exactlin/subspace.hpp"
#include "excol/model/product_table.hpp"
#include "excol/model/validate.hpp"

namespace excol::nhh {

namespace {

std::string chain_string(const ph::Chain& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + ")";
}

int parity_sign(long v) { return (v % 2 == 0) ? 1 : -1; }

}  // namespace

std::size_t ChainTerm::local_index(const std::vector<std::size_t>& tuple) const {
  std::size_t idx = 0;
  for (std::size_t s = 0; s < dims.size(); ++s) idx = idx * dims[s] + tuple[s];
  return idx;
}

std::vector<std::size_t> ChainTerm::tuple_of(std::size_t local) const {
  std::vector<std::size_t> out(dims.size());
  for (std::size_t s = dims.size(); s-- > 0;) {
    out[s] = local % dims[s];
    local /= dims[s];
  }
  return out;
}

std::string ChainTerm::name() const {
  std::string s = "chain " + chain_string(chain) + " degrees (";
  for (std::size_t i = 0; i < degs.size(); ++i) s += (i ? "," : "") + std::to_string(degs[i]);
  return s + ") at (" + std::to_string(-p) + "," + std::to_string(q) + ")";
}

std::size_t E1Page::total_dim(int t) const {
  auto it = by_degree.find(t);
  if (it == by_degree.end() || it->second.empty()) return 0;
  const auto& last = it->second.back();
  return last.offset + last.dim;
}

std::size_t E1Page::suffix_start(int t, int c) const {
  auto it = by_degree.find(t);
  if (it == by_degree.end()) return 0;
  for (const auto& term : it->second) {
    if (term.column() >= c) return term.offset;
  }
  return total_dim(t);
}

const ChainTerm* E1Page::find(const ph::Chain& chain, const std::vector<int>& degs) const {
  int q = 0;
  for (int d : degs) q += d;
  const int t = q - static_cast<int>(chain.size() - 1);
  auto it = by_degree.find(t);
  if (it == by_degree.end()) return nullptr;
  for (const auto& term : it->second) {
    if (term.chain == chain && term.degs == degs) return &term;
  }
  return nullptr;
}

int E1Page::min_degree() const { return by_degree.empty() ? 0 : by_degree.begin()->first; }
int E1Page::max_degree() const { return by_degree.empty() ? -1 : by_degree.rbegin()->first; }

E1Page build_e1(const model::CollectionSpec& spec) {
  if (!spec.flags.exact_dims) throw ValidationError("the normal complex needs exact Ext dimensions");
  E1Page page;
  ph::for_each_chain(spec.n, [&](const ph::Chain& c) {
    const std::size_t p = c.size() - 1;
    std::vector<const model::GradedDims*> spaces;
    for (std::size_t s = 0; s < p; ++s) spaces.push_back(&spec.a_space(c[s], c[s + 1]));
    spaces.push_back(&spec.n_space(c.front(), c.back()));
    if (std::any_of(spaces.begin(), spaces.end(), [](const auto* g) { return g->empty(); })) return;
    std::vector<model::GradedDims::const_iterator> it;
    for (const auto* g : spaces) it.push_back(g->begin());
    for (;;) {
      ChainTerm term;
      term.chain = c;
      term.p = static_cast<int>(p);
      term.dim = 1;
      for (const auto& e : it) {
        term.degs.push_back(e->first);
        term.dims.push_back(e->second);
        term.q += e->first;
        term.dim *= e->second;
      }
      term.t = term.q - term.p;
      page.by_degree[term.t].push_back(std::move(term));
      std::size_t s = it.size();
      while (s > 0) {
        --s;
        if (++it[s] != spaces[s]->end()) break;
        it[s] = spaces[s]->begin();
        if (s == 0) goto next_chain;
      }
    }
  next_chain:;
  });
  for (auto& [t, terms] : page.by_degree) {
    std::sort(terms.begin(), terms.end(), [](const ChainTerm& a, const ChainTerm& b) {
      return std::tie(b.p, a.chain, a.degs) < std::tie(a.p, b.chain, b.degs);
    });
    std::size_t off = 0;
    for (auto& term : terms) {
      term.offset = off;
      off += term.dim;
      page.dims[{term.column(), term.q}] += term.dim;
    }
  }
  return page;
}

namespace {

template <class Field>
class DifferentialBuilder {
 public:
  using Element = typename Field::Element;

  DifferentialBuilder(const Field& k, const model::CollectionSpec& spec, const E1Page& e1)
      : k_(k), spec_(spec), e1_(e1), table_(k, spec) {}

  std::size_t max_arity() const { return table_.max_arity(); }

  lin::SparseMatrix<Field> build(int t) {
    lin::TripletBuilder<Field> tb(e1_.total_dim(t + 1), e1_.total_dim(t));
    auto it = e1_.by_degree.find(t);
    if (it != e1_.by_degree.end()) {
      for (const auto& term : it->second) add_term(term, tb);
    }
    return tb.build(k_);
  }

 private:
  struct Window {
    std::string word;
    std::vector<int> path;
    std::vector<int> win_degs;
    std::vector<std::size_t> positions;  // source positions fed to the product, in order
    std::size_t keep_begin, keep_end;    // surviving A factors [keep_begin, keep_end)
    bool wraps;                          // contains the N factor
    std::size_t insert_at;               // for linear windows: position of the output
    int sign;
  };

  void add_window(const ChainTerm& src, const Window& w, lin::TripletBuilder<Field>& tb) {
    const auto* block = table_.find(w.word, w.path, w.win_degs);
    if (!block || block->action.empty()) return;
    const int out_deg = block->source->out_deg;
    const int p = src.p;

    ph::Chain chain;
    std::vector<int> degs;
    if (w.wraps) {
      for (std::size_t m = w.keep_begin; m <= w.keep_end; ++m) chain.push_back(src.chain[m]);
      for (std::size_t m = w.keep_begin; m < w.keep_end; ++m) degs.push_back(src.degs[m]);
      degs.push_back(out_deg);
    } else {
      const std::size_t k = w.word.size();
      for (std::size_t m = 0; m <= w.insert_at; ++m) chain.push_back(src.chain[m]);
      for (std::size_t m = w.insert_at + k; m <= static_cast<std::size_t>(p); ++m) chain.push_back(src.chain[m]);
      for (std::size_t m = 0; m < w.insert_at; ++m) degs.push_back(src.degs[m]);
      degs.push_back(out_deg);
      for (std::size_t m = w.insert_at + k; m <= static_cast<std::size_t>(p); ++m) degs.push_back(src.degs[m]);
    }
    const ChainTerm* dst = e1_.find(chain, degs);
    if (!dst) return;

    std::vector<std::size_t> in(w.positions.size());
    std::vector<std::size_t> out_tuple(dst->dims.size());
    for (std::size_t local = 0; local < src.dim; ++local) {
      const auto x = src.tuple_of(local);
      for (std::size_t i = 0; i < w.positions.size(); ++i) in[i] = x[w.positions[i]];
      const auto* outs = table_.apply(*block, in);
      if (!outs) continue;
      std::size_t slot;
      if (w.wraps) {
        std::size_t o = 0;
        for (std::size_t m = w.keep_begin; m < w.keep_end; ++m) out_tuple[o++] = x[m];
        slot = o;
      } else {
        std::size_t o = 0;
        for (std::size_t m = 0; m < w.insert_at; ++m) out_tuple[o++] = x[m];
        slot = o++;
        for (std::size_t m = w.insert_at + w.word.size(); m <= static_cast<std::size_t>(p); ++m) out_tuple[o++] = x[m];
      }
      for (const auto& [y, c] : *outs) {
        out_tuple[slot] = y;
        Element v = w.sign < 0 ? k_.neg(c) : c;
        tb.add(dst->offset + dst->local_index(out_tuple), src.offset + local, std::move(v));
      }
    }
  }

  void add_term(const ChainTerm& src, lin::TripletBuilder<Field>& tb) {
    const std::size_t p = static_cast<std::size_t>(src.p);
    const std::size_t r = table_.max_arity();
    std::vector<long> shifted(p + 1);
    for (std::size_t m = 0; m <= p; ++m) shifted[m] = src.degs[m] - 1;
    auto range_sum = [&](std::size_t a, std::size_t b) {  // positions [a, b)
      long s = 0;
      for (std::size_t m = a; m < b; ++m) s += shifted[m];
      return s;
    };

    // Windows of consecutive A factors.
    for (std::size_t st = 0; st < p; ++st) {
      for (std::size_t k = 2; k <= r && st + k <= p; ++k) {
        Window w;
        w.word = std::string(k, 'A');
        w.path.assign(src.chain.begin() + st, src.chain.begin() + st + k + 1);
        w.win_degs.assign(src.degs.begin() + st, src.degs.begin() + st + k);
        for (std::size_t m = st; m < st + k; ++m) w.positions.push_back(m);
        w.wraps = false;
        w.insert_at = st;
        w.keep_begin = w.keep_end = 0;
        w.sign = parity_sign(range_sum(0, st)) * model::bar_sign(w.win_degs);
        add_window(src, w, tb);
      }
    }
    // Windows through the N factor: j A factors before it (positions p-j..p-1)
    // and l after it cyclically (positions 0..l-1). Rotating the right block
    // to the front, applying the product and rotating the result back to the
    // end gives the sign below.
    for (std::size_t j = 0; j <= p; ++j) {
      for (std::size_t l = 0; j + l <= p; ++l) {
        const std::size_t k = j + 1 + l;
        if (k < 2 || k > r) continue;
        Window w;
        w.word = std::string(j, 'A') + "N" + std::string(l, 'A');
        for (std::size_t m = p - j; m <= p; ++m) w.path.push_back(src.chain[m]);
        for (std::size_t m = 0; m <= l; ++m) w.path.push_back(src.chain[m]);
        for (std::size_t m = p - j; m <= p; ++m) {
          w.win_degs.push_back(src.degs[m]);
          w.positions.push_back(m);
        }
        for (std::size_t m = 0; m < l; ++m) {
          w.win_degs.push_back(src.degs[m]);
          w.positions.push_back(m);
        }
        w.wraps = true;
        w.keep_begin = l;
        w.keep_end = p - j;
        w.insert_at = 0;
        const long sl = range_sum(0, l), sm = range_sum(l, p - j), sr = range_sum(p - j, p + 1);
        const long sy = sr + sl + 1;
        w.sign = parity_sign(sr * (sl + sm) + sy * sm) * model::bar_sign(w.win_degs);
        add_window(src, w, tb);
      }
    }
  }

  const Field& k_;
  const model::CollectionSpec& spec_;
  const E1Page& e1_;
  model::ProductTable<Field> table_;
};

}  // namespace

template <class Field>
NormalComplex<Field> assemble_differential(const Field& k, const model::CollectionSpec& spec) {
  model::require_valid(spec);
  NormalComplex<Field> cx;
  cx.e1 = build_e1(spec);
  DifferentialBuilder<Field> builder(k, spec, cx.e1);
  cx.max_arity = builder.max_arity();
  for (const auto& [t, terms] : cx.e1.by_degree) cx.d.emplace(t, builder.build(t));

  for (const auto& [t, dt] : cx.d) {
    auto next = cx.d.find(t + 1);
    if (next == cx.d.end()) continue;
    const auto dd = lin::multiply(k, next->second, dt);
    if (dd.is_zero()) continue;
    for (std::size_t row = 0; row < dd.rows(); ++row) {
      if (dd.row(row).empty()) continue;
      const std::size_t col = dd.row(row).front().first;
      const ChainTerm* from = nullptr;
      const ChainTerm* to = nullptr;
      for (const auto& term : cx.e1.by_degree.at(t)) {
        if (col >= term.offset && col < term.offset + term.dim) from = &term;
      }
      for (const auto& term : cx.e1.by_degree.at(t + 2)) {
        if (row >= term.offset && row < term.offset + term.dim) to = &term;
      }
      throw ComplexError("d∘d != 0 from " + (from ? from->name() : std::string("?")) + " to " +
                         (to ? to->name() : std::string("?")));
    }
  }
  return cx;
}

template <class Field>
std::map<int, std::size_t> total_cohomology(const Field& k, const NormalComplex<Field>& cx) {
  std::map<int, std::size_t> ranks;
  for (const auto& [t, dt] : cx.d) ranks[t] = lin::rank(k, dt);
  std::map<int, std::size_t> out;
  for (const auto& [t, terms] : cx.e1.by_degree) {
    const std::size_t dim = cx.e1.total_dim(t);
    const std::size_t in = ranks.count(t - 1) ? ranks.at(t - 1) : 0;
    out[t] = dim - ranks.at(t) - in;
  }
  return out;
}

template NormalComplex<lin::Rationals> assemble_differential(const lin::Rationals&, const model::CollectionSpec&);
template NormalComplex<lin::PrimeField> assemble_differential(const lin::PrimeField&, const model::CollectionSpec&);
template std::map<int, std::size_t> total_cohomology(const lin::Rationals&, const NormalComplex<lin::Rationals>&);
template std::map<int, std::size_t> total_cohomology(const lin::PrimeField&, const NormalComplex<lin::PrimeField>&);

}  // namespace excol::nhh
