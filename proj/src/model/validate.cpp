#include "excol/model/validate.hpp"

#include <algorithm>
#include <functional>

#include "excol/error.hpp"
#include "excol/exactlin/field.hpp"
#include "excol/model/product_table.hpp"
#include "excol/model/qualitative.hpp"

namespace excol::model {

namespace {

std::string path_string(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::size_t dim_at(const GradedDims& g, int deg) {
  auto it = g.find(deg);
  return it == g.end() ? 0 : it->second;
}

// Sum over all ways of nesting two products inside a composable tuple of
// length L: b(1 ⊗ b ⊗ 1) applied to the tuple must vanish.
template <class Field>
class RelationChecker {
 public:
  using Element = typename Field::Element;

  RelationChecker(const Field& k, const CollectionSpec& spec) : k_(k), spec_(spec), table_(k, spec) {}

  void run(std::size_t max_len, Check& check, std::size_t& tested) {
    const std::size_t r = table_.max_arity();
    for (std::size_t len = 3; len <= max_len; ++len) {
      for (int start = 1; start <= spec_.n; ++start) {
        path_ = {start};
        word_.clear();
        degs_.clear();
        dims_.clear();
        extend(len, r, check, tested);
      }
    }
  }

 private:
  void extend(std::size_t len, std::size_t r, Check& check, std::size_t& tested) {
    if (word_.size() == len) {
      check_tuples(r, check, tested);
      return;
    }
    const int cur = path_.back();
    const bool used_n = word_.find('N') != std::string::npos;
    auto step = [&](char letter, int next) {
      const GradedDims* g = spec_.letter_space(letter, cur, next);
      if (!g) return;
      for (const auto& [deg, dim] : *g) {
        path_.push_back(next);
        word_.push_back(letter);
        degs_.push_back(deg);
        dims_.push_back(dim);
        extend(len, r, check, tested);
        path_.pop_back();
        word_.pop_back();
        degs_.pop_back();
        dims_.pop_back();
      }
    };
    if (!used_n) {
      for (int b = cur + 1; b <= spec_.n; ++b) step('A', b);
      for (int c = 1; c <= std::min(cur, path_.front()); ++c) step('N', c);
    } else {
      for (int c = cur + 1; c <= path_.front(); ++c) step('A', c);
    }
  }

  void check_tuples(std::size_t r, Check& check, std::size_t& tested) {
    const std::size_t len = word_.size();
    // Skip tuples on which no pair of supplied products can nest.
    struct Split {
      std::size_t st, k;
      const typename model::ProductTable<Field>::Block* inner;
      int sign;
    };
    std::vector<Split> splits;
    int prefix = 0;
    for (std::size_t st = 0; st < len; ++st) {
      for (std::size_t k = 2; k <= std::min(r, len - st); ++k) {
        const std::size_t outer = len - k + 1;
        if (outer < 2 || outer > r) continue;
        std::vector<int> sub_path(path_.begin() + st, path_.begin() + st + k + 1);
        std::vector<int> sub_degs(degs_.begin() + st, degs_.begin() + st + k);
        const auto* inner = table_.find(word_.substr(st, k), sub_path, sub_degs);
        if (!inner) continue;
        const int sign = ((prefix % 2 == 0) ? 1 : -1) * bar_sign(sub_degs);
        splits.push_back({st, k, inner, sign});
      }
      prefix += degs_[st] - 1;
    }
    if (splits.empty()) return;

    std::vector<std::size_t> x(len, 0);
    for (;;) {
      ++tested;
      std::map<std::size_t, Element> residual;
      for (const auto& sp : splits) {
        std::vector<std::size_t> in(x.begin() + sp.st, x.begin() + sp.st + sp.k);
        const auto* outs = table_.apply(*sp.inner, in);
        if (!outs) continue;
        std::string outer_word = word_.substr(0, sp.st);
        outer_word.push_back(word_.substr(sp.st, sp.k).find('N') != std::string::npos ? 'N' : 'A');
        outer_word += word_.substr(sp.st + sp.k);
        std::vector<int> outer_path(path_.begin(), path_.begin() + sp.st + 1);
        outer_path.insert(outer_path.end(), path_.begin() + sp.st + sp.k, path_.end());
        std::vector<int> outer_degs(degs_.begin(), degs_.begin() + sp.st);
        outer_degs.push_back(sp.inner->source->out_deg);
        outer_degs.insert(outer_degs.end(), degs_.begin() + sp.st + sp.k, degs_.end());
        const auto* outer = table_.find(outer_word, outer_path, outer_degs);
        if (!outer) continue;
        const int sign = sp.sign * bar_sign(outer_degs);
        for (const auto& [y, c] : *outs) {
          std::vector<std::size_t> tuple(x.begin(), x.begin() + sp.st);
          tuple.push_back(y);
          tuple.insert(tuple.end(), x.begin() + sp.st + sp.k, x.end());
          const auto* outs2 = table_.apply(*outer, tuple);
          if (!outs2) continue;
          for (const auto& [z, c2] : *outs2) {
            Element v = k_.mul(c, c2);
            if (sign < 0) v = k_.neg(v);
            auto [it, fresh] = residual.emplace(z, k_.zero());
            it->second = k_.add(it->second, v);
          }
        }
      }
      for (const auto& [z, v] : residual) {
        if (!k_.is_zero(v)) {
          if (check.ok) {
            std::string idx;
            for (auto i : x) idx += std::to_string(i) + " ";
            check.detail = "relation fails on " + word_ + path_string(path_) + " degrees " + path_string(degs_) +
                           " basis [" + idx + "] at output " + std::to_string(z);
          }
          check.ok = false;
          break;
        }
      }
      std::size_t pos = len;
      while (pos > 0) {
        --pos;
        if (++x[pos] < dims_[pos]) break;
        x[pos] = 0;
        if (pos == 0) return;
      }
    }
  }

  const Field& k_;
  const CollectionSpec& spec_;
  ProductTable<Field> table_;
  std::vector<int> path_;
  std::string word_;
  std::vector<int> degs_;
  std::vector<std::size_t> dims_;
};

}  // namespace

bool ValidationReport::ok() const { return failures() == 0; }

std::size_t ValidationReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.ok; }));
}

nlohmann::json ValidationReport::to_json() const {
  nlohmann::json j;
  j["ok"] = ok();
  j["failures"] = failures();
  j["relation_length"] = relation_length;
  j["relations_tested"] = relations_tested;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) j["checks"].push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  return j;
}

ValidationReport validate(const CollectionSpec& spec) {
  ValidationReport rep;

  Check exc{"exceptionality", true, ""};
  for (const auto& [key, dims] : spec.A) {
    if (key.first >= key.second || key.first < 1 || key.second > spec.n) {
      exc.ok = false;
      exc.detail = "Ext from E" + std::to_string(key.first) + " to E" + std::to_string(key.second) + " is not forward";
    }
    for (const auto& [deg, dim] : dims) {
      if (dim == 0) {
        exc.ok = false;
        exc.detail = "zero dimension stored";
      }
    }
  }
  for (const auto& [key, dims] : spec.N) {
    if (key.first > key.second || key.first < 1 || key.second > spec.n) {
      exc.ok = false;
      exc.detail = "Serre-twisted space (" + std::to_string(key.first) + "," + std::to_string(key.second) + ") out of range";
    }
  }
  rep.checks.push_back(exc);

  Check idx{"indices", true, ""};
  Check add{"degree_additivity", true, ""};
  for (const auto& b : spec.products) {
    const std::string tag = b.kind + path_string(b.path) + " degrees " + path_string(b.degs);
    const GradedDims* out = spec.output_space(b.kind, b.path);
    if (!out || b.degs.size() != b.arity() || b.arity() < 2) {
      idx.ok = false;
      idx.detail = tag + ": path does not give composable morphisms";
      continue;
    }
    int sum = 0;
    for (int d : b.degs) sum += d;
    if (b.out_deg != sum + 2 - static_cast<int>(b.arity())) {
      add.ok = false;
      add.detail = tag + ": output degree " + std::to_string(b.out_deg) + ", expected " +
                   std::to_string(sum + 2 - static_cast<int>(b.arity()));
    }
    for (const auto& e : b.entries) {
      bool bad = e.inputs.size() != b.arity() || e.output >= dim_at(*out, b.out_deg);
      for (std::size_t s = 0; !bad && s < b.arity(); ++s) {
        bad = e.inputs[s] >= dim_at(*spec.letter_space(b.kind[s], b.path[s], b.path[s + 1]), b.degs[s]);
      }
      if (bad) {
        idx.ok = false;
        idx.detail = tag + ": basis index out of range";
      }
    }
  }
  rep.checks.push_back(idx);
  rep.checks.push_back(add);

  Check rel{"a_infinity_relations", true, ""};
  if (idx.ok && add.ok && !spec.products.empty()) {
    const std::size_t r = spec.max_arity();
    rep.relation_length = spec.flags.higher_products_complete ? 2 * r - 1 : r + 1;
    try {
      if (spec.field.is_rational()) {
        lin::Rationals k;
        RelationChecker<lin::Rationals>(k, spec).run(rep.relation_length, rel, rep.relations_tested);
      } else {
        lin::PrimeField k(spec.field.p);
        RelationChecker<lin::PrimeField>(k, spec).run(rep.relation_length, rel, rep.relations_tested);
      }
    } catch (const Error& e) {
      rel.ok = false;
      rel.detail = e.what();
    }
  } else if (!spec.products.empty()) {
    rel.ok = false;
    rel.detail = "skipped: fix index and degree failures first";
  }
  rep.checks.push_back(rel);

  Check qual{"qualitative_consistency", true, ""};
  try {
    build_table(spec, true);
  } catch (const Error& e) {
    qual.ok = false;
    qual.detail = e.what();
  }
  rep.checks.push_back(qual);
  return rep;
}

void require_valid(const CollectionSpec& spec) {
  const auto rep = validate(spec);
  if (rep.ok()) return;
  std::string msg = "invalid collection:";
  for (const auto& c : rep.checks) {
    if (!c.ok) msg += " [" + c.name + "] " + c.detail;
  }
  throw ValidationError(msg);
}

}  // namespace excol::model
