#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "excol/model/collection.hpp"

namespace excol::model {

// Sign turning a structure constant of m_k into the bar-complex map b_k on
// shifted inputs of degrees d_1..d_k: (-1)^{sum_i (k-i) d_i}.
inline int bar_sign(const std::vector<int>& degs) {
  long s = 0;
  const long k = static_cast<long>(degs.size());
  for (long i = 0; i < k; ++i) s += (k - 1 - i) * degs[i];
  return (s % 2 == 0) ? 1 : -1;
}

// Structure constants converted into a field and indexed for lookup by
// (kind, path, input degrees).
template <class Field>
class ProductTable {
 public:
  using Element = typename Field::Element;
  using Output = std::vector<std::pair<std::size_t, Element>>;

  struct Block {
    const ProductBlock* source = nullptr;
    std::map<std::vector<std::size_t>, Output> action;
  };

  ProductTable(const Field& k, const CollectionSpec& spec) {
    for (const auto& b : spec.products) {
      Block blk;
      blk.source = &b;
      for (const auto& e : b.entries) {
        Element v = k.from_rational(e.coef);
        if (!k.is_zero(v)) blk.action[e.inputs].emplace_back(e.output, std::move(v));
      }
      if (b.arity() > max_arity_) max_arity_ = b.arity();
      blocks_.emplace(std::make_tuple(b.kind, b.path, b.degs), std::move(blk));
    }
  }

  const Block* find(const std::string& kind, const std::vector<int>& path, const std::vector<int>& degs) const {
    auto it = blocks_.find(std::make_tuple(kind, path, degs));
    return it == blocks_.end() ? nullptr : &it->second;
  }

  // Images of one basis tensor; nullptr when the product vanishes on it.
  const Output* apply(const Block& b, const std::vector<std::size_t>& inputs) const {
    auto it = b.action.find(inputs);
    return it == b.action.end() ? nullptr : &it->second;
  }

  std::size_t max_arity() const { return max_arity_; }
  bool empty() const { return blocks_.empty(); }

 private:
  std::map<std::tuple<std::string, std::vector<int>, std::vector<int>>, Block> blocks_;
  std::size_t max_arity_ = 2;
};

}  // namespace excol::model
