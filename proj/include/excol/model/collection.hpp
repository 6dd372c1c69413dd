#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "excol/vendor_json.hpp"

namespace excol::model {

// degree -> dimension; zero dimensions are never stored.
using GradedDims = std::map<int, std::size_t>;

enum class Status { Unknown, Zero, Nonzero };

std::string to_string(Status s);
Status status_from_string(const std::string& s);

struct FieldSpec {
  std::uint64_t p = 0;  // 0 means Q

  bool is_rational() const { return p == 0; }
  std::string to_string() const;
  static FieldSpec parse(const std::string& text);
  bool operator==(const FieldSpec&) const = default;
};

struct ObjectInfo {
  std::string label;
  std::optional<int> canonical_degree;
  bool operator==(const ObjectInfo&) const = default;
};

struct Flags {
  bool is_surface = false;
  bool ample_canonical = false;
  bool h2_anticanonical_nonzero = false;
  bool line_bundles = false;
  // false: the ext/serre_ext lists are partial, absent spaces are unknown.
  bool exact_dims = true;
  // false: products of some arity above the supplied ones may be nonzero.
  bool higher_products_complete = true;
  bool operator==(const Flags&) const = default;
};

struct ProductEntry {
  std::vector<std::size_t> inputs;
  std::size_t output = 0;
  mpq_class coef;
  bool operator==(const ProductEntry&) const = default;
};

// One block of m_k structure constants. `kind` is a word over {A, N} with at
// most one N, read in composition order; `path` lists the k+1 objects it runs
// through. Letter s maps path[s] -> path[s+1]: an A letter is A(path[s],
// path[s+1]) (on either side of the N), the N letter is N(path[s+1], path[s]).
// The output lies in A(path[0], path[k]) or, if an N is present,
// N(path[k], path[0]).
struct ProductBlock {
  std::string kind;
  std::vector<int> path;
  std::vector<int> degs;
  int out_deg = 0;
  std::vector<ProductEntry> entries;

  std::size_t arity() const { return kind.size(); }
  bool operator==(const ProductBlock&) const = default;
};

// Ext^deg(E_src, E_dst) in the anticanonically extended collection 1..2n,
// where index n+i stands for E_i twisted by the anticanonical bundle.
struct QualEntry {
  int src = 0;
  int dst = 0;
  int deg = 0;
  Status status = Status::Unknown;
  std::string source;
  bool operator==(const QualEntry&) const = default;
};

// A vector in a chain-tensor space A(a0,a1)^k0 ⊗ ... ⊗ N(a0,ap)^kp.
struct TensorComponent {
  std::vector<int> chain;
  std::vector<int> degs;
  std::vector<std::pair<std::vector<std::size_t>, mpq_class>> entries;
  bool operator==(const TensorComponent&) const = default;
};

struct FullnessData {
  std::vector<TensorComponent> xi;
  std::vector<TensorComponent> pairing;
  bool operator==(const FullnessData&) const = default;
};

struct CollectionSpec {
  int n = 1;
  int dim_x = 0;
  FieldSpec field;
  std::vector<ObjectInfo> objects;
  std::optional<int> k_squared;
  Flags flags;
  std::map<std::pair<int, int>, GradedDims> A;  // (i, j), i < j
  std::map<std::pair<int, int>, GradedDims> N;  // (i, j), i <= j: Ext(E_j, S^-1 E_i)
  std::vector<ProductBlock> products;           // sorted, any arity >= 2
  std::vector<QualEntry> qualitative;
  nlohmann::json metadata = nlohmann::json::object();
  std::optional<FullnessData> fullness;

  bool operator==(const CollectionSpec&) const = default;

  std::size_t a_dim(int i, int j, int deg) const;
  std::size_t n_dim(int i, int j, int deg) const;
  const GradedDims& a_space(int i, int j) const;
  const GradedDims& n_space(int i, int j) const;

  // Space of the letter 'A' or 'N' running from object `from` to `to`;
  // nullptr if that letter cannot connect them.
  const GradedDims* letter_space(char letter, int from, int to) const;
  // Output space of a word along a path; nullptr if the path is invalid.
  const GradedDims* output_space(const std::string& kind, const std::vector<int>& path) const;

  // Largest supplied product arity, at least 2.
  std::size_t max_arity() const;
  std::vector<int> canonical_degrees() const;  // throws if any is missing
  bool has_canonical_degrees() const;
};

// Sort lists into canonical order; merges nothing, drops nothing.
void canonicalize(CollectionSpec& spec);

// (deg_1..deg_n, deg_1 - K^2, ..., deg_n - K^2)
std::vector<int> extend_degrees(const std::vector<int>& degrees, int k_squared);

}  // namespace excol::model
