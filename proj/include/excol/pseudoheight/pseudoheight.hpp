#pragma once

#include <optional>
#include <vector>

#include "excol/error.hpp"
#include "excol/extended_int.hpp"
#include "excol/model/collection.hpp"
#include "excol/model/qualitative.hpp"

namespace excol::ph {

// Strictly increasing object indices a_0 < ... < a_p, 1-based.
using Chain = std::vector<int>;

inline constexpr int kMaxObjects = 24;

// Shorter chains first, then lexicographic.
bool chain_before(const Chain& a, const Chain& b);

// Calls f(chain) for every nonempty chain in 1..n, in chain_before order.
template <class F>
void for_each_chain(int n, F&& f);

// min{k : dims[k] > 0}, +inf for the zero space.
ExtendedInt rel_height(const model::GradedDims& dims);

struct Pseudoheight {
  ExtendedInt ph = ExtendedInt::pos_inf();
  ExtendedInt ph_ac = ExtendedInt::pos_inf();
  std::optional<Chain> witness;
};

// Exact pseudoheight: minimum over chains of the relative heights around the
// cycle a_0 -> ... -> a_p -> S^-1 a_0, minus p. Needs flags.exact_dims.
Pseudoheight pseudoheight(const model::CollectionSpec& spec);

// Value of one chain, for tests and reports.
ExtendedInt chain_value(const model::CollectionSpec& spec, const Chain& chain);

struct PhBounds {
  ExtendedInt lower = ExtendedInt::neg_inf();
  ExtendedInt upper = ExtendedInt::pos_inf();
  std::optional<Chain> witness;  // a chain attaining `upper`
};

// Anticanonical pseudoheight interval from three-valued Ext knowledge.
PhBounds qualitative_ph_bounds(const model::QualitativeTable& table);
PhBounds qualitative_ph_bounds(const model::CollectionSpec& spec, bool use_exact = true);

enum class Tri { True, False, Unknown };
const char* to_string(Tri t);

struct Connectivity {
  Tri value = Tri::Unknown;
  std::optional<Chain> witness;
};

// Whether some chain has nonzero Ext^1 on every link of its cycle through
// the anticanonical twist of a_0.
Connectivity cyclically_ext1_connected(const model::QualitativeTable& table);

template <class F>
void for_each_chain(int n, F&& f) {
  if (n < 1 || n > kMaxObjects) throw ValidationError("chain enumeration supports 1..24 objects");
  // All 2^n - 1 subsets: by size, then lexicographically.
  for (int len = 1; len <= n; ++len) {
    Chain c(len);
    for (int i = 0; i < len; ++i) c[i] = i + 1;
    for (;;) {
      f(static_cast<const Chain&>(c));
      int i = len - 1;
      while (i >= 0 && c[i] == n - (len - 1 - i)) --i;
      if (i < 0) break;
      ++c[i];
      for (int j = i + 1; j < len; ++j) c[j] = c[j - 1] + 1;
    }
  }
}

}  // namespace excol::ph
