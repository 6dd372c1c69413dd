#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "excol/extended_int.hpp"
#include "excol/model/collection.hpp"
#include "excol/pseudoheight/pseudoheight.hpp"
#include "excol/vendor_json.hpp"

namespace excol::height {

struct Interval {
  ExtendedInt lo = ExtendedInt::neg_inf();
  ExtendedInt hi = ExtendedInt::pos_inf();

  bool point() const { return lo == hi; }
  Interval shifted(long by) const { return {lo + ExtendedInt(by), hi + ExtendedInt(by)}; }
  nlohmann::json to_json() const;  // a number for a point, [lo, hi] otherwise
  std::string to_string() const;
  bool operator==(const Interval&) const = default;
};

enum class Shortcut { None, Heph, Qualitative };
const char* to_string(Shortcut s);

struct HeightResult {
  Interval ph;  // a point for exact data
  Interval ph_ac;
  std::optional<ph::Chain> ph_witness;
  Interval height;
  Interval height_ac;
  Shortcut used_shortcut = Shortcut::None;
  // Page of the spectral sequence the interval was read from; 0 when the
  // total cohomology was computed.
  int page = 0;
  std::map<int, std::size_t> nhh;  // only with complete products
  std::vector<std::string> warnings;
};

// Exact data with complete products: a point, +inf with a warning if the
// normal cohomology vanishes. Incomplete products: an interval read from page
// E_r, r the largest supplied arity. Qualitative data: the pseudoheight
// interval, closed from above when the length-0 shortcut applies.
HeightResult height(const model::CollectionSpec& spec, std::optional<model::FieldSpec> field = std::nullopt);

// he = ph when the pseudoheight is attained on a single object. Exact data
// uses the exact pseudoheight, qualitative data the bounds.
std::optional<ExtendedInt> heph_shortcut(const model::CollectionSpec& spec);

struct HeightReport {
  HeightResult result;
  ExtendedInt iso_range;    // HOH^k(X) -> HOH^k(A) is an isomorphism for k <= iso_range
  ExtendedInt mono_degree;  // and a monomorphism for k = mono_degree
  bool deformation_equivalent = false;
  std::optional<std::vector<std::size_t>> hoh_x;
  std::optional<std::vector<std::size_t>> hoh_a;  // the degrees fixed by the isomorphism range

  nlohmann::json to_json() const;
};

HeightReport comparison_report(const HeightResult& h, std::optional<std::vector<std::size_t>> hoh_x);

// HOH^t = sum over p + q = t of h^q(Λ^p T), from a table (q, p) -> dim.
std::vector<std::size_t> hkr_total(const std::map<std::pair<int, int>, std::size_t>& table);

nlohmann::json to_json(const HeightResult& h);

}  // namespace excol::height
