#pragma once

#include <optional>
#include <string>
#include <vector>

#include "excol/height/height_report.hpp"
#include "excol/model/collection.hpp"
#include "excol/vendor_json.hpp"

namespace excol::fullness {

enum class Verdict { NotFull, Full, Inconclusive };
const char* to_string(Verdict v);

struct FullnessVerdict {
  Verdict status = Verdict::Inconclusive;
  std::string reason;
  std::optional<height::Interval> height;  // evidence for NOT_FULL
  std::optional<int> p;                    // chain length of xi
  std::optional<int> object;               // a_0 of the nonzero pairing
  std::optional<std::string> pairing_value;
  bool cocycle = false;

  nlohmann::json to_json() const;
};

// NOT_FULL iff the height is known to be positive.
std::optional<FullnessVerdict> not_full_check(const height::Interval& h);

// Checks that xi is a degree-0 cocycle of the normal complex, not a
// coboundary, sitting in the last column p with E_inf^{-p',p'} = 0 for
// p' > p, then evaluates the pairing one object a_0 at a time. FULL if any
// value is nonzero. Wrong bidegree or shape throws ValidationError.
FullnessVerdict full_check(const model::CollectionSpec& spec, const std::vector<model::TensorComponent>& xi,
                           const std::vector<model::TensorComponent>& pairing,
                           std::optional<model::FieldSpec> field = std::nullopt);

// The not-full test first, then the certificate shipped with the spec, if any.
FullnessVerdict fullness(const model::CollectionSpec& spec, std::optional<model::FieldSpec> field = std::nullopt);

// Collection (O, ..., O(n-1)) on P^{n-1} with its xi and pairing, 2 <= n <= 6.
model::CollectionSpec beilinson_fixture(int n);

}  // namespace excol::fullness
