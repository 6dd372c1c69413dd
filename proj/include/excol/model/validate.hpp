#pragma once

#include <string>
#include <vector>

#include "excol/model/collection.hpp"
#include "excol/vendor_json.hpp"

namespace excol::model {

struct Check {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct ValidationReport {
  std::vector<Check> checks;
  // Longest composable tuple on which the A-infinity relations were tested.
  std::size_t relation_length = 0;
  std::size_t relations_tested = 0;

  bool ok() const;
  std::size_t failures() const;
  nlohmann::json to_json() const;
};

// Checks exceptionality, index ranges, degree additivity, the A-infinity
// relations in bar form and consistency of the qualitative knowledge. Never
// throws for a parsed spec; failures are carried in the report.
ValidationReport validate(const CollectionSpec& spec);

// Throws ValidationError listing the failed checks.
void require_valid(const CollectionSpec& spec);

}  // namespace excol::model
