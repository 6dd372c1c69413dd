#pragma once

#include <gmpxx.h>

#include <string>

#include "excol/model/collection.hpp"
#include "excol/vendor_json.hpp"

namespace excol::model {

// Rationals travel as strings "p/q" (or "p"); plain JSON integers are also
// accepted on input.
mpq_class parse_rational(const nlohmann::json& v);
std::string rational_to_string(const mpq_class& q);

// Throws FormatError on malformed input and ValidationError when the input
// names a backwards Ext space.
CollectionSpec parse(const nlohmann::json& doc);
CollectionSpec parse_text(const std::string& text);
CollectionSpec load_file(const std::string& path);

// Canonical form: every key present, object keys sorted, lists sorted.
nlohmann::json serialize(const CollectionSpec& spec);
std::string serialize_text(const CollectionSpec& spec);

}  // namespace excol::model
