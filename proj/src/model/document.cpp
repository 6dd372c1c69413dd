#include "excol/model/document.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "excol/error.hpp"

namespace excol::model {

using nlohmann::json;

namespace {

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw FormatError(where + ": missing key '" + key + "'");
  return obj.at(key);
}

int as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw FormatError(where + ": expected an integer");
  return v.get<int>();
}

std::size_t as_index(const json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 0) throw FormatError(where + ": expected a nonnegative index");
  return v.get<std::size_t>();
}

std::vector<int> int_list(const json& v, const std::string& where) {
  if (!v.is_array()) throw FormatError(where + ": expected a list");
  std::vector<int> out;
  for (const auto& x : v) out.push_back(as_int(x, where));
  return out;
}

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw FormatError(where + ": expected an object");
  for (const auto& [k, v] : obj.items()) {
    if (!allowed.count(k)) throw FormatError(where + ": unknown key '" + k + "'");
  }
}

std::string path_string(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

void add_dims(GradedDims& g, int deg, long long dim, const std::string& where) {
  if (dim < 0) throw FormatError(where + ": negative dimension");
  if (g.count(deg)) throw FormatError(where + ": degree " + std::to_string(deg) + " given twice");
  if (dim > 0) g[deg] = static_cast<std::size_t>(dim);
}

ProductBlock parse_product(const json& j, const CollectionSpec& spec, bool higher) {
  const std::string where = higher ? "higher_products" : "products";
  check_keys(j, higher ? std::set<std::string>{"arity", "kind", "path", "degs", "out_deg", "entries"}
                       : std::set<std::string>{"kind", "path", "degs", "out_deg", "entries"},
             where);
  ProductBlock b;
  const json& kind = require(j, "kind", where);
  if (!kind.is_string()) throw FormatError(where + ": kind must be a string");
  b.kind = kind.get<std::string>();
  b.path = int_list(require(j, "path", where), where + ".path");
  b.degs = int_list(require(j, "degs", where), where + ".degs");
  b.out_deg = as_int(require(j, "out_deg", where), where + ".out_deg");
  const std::string tag = where + " " + b.kind + path_string(b.path);

  if (b.kind.find_first_not_of("AN") != std::string::npos) throw FormatError(tag + ": kind must be a word in A and N");
  const std::size_t k = b.kind.size();
  if (higher) {
    const auto arity = as_index(require(j, "arity", where), where + ".arity");
    if (arity < 3 || arity != k) throw FormatError(tag + ": arity must be >= 3 and match the kind");
  } else if (k != 2) {
    throw FormatError(tag + ": products must be binary; use higher_products");
  }
  if (b.degs.size() != k) throw FormatError(tag + ": need one degree per input");
  const GradedDims* out = spec.output_space(b.kind, b.path);
  if (!out) throw FormatError(tag + ": path does not give composable morphisms");

  std::vector<std::size_t> dims;
  for (std::size_t s = 0; s < k; ++s) {
    const GradedDims* g = spec.letter_space(b.kind[s], b.path[s], b.path[s + 1]);
    auto it = g->find(b.degs[s]);
    dims.push_back(it == g->end() ? 0 : it->second);
  }
  auto oit = out->find(b.out_deg);
  const std::size_t out_dim = oit == out->end() ? 0 : oit->second;

  const json& entries = require(j, "entries", where);
  if (!entries.is_array()) throw FormatError(tag + ": entries must be a list");
  std::set<std::pair<std::vector<std::size_t>, std::size_t>> seen;
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != k + 2) throw FormatError(tag + ": entry must be [inputs..., output, coef]");
    ProductEntry pe;
    for (std::size_t s = 0; s < k; ++s) {
      const auto idx = as_index(e[s], tag);
      if (idx >= dims[s]) throw FormatError(tag + ": input index " + std::to_string(idx) + " out of range in factor " + std::to_string(s));
      pe.inputs.push_back(idx);
    }
    pe.output = as_index(e[k], tag);
    if (pe.output >= out_dim) throw FormatError(tag + ": output index " + std::to_string(pe.output) + " out of range");
    pe.coef = parse_rational(e[k + 1]);
    if (!seen.insert({pe.inputs, pe.output}).second) throw FormatError(tag + ": duplicate entry");
    if (sgn(pe.coef) != 0) b.entries.push_back(std::move(pe));
  }
  return b;
}

TensorComponent parse_component(const json& j, const CollectionSpec& spec, const std::string& where) {
  check_keys(j, {"chain", "degs", "entries"}, where);
  TensorComponent c;
  c.chain = int_list(require(j, "chain", where), where + ".chain");
  c.degs = int_list(require(j, "degs", where), where + ".degs");
  if (c.chain.empty() || c.degs.size() != c.chain.size()) throw FormatError(where + ": chain and degs must have equal nonzero length");
  std::vector<std::size_t> dims;
  for (std::size_t s = 0; s < c.chain.size(); ++s) {
    if (c.chain[s] < 1 || c.chain[s] > spec.n || (s > 0 && c.chain[s - 1] >= c.chain[s])) {
      throw FormatError(where + ": chain must be strictly increasing in 1..n");
    }
  }
  for (std::size_t s = 0; s + 1 < c.chain.size(); ++s) dims.push_back(spec.a_dim(c.chain[s], c.chain[s + 1], c.degs[s]));
  dims.push_back(spec.n_dim(c.chain.front(), c.chain.back(), c.degs.back()));
  const json& entries = require(j, "entries", where);
  if (!entries.is_array()) throw FormatError(where + ": entries must be a list");
  std::set<std::vector<std::size_t>> seen;
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != dims.size() + 1) throw FormatError(where + ": entry must be [indices..., coef]");
    std::vector<std::size_t> idx;
    for (std::size_t s = 0; s < dims.size(); ++s) {
      idx.push_back(as_index(e[s], where));
      if (idx.back() >= dims[s]) throw FormatError(where + ": index out of range in factor " + std::to_string(s));
    }
    if (!seen.insert(idx).second) throw FormatError(where + ": duplicate entry");
    mpq_class v = parse_rational(e[dims.size()]);
    if (sgn(v) != 0) c.entries.emplace_back(std::move(idx), std::move(v));
  }
  return c;
}

}  // namespace

mpq_class parse_rational(const json& v) {
  if (v.is_number_integer()) return mpq_class(v.get<long>());
  if (!v.is_string()) throw FormatError("coefficient must be a string \"p/q\" or an integer");
  mpq_class q;
  const auto s = v.get<std::string>();
  if (s.empty() || q.set_str(s, 10) != 0) throw FormatError("bad rational '" + s + "'");
  if (q.get_den() == 0) throw FormatError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rational_to_string(const mpq_class& q) { return q.get_str(); }

CollectionSpec parse(const json& doc) {
  check_keys(doc, {"n", "dim_x", "field", "objects", "K_squared", "flags", "ext", "serre_ext", "products",
                   "higher_products", "qualitative", "metadata", "fullness"},
             "document");
  CollectionSpec spec;
  spec.n = as_int(require(doc, "n", "document"), "n");
  spec.dim_x = as_int(require(doc, "dim_x", "document"), "dim_x");
  if (spec.n < 1) throw FormatError("n must be at least 1");
  if (spec.dim_x < 0) throw FormatError("dim_x must be nonnegative");
  if (doc.contains("field")) {
    if (!doc["field"].is_string()) throw FormatError("field must be a string");
    spec.field = FieldSpec::parse(doc["field"].get<std::string>());
  }
  if (doc.contains("objects")) {
    const json& objs = doc["objects"];
    if (!objs.is_array()) throw FormatError("objects must be a list");
    if (!objs.empty() && static_cast<int>(objs.size()) != spec.n) throw FormatError("objects must list all n objects");
    for (const auto& o : objs) {
      check_keys(o, {"label", "canonical_degree"}, "objects");
      ObjectInfo info;
      if (o.contains("label")) {
        if (!o["label"].is_string()) throw FormatError("objects: label must be a string");
        info.label = o["label"].get<std::string>();
      }
      if (o.contains("canonical_degree") && !o["canonical_degree"].is_null()) {
        info.canonical_degree = as_int(o["canonical_degree"], "canonical_degree");
      }
      spec.objects.push_back(std::move(info));
    }
  }
  if (doc.contains("K_squared") && !doc["K_squared"].is_null()) spec.k_squared = as_int(doc["K_squared"], "K_squared");
  if (doc.contains("flags")) {
    const json& f = doc["flags"];
    check_keys(f, {"is_surface", "ample_canonical", "h2_anticanonical_nonzero", "line_bundles", "exact_dims",
                   "higher_products_complete"},
               "flags");
    auto flag = [&](const char* key, bool& out) {
      if (!f.contains(key)) return;
      if (!f[key].is_boolean()) throw FormatError(std::string("flags.") + key + " must be a boolean");
      out = f[key].get<bool>();
    };
    flag("is_surface", spec.flags.is_surface);
    flag("ample_canonical", spec.flags.ample_canonical);
    flag("h2_anticanonical_nonzero", spec.flags.h2_anticanonical_nonzero);
    flag("line_bundles", spec.flags.line_bundles);
    flag("exact_dims", spec.flags.exact_dims);
    flag("higher_products_complete", spec.flags.higher_products_complete);
  }

  auto in_range = [&](int i) { return i >= 1 && i <= spec.n; };
  if (doc.contains("ext")) {
    if (!doc["ext"].is_array()) throw FormatError("ext must be a list");
    for (const auto& e : doc["ext"]) {
      check_keys(e, {"src", "dst", "deg", "dim"}, "ext");
      const int src = as_int(require(e, "src", "ext"), "ext.src");
      const int dst = as_int(require(e, "dst", "ext"), "ext.dst");
      const int deg = as_int(require(e, "deg", "ext"), "ext.deg");
      const auto& dimv = require(e, "dim", "ext");
      if (!dimv.is_number_integer()) throw FormatError("ext.dim must be an integer");
      if (!in_range(src) || !in_range(dst)) throw FormatError("ext: object index out of range");
      const std::string tag = "ext(" + std::to_string(src) + "," + std::to_string(dst) + ")";
      if (src >= dst) {
        if (dimv.get<long long>() == 0) continue;
        throw ValidationError(tag + ": exceptional collections have Ext only from earlier to later objects");
      }
      add_dims(spec.A[{src, dst}], deg, dimv.get<long long>(), tag);
      if (spec.A[{src, dst}].empty()) spec.A.erase({src, dst});
    }
  }
  if (doc.contains("serre_ext")) {
    if (!doc["serre_ext"].is_array()) throw FormatError("serre_ext must be a list");
    for (const auto& e : doc["serre_ext"]) {
      check_keys(e, {"twist_src", "from", "deg", "dim"}, "serre_ext");
      const int i = as_int(require(e, "twist_src", "serre_ext"), "serre_ext.twist_src");
      const int j = as_int(require(e, "from", "serre_ext"), "serre_ext.from");
      const int deg = as_int(require(e, "deg", "serre_ext"), "serre_ext.deg");
      const auto& dimv = require(e, "dim", "serre_ext");
      if (!dimv.is_number_integer()) throw FormatError("serre_ext.dim must be an integer");
      if (!in_range(i) || !in_range(j)) throw FormatError("serre_ext: object index out of range");
      const std::string tag = "serre_ext(" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (i > j) throw FormatError(tag + ": requires twist_src <= from");
      add_dims(spec.N[{i, j}], deg, dimv.get<long long>(), tag);
      if (spec.N[{i, j}].empty()) spec.N.erase({i, j});
    }
  }

  std::set<std::tuple<std::string, std::vector<int>, std::vector<int>>> seen_blocks;
  auto add_block = [&](ProductBlock b) {
    if (!seen_blocks.insert({b.kind, b.path, b.degs}).second) {
      throw FormatError("product block " + b.kind + path_string(b.path) + " given twice");
    }
    spec.products.push_back(std::move(b));
  };
  if (doc.contains("products")) {
    if (!doc["products"].is_array()) throw FormatError("products must be a list");
    for (const auto& p : doc["products"]) add_block(parse_product(p, spec, false));
  }
  if (doc.contains("higher_products")) {
    if (!doc["higher_products"].is_array()) throw FormatError("higher_products must be a list");
    for (const auto& p : doc["higher_products"]) add_block(parse_product(p, spec, true));
  }

  if (doc.contains("qualitative")) {
    if (!doc["qualitative"].is_array()) throw FormatError("qualitative must be a list");
    std::set<std::tuple<int, int, int>> seen;
    for (const auto& q : doc["qualitative"]) {
      check_keys(q, {"src", "dst", "deg", "status", "source"}, "qualitative");
      QualEntry e;
      e.src = as_int(require(q, "src", "qualitative"), "qualitative.src");
      e.dst = as_int(require(q, "dst", "qualitative"), "qualitative.dst");
      e.deg = as_int(require(q, "deg", "qualitative"), "qualitative.deg");
      const auto& st = require(q, "status", "qualitative");
      if (!st.is_string()) throw FormatError("qualitative.status must be a string");
      e.status = status_from_string(st.get<std::string>());
      if (q.contains("source")) {
        if (!q["source"].is_string()) throw FormatError("qualitative.source must be a string");
        e.source = q["source"].get<std::string>();
      }
      if (e.src < 1 || e.dst > 2 * spec.n || e.src >= e.dst || e.dst > e.src + spec.n) {
        throw FormatError("qualitative: need 1 <= src < dst <= src + n within the extended collection");
      }
      if (!seen.insert({e.src, e.dst, e.deg}).second) throw FormatError("qualitative: entry given twice");
      spec.qualitative.push_back(std::move(e));
    }
  }
  if (doc.contains("metadata")) {
    if (!doc["metadata"].is_object()) throw FormatError("metadata must be an object");
    spec.metadata = doc["metadata"];
  }
  if (doc.contains("fullness")) {
    const json& f = doc["fullness"];
    check_keys(f, {"xi", "pairing"}, "fullness");
    FullnessData data;
    for (const char* key : {"xi", "pairing"}) {
      const json& list = require(f, key, "fullness");
      if (!list.is_array()) throw FormatError(std::string("fullness.") + key + " must be a list");
      auto& out = std::string(key) == "xi" ? data.xi : data.pairing;
      for (const auto& c : list) out.push_back(parse_component(c, spec, std::string("fullness.") + key));
    }
    spec.fullness = std::move(data);
  }
  canonicalize(spec);
  return spec;
}

CollectionSpec parse_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed document: ") + e.what());
  }
  return parse(doc);
}

CollectionSpec load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str());
}

json serialize(const CollectionSpec& spec) {
  json doc;
  doc["n"] = spec.n;
  doc["dim_x"] = spec.dim_x;
  doc["field"] = spec.field.to_string();
  doc["objects"] = json::array();
  for (const auto& o : spec.objects) {
    json j;
    j["label"] = o.label;
    j["canonical_degree"] = o.canonical_degree ? json(*o.canonical_degree) : json(nullptr);
    doc["objects"].push_back(j);
  }
  doc["K_squared"] = spec.k_squared ? json(*spec.k_squared) : json(nullptr);
  doc["flags"] = {{"is_surface", spec.flags.is_surface},
                  {"ample_canonical", spec.flags.ample_canonical},
                  {"h2_anticanonical_nonzero", spec.flags.h2_anticanonical_nonzero},
                  {"line_bundles", spec.flags.line_bundles},
                  {"exact_dims", spec.flags.exact_dims},
                  {"higher_products_complete", spec.flags.higher_products_complete}};
  doc["ext"] = json::array();
  for (const auto& [key, dims] : spec.A) {
    for (const auto& [deg, dim] : dims) {
      doc["ext"].push_back({{"src", key.first}, {"dst", key.second}, {"deg", deg}, {"dim", dim}});
    }
  }
  doc["serre_ext"] = json::array();
  for (const auto& [key, dims] : spec.N) {
    for (const auto& [deg, dim] : dims) {
      doc["serre_ext"].push_back({{"twist_src", key.first}, {"from", key.second}, {"deg", deg}, {"dim", dim}});
    }
  }
  doc["products"] = json::array();
  doc["higher_products"] = json::array();
  for (const auto& b : spec.products) {
    json j;
    j["kind"] = b.kind;
    j["path"] = b.path;
    j["degs"] = b.degs;
    j["out_deg"] = b.out_deg;
    j["entries"] = json::array();
    for (const auto& e : b.entries) {
      json row = json::array();
      for (auto i : e.inputs) row.push_back(i);
      row.push_back(e.output);
      row.push_back(rational_to_string(e.coef));
      j["entries"].push_back(row);
    }
    if (b.arity() == 2) {
      doc["products"].push_back(j);
    } else {
      j["arity"] = b.arity();
      doc["higher_products"].push_back(j);
    }
  }
  doc["qualitative"] = json::array();
  for (const auto& q : spec.qualitative) {
    doc["qualitative"].push_back(
        {{"src", q.src}, {"dst", q.dst}, {"deg", q.deg}, {"status", to_string(q.status)}, {"source", q.source}});
  }
  doc["metadata"] = spec.metadata;
  if (spec.fullness) {
    auto comp = [](const TensorComponent& c) {
      json j;
      j["chain"] = c.chain;
      j["degs"] = c.degs;
      j["entries"] = json::array();
      for (const auto& [idx, v] : c.entries) {
        json row = json::array();
        for (auto i : idx) row.push_back(i);
        row.push_back(rational_to_string(v));
        j["entries"].push_back(row);
      }
      return j;
    };
    json f;
    f["xi"] = json::array();
    f["pairing"] = json::array();
    for (const auto& c : spec.fullness->xi) f["xi"].push_back(comp(c));
    for (const auto& c : spec.fullness->pairing) f["pairing"].push_back(comp(c));
    doc["fullness"] = f;
  }
  return doc;
}

std::string serialize_text(const CollectionSpec& spec) { return serialize(spec).dump(1) + "\n"; }

}  // namespace excol::model
