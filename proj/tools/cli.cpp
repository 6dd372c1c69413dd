#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <set>
#include <sstream>

#include "excol/error.hpp"
#include "excol/exactlin/dispatch.hpp"
#include "excol/fixtures/fixtures.hpp"
#include "excol/fullness/fullness.hpp"
#include "excol/height/height_report.hpp"
#include "excol/model/document.hpp"
#include "excol/model/validate.hpp"
#include "excol/nhh/complex.hpp"
#include "excol/nhh/spectral_sequence.hpp"
#include "excol/pseudoheight/pseudoheight.hpp"

#ifndef EXCOL_DEFAULT_FIXTURE_DIR
#define EXCOL_DEFAULT_FIXTURE_DIR "fixtures"
#endif

namespace excol::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Config {
  std::string command;
  std::string input;
  bool json_out = false;
  std::optional<int> max_page;
  bool anticanonical = false;
  std::optional<std::vector<std::size_t>> hoh;
  std::optional<model::FieldSpec> field;
};

std::string chain_string(const std::optional<ph::Chain>& c) {
  if (!c) return "none";
  std::string s = "(";
  for (std::size_t i = 0; i < c->size(); ++i) s += (i ? "," : "") + std::to_string((*c)[i]);
  return s + ")";
}

json chain_json(const std::optional<ph::Chain>& c) { return c ? json(*c) : json(nullptr); }

json ext_json(ExtendedInt v) { return v.finite() ? json(v.value()) : json(v.to_string()); }

json dims_json(const std::map<nhh::Bidegree, std::size_t>& dims) {
  json out = json::array();
  for (const auto& [bd, d] : dims) {
    out.push_back({{"column", bd.first}, {"q", bd.second}, {"t", bd.first + bd.second}, {"dim", d}});
  }
  return out;
}

// (-p, q) grid, q decreasing downwards.
void print_grid(std::ostream& out, const std::map<nhh::Bidegree, std::size_t>& dims) {
  if (dims.empty()) {
    out << "  (zero)\n";
    return;
  }
  int cmin = 0, qmin = dims.begin()->first.second, qmax = qmin;
  for (const auto& [bd, d] : dims) {
    cmin = std::min(cmin, bd.first);
    qmin = std::min(qmin, bd.second);
    qmax = std::max(qmax, bd.second);
  }
  out << std::setw(6) << "q\\-p";
  for (int c = cmin; c <= 0; ++c) out << std::setw(7) << c;
  out << "\n";
  for (int q = qmax; q >= qmin; --q) {
    out << std::setw(6) << q;
    for (int c = cmin; c <= 0; ++c) {
      auto it = dims.find({c, q});
      if (it == dims.end()) {
        out << std::setw(7) << ".";
      } else {
        out << std::setw(7) << it->second;
      }
    }
    out << "\n";
  }
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int cmd_validate(const Config& cfg, const model::CollectionSpec& spec, std::ostream& out) {
  const auto rep = model::validate(spec);
  if (cfg.json_out) {
    emit(out, rep.to_json());
  } else {
    for (const auto& c : rep.checks) {
      out << (c.ok ? "ok   " : "FAIL ") << c.name;
      if (!c.detail.empty()) out << ": " << c.detail;
      out << "\n";
    }
    out << "relations tested: " << rep.relations_tested << " (length <= " << rep.relation_length << ")\n";
    out << rep.failures() << " failure(s)\n";
  }
  return rep.ok() ? 0 : 1;
}

int cmd_pseudoheight(const Config& cfg, const model::CollectionSpec& spec, std::ostream& out) {
  json j;
  if (spec.flags.exact_dims) {
    const auto p = ph::pseudoheight(spec);
    j = {{"exact", true}, {"ph", ext_json(p.ph)}, {"ph_ac", ext_json(p.ph_ac)}, {"witness", chain_json(p.witness)}};
  } else {
    const auto table = model::build_table(spec);
    const auto b = ph::qualitative_ph_bounds(table);
    const auto conn = ph::cyclically_ext1_connected(table);
    const height::Interval ac{b.lower, b.upper};
    j = {{"exact", false},
         {"ph_ac", ac.to_json()},
         {"ph", ac.shifted(spec.dim_x).to_json()},
         {"witness", chain_json(b.witness)},
         {"cyclically_ext1_connected", ph::to_string(conn.value)},
         {"connectivity_witness", chain_json(conn.witness)}};
  }
  if (cfg.json_out) {
    emit(out, j);
    return 0;
  }
  auto text = [](const json& v) { return v.is_array() ? "[" + v[0].dump() + ", " + v[1].dump() + "]" : v.dump(); };
  if (cfg.anticanonical) {
    out << "ph_ac = " << text(j["ph_ac"]) << "\n";
  } else {
    out << "ph = " << text(j["ph"]) << "\n";
    out << "ph_ac = " << text(j["ph_ac"]) << "\n";
  }
  out << "witness = " << (j["witness"].is_null() ? "none" : chain_string(j["witness"].get<ph::Chain>())) << "\n";
  if (j.contains("cyclically_ext1_connected")) {
    out << "cyclically Ext^1-connected: " << j["cyclically_ext1_connected"].get<std::string>();
    if (!j["connectivity_witness"].is_null()) out << " via " << chain_string(j["connectivity_witness"].get<ph::Chain>());
    out << "\n";
  }
  return 0;
}

int cmd_e1(const Config& cfg, const model::CollectionSpec& spec, std::ostream& out) {
  const auto e1 = nhh::build_e1(spec);
  if (cfg.json_out) {
    json terms = json::array();
    for (const auto& [t, list] : e1.by_degree) {
      for (const auto& term : list) {
        terms.push_back({{"chain", term.chain}, {"degs", term.degs}, {"dims", term.dims}, {"column", term.column()},
                         {"q", term.q}, {"t", term.t}, {"dim", term.dim}});
      }
    }
    emit(out, {{"dims", dims_json(e1.dims)}, {"terms", terms}});
    return 0;
  }
  out << "E_1 (rows q, columns -p)\n";
  print_grid(out, e1.dims);
  for (const auto& [t, list] : e1.by_degree) {
    out << "t = " << t << ":";
    for (const auto& term : list) out << " " << term.name() << "[" << term.dim << "]";
    out << "\n";
  }
  return 0;
}

int cmd_ss(const Config& cfg, const model::CollectionSpec& spec, std::ostream& out) {
  const auto fspec = cfg.field.value_or(spec.field);
  return lin::with_field(fspec.p, [&](const auto& k) {
    const auto cx = nhh::assemble_differential(k, spec);
    const int max_page = cfg.max_page.value_or(std::max<int>(2, static_cast<int>(spec.max_arity())));
    const auto ss = nhh::spectral_sequence(k, cx, max_page);
    if (cfg.json_out) {
      json pages = json::array();
      for (const auto& pg : ss.pages) pages.push_back({{"r", pg.r}, {"dims", dims_json(pg.dims)}});
      json j = {{"field", fspec.to_string()},
                {"pages", pages},
                {"infinity", dims_json(ss.infinity.dims)},
                {"stable_from", ss.stable_from},
                {"complete", spec.flags.higher_products_complete}};
      if (spec.flags.higher_products_complete) {
        json nhh = json::object();
        for (const auto& [t, d] : nhh::total_cohomology(k, cx)) nhh[std::to_string(t)] = d;
        j["nhh"] = nhh;
      }
      emit(out, j);
      return 0;
    }
    for (const auto& pg : ss.pages) {
      out << "E_" << pg.r << " (rows q, columns -p)\n";
      print_grid(out, pg.dims);
    }
    out << "E_inf (rows q, columns -p)\n";
    print_grid(out, ss.infinity.dims);
    if (ss.stable_from > 0) {
      out << "stable from E_" << ss.stable_from << "\n";
    } else {
      out << "not stable by E_" << max_page << "\n";
    }
    if (!spec.flags.higher_products_complete) out << "warning: higher products incomplete, E_inf uses only the supplied ones\n";
    return 0;
  });
}

void print_height(std::ostream& out, const height::HeightResult& h) {
  out << "ph = " << h.ph.to_string() << " (ph_ac = " << h.ph_ac.to_string() << "), witness " << chain_string(h.ph_witness)
      << "\n";
  out << "he = " << h.height.to_string() << " (he_ac = " << h.height_ac.to_string() << ")\n";
  out << "shortcut: " << height::to_string(h.used_shortcut) << "\n";
  if (h.page > 0) out << "read from page E_" << h.page << "\n";
  if (!h.nhh.empty()) {
    out << "NHH dims: {";
    bool first = true;
    for (const auto& [t, d] : h.nhh) {
      out << (first ? "" : ", ") << t << ":" << d;
      first = false;
    }
    out << "}\n";
  }
  for (const auto& w : h.warnings) out << "warning: " << w << "\n";
}

int cmd_height(const Config& cfg, const model::CollectionSpec& spec, std::ostream& out) {
  const auto h = height::height(spec, cfg.field);
  if (cfg.json_out) {
    emit(out, height::to_json(h));
  } else {
    print_height(out, h);
  }
  return 0;
}

int cmd_report(const Config& cfg, const model::CollectionSpec& spec, std::ostream& out) {
  const auto rep = height::comparison_report(height::height(spec, cfg.field), cfg.hoh);
  if (cfg.json_out) {
    emit(out, rep.to_json());
    return 0;
  }
  print_height(out, rep.result);
  out << "HOH^k(X) -> HOH^k(A): isomorphism for k <= " << rep.iso_range.to_string() << ", monomorphism for k = "
      << rep.mono_degree.to_string() << "\n";
  out << "deformation equivalent: " << (rep.deformation_equivalent ? "yes" : "no") << "\n";
  if (rep.hoh_a) {
    for (std::size_t k = 0; k < rep.hoh_a->size(); ++k) out << "HOH^" << k << "(A) = " << (*rep.hoh_a)[k] << "\n";
  }
  return 0;
}

int cmd_fullness(const Config& cfg, const model::CollectionSpec& spec, std::ostream& out) {
  const auto v = fullness::fullness(spec, cfg.field);
  if (cfg.json_out) {
    emit(out, v.to_json());
  } else {
    out << fullness::to_string(v.status) << ": " << v.reason << "\n";
    if (v.pairing_value) out << "pairing value = " << *v.pairing_value << "\n";
  }
  return 0;
}

int cmd_fixture(const Config& cfg, std::ostream& out) {
  if (cfg.input == "list") {
    const auto names = fixtures::names();
    if (cfg.json_out) {
      emit(out, names);
    } else {
      for (const auto& n : names) out << n << "\n";
    }
    return 0;
  }
  out << model::serialize_text(fixtures::make(cfg.input));
  return 0;
}

std::vector<std::size_t> parse_hoh(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long v = -1;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || v < 0) throw FormatError("--hoh expects non-negative integers, got '" + item + "'");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

}  // namespace

std::string fixture_dir() {
  if (const char* env = std::getenv("EXCOL_FIXTURES"); env != nullptr && *env != '\0') return env;
  return EXCOL_DEFAULT_FIXTURE_DIR;
}

std::string resolve_input(const std::string& input) {
  std::error_code ec;
  if (fs::is_regular_file(input, ec)) return input;
  if (fs::is_regular_file(input + ".json", ec)) return input + ".json";
  std::string stem = fs::path(input).filename().string();
  if (stem.size() > 5 && stem.ends_with(".json")) stem.resize(stem.size() - 5);
  const fs::path candidate = fs::path(fixture_dir()) / (stem + ".json");
  if (fs::is_regular_file(candidate, ec)) return candidate.string();
  throw FormatError("cannot find input '" + input + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  static const std::set<std::string> commands = {"validate", "pseudoheight", "e1",       "ss",
                                                 "height",   "report",       "fullness", "fixture"};
  Config cfg;
  std::string hoh_text, field_text;
  CLI::App app{"Exceptional collections: pseudoheight, normal Hochschild cohomology and height", "excol"};
  app.add_option("command", cfg.command, "validate|pseudoheight|e1|ss|height|report|fullness|fixture")
      ->required()
      ->check(CLI::IsMember(commands));
  app.add_option("input", cfg.input, "collection document, or fixture name (or 'list' for fixture)")->required();
  app.add_flag("--json", cfg.json_out, "machine-readable output");
  app.add_option("--max-page", cfg.max_page, "last spectral sequence page")->check(CLI::PositiveNumber);
  app.add_flag("--anticanonical", cfg.anticanonical, "report anticanonical values");
  app.add_option("--hoh", hoh_text, "dims of HOH^0(X), HOH^1(X), ...");
  app.add_option("--field", field_text, "Q, Fp or Fp:p");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (!hoh_text.empty()) cfg.hoh = parse_hoh(hoh_text);
    if (!field_text.empty()) cfg.field = model::FieldSpec::parse(field_text);
    if (cfg.command == "fixture") return cmd_fixture(cfg, out);

    const auto spec = model::load_file(resolve_input(cfg.input));
    if (cfg.command == "validate") return cmd_validate(cfg, spec, out);
    if (cfg.command == "pseudoheight") return cmd_pseudoheight(cfg, spec, out);
    if (cfg.command == "e1") return cmd_e1(cfg, spec, out);
    if (cfg.command == "ss") return cmd_ss(cfg, spec, out);
    if (cfg.command == "height") return cmd_height(cfg, spec, out);
    if (cfg.command == "report") return cmd_report(cfg, spec, out);
    return cmd_fullness(cfg, spec, out);
  } catch (const FormatError& e) {
    err << "format error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace excol::cli
