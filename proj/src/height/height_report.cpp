#include "excol/height/height_report.hpp"

#include <algorithm>

#include "excol/error.hpp"
#include "excol/exactlin/dispatch.hpp"
#include "excol/nhh/complex.hpp"
#include "excol/nhh/spectral_sequence.hpp"

namespace excol::height {

namespace {

nlohmann::json ext_json(ExtendedInt v) {
  if (v.finite()) return v.value();
  return v.to_string();
}

// Interval read from page E_r: below the first nonzero total degree NHH
// vanishes; column 0 only receives differentials, so a column-0 entry larger
// than everything that can hit it survives.
template <class Field>
Interval page_interval(const nhh::Page<Field>& page) {
  Interval out{ExtendedInt::pos_inf(), ExtendedInt::pos_inf()};
  std::map<int, std::size_t> col0, incoming;
  for (const auto& [bd, d] : page.dims) {
    const int t = bd.first + bd.second;
    if (ExtendedInt(t) < out.lo) out.lo = t;
    if (bd.first == 0) {
      col0[t] += d;
    } else {
      incoming[t + 1] += d;
    }
  }
  for (const auto& [t, d] : col0) {
    if (d > incoming[t]) {
      out.hi = t;
      break;
    }
  }
  return out;
}

}  // namespace

nlohmann::json Interval::to_json() const {
  if (point()) return ext_json(lo);
  return nlohmann::json::array({ext_json(lo), ext_json(hi)});
}

std::string Interval::to_string() const {
  if (point()) return lo.to_string();
  return "[" + lo.to_string() + ", " + hi.to_string() + "]";
}

const char* to_string(Shortcut s) {
  switch (s) {
    case Shortcut::Heph:
      return "heph";
    case Shortcut::Qualitative:
      return "qualitative";
    case Shortcut::None:
      break;
  }
  return "none";
}

std::optional<ExtendedInt> heph_shortcut(const model::CollectionSpec& spec) {
  if (spec.flags.exact_dims) {
    const auto p = ph::pseudoheight(spec);
    if (p.witness && p.witness->size() == 1) return p.ph;
    return std::nullopt;
  }
  const auto b = ph::qualitative_ph_bounds(spec);
  if (b.lower == b.upper && b.upper.finite() && b.witness && b.witness->size() == 1) {
    return b.upper + ExtendedInt(spec.dim_x);
  }
  return std::nullopt;
}

HeightResult height(const model::CollectionSpec& spec, std::optional<model::FieldSpec> field) {
  HeightResult out;
  const long dim_x = spec.dim_x;
  if (!spec.flags.exact_dims) {
    const auto b = ph::qualitative_ph_bounds(spec);
    out.ph_ac = {b.lower, b.upper};
    out.ph = out.ph_ac.shifted(dim_x);
    out.ph_witness = b.witness;
    out.used_shortcut = Shortcut::Qualitative;
    out.height = {out.ph.lo, ExtendedInt::pos_inf()};
    if (auto h = heph_shortcut(spec)) {
      out.height = {*h, *h};
      out.used_shortcut = Shortcut::Heph;
    }
    out.height_ac = out.height.shifted(-dim_x);
    return out;
  }

  const auto p = ph::pseudoheight(spec);
  out.ph = {p.ph, p.ph};
  out.ph_ac = {p.ph_ac, p.ph_ac};
  out.ph_witness = p.witness;
  const auto fs = field.value_or(spec.field);

  lin::with_field(fs.p, [&](const auto& k) {
    const auto cx = nhh::assemble_differential(k, spec);
    if (spec.flags.higher_products_complete) {
      out.nhh = nhh::total_cohomology(k, cx);
      ExtendedInt h = ExtendedInt::pos_inf();
      for (const auto& [t, d] : out.nhh) {
        if (d > 0) {
          h = t;
          break;
        }
      }
      out.height = {h, h};
      if (h.is_pos_inf()) out.warnings.push_back("normal Hochschild cohomology vanishes: height is +inf (the collection may be full)");
      return 0;
    }
    const int r = static_cast<int>(spec.max_arity());
    const auto ss = nhh::spectral_sequence(k, cx, r);
    out.page = r;
    out.height = page_interval(ss.page(r));
    return 0;
  });

  if (!spec.flags.higher_products_complete && p.witness && p.witness->size() == 1) {
    out.used_shortcut = Shortcut::Heph;
    out.height.lo = std::max(out.height.lo, p.ph);
    out.height.hi = std::min(out.height.hi, p.ph);
  }
  if (out.height.hi < out.height.lo) throw ComplexError("inconsistent height bounds " + out.height.to_string());
  out.height_ac = out.height.shifted(-dim_x);
  return out;
}

HeightReport comparison_report(const HeightResult& h, std::optional<std::vector<std::size_t>> hoh_x) {
  HeightReport rep;
  rep.result = h;
  const ExtendedInt lo = h.height.lo;
  rep.iso_range = lo - 2;
  rep.mono_degree = lo - 1;
  rep.deformation_equivalent = lo >= ExtendedInt(4);
  if (hoh_x) {
    rep.hoh_x = hoh_x;
    std::vector<std::size_t> a;
    for (std::size_t k = 0; k < hoh_x->size() && ExtendedInt(static_cast<long>(k)) <= rep.iso_range; ++k) {
      a.push_back((*hoh_x)[k]);
    }
    rep.hoh_a = a;
  }
  return rep;
}

std::vector<std::size_t> hkr_total(const std::map<std::pair<int, int>, std::size_t>& table) {
  std::vector<std::size_t> out;
  for (const auto& [qp, d] : table) {
    const int t = qp.first + qp.second;
    if (t < 0) throw Error("hkr_total: negative degree");
    if (out.size() <= static_cast<std::size_t>(t)) out.resize(t + 1, 0);
    out[t] += d;
  }
  return out;
}

nlohmann::json to_json(const HeightResult& h) {
  nlohmann::json j;
  j["ph"] = h.ph.to_json();
  j["ph_ac"] = h.ph_ac.to_json();
  j["ph_witness"] = h.ph_witness ? nlohmann::json(*h.ph_witness) : nlohmann::json(nullptr);
  j["height"] = h.height.to_json();
  j["height_ac"] = h.height_ac.to_json();
  j["used_shortcut"] = to_string(h.used_shortcut);
  j["page"] = h.page;
  j["nhh"] = nlohmann::json::object();
  for (const auto& [t, d] : h.nhh) j["nhh"][std::to_string(t)] = d;
  j["warnings"] = h.warnings;
  return j;
}

nlohmann::json HeightReport::to_json() const {
  nlohmann::json j = height::to_json(result);
  j["iso_range"] = ext_json(iso_range);
  j["mono_degree"] = ext_json(mono_degree);
  j["deformation_equivalent"] = deformation_equivalent;
  j["hoh_x"] = hoh_x ? nlohmann::json(*hoh_x) : nlohmann::json(nullptr);
  j["hoh_a"] = hoh_a ? nlohmann::json(*hoh_a) : nlohmann::json(nullptr);
  return j;
}

}  // namespace excol::height
