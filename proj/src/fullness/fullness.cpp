#include "excol/fullness/fullness.hpp"

#include <map>
#include <set>

#include "excol/error.hpp"
#include "excol/exactlin/dispatch.hpp"
#include "excol/exactlin/subspace.hpp"
#include "excol/fixtures/fixtures.hpp"
#include "excol/nhh/complex.hpp"
#include "excol/nhh/spectral_sequence.hpp"

namespace excol::fullness {

namespace {

std::string describe(const model::TensorComponent& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.chain.size(); ++i) s += (i ? "," : "") + std::to_string(c.chain[i]);
  s += ") degs (";
  for (std::size_t i = 0; i < c.degs.size(); ++i) s += (i ? "," : "") + std::to_string(c.degs[i]);
  return s + ")";
}

// Locates the summand of C^0 a component lives in and checks its entries.
const nhh::ChainTerm& locate(const nhh::E1Page& e1, const model::TensorComponent& c, const char* what) {
  const nhh::ChainTerm* term = e1.find(c.chain, c.degs);
  if (term == nullptr) throw ValidationError(std::string(what) + " component " + describe(c) + " is not a nonzero summand");
  if (term->t != 0) {
    throw ValidationError(std::string(what) + " component " + describe(c) + " has total degree " +
                          std::to_string(term->t) + ", expected 0");
  }
  for (const auto& [idx, coef] : c.entries) {
    if (idx.size() != term->dims.size()) throw ValidationError(std::string(what) + " entry of wrong length in " + describe(c));
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (idx[i] >= term->dims[i]) throw ValidationError(std::string(what) + " index out of range in " + describe(c));
    }
  }
  return *term;
}

template <class Field>
FullnessVerdict run_full_check(const Field& k, const model::CollectionSpec& spec,
                               const std::vector<model::TensorComponent>& xi,
                               const std::vector<model::TensorComponent>& pairing) {
  FullnessVerdict out;
  const auto cx = nhh::assemble_differential(k, spec);
  const auto& e1 = cx.e1;

  std::optional<int> p;
  std::map<std::size_t, typename Field::Element> coords;
  for (const auto& c : xi) {
    const auto& term = locate(e1, c, "xi");
    if (p && *p != term.p) throw ValidationError("xi mixes chain lengths");
    p = term.p;
    for (const auto& [idx, coef] : c.entries) {
      auto& v = coords.try_emplace(term.offset + term.local_index(idx), k.zero()).first->second;
      v = k.add(v, k.from_rational(coef));
    }
  }
  for (const auto& c : pairing) {
    const auto& term = locate(e1, c, "pairing");
    if (p && *p != term.p) throw ValidationError("pairing chain length differs from xi");
  }
  out.p = p;

  lin::SparseVector<Field> v;
  for (auto& [i, a] : coords) {
    if (!k.is_zero(a)) v.emplace_back(i, a);
  }
  if (v.empty()) {
    out.reason = "xi is zero";
    return out;
  }
  if (!spec.flags.higher_products_complete) {
    out.reason = "the cocycle condition needs every higher product";
    return out;
  }

  if (auto it = cx.d.find(0); it != cx.d.end() && !it->second.apply(k, v).empty()) {
    out.reason = "xi is not a cocycle";
    return out;
  }
  out.cocycle = true;
  if (auto it = cx.d.find(-1); it != cx.d.end()) {
    const auto& dm = it->second;
    if (lin::image(k, dm, lin::Subspace<Field>::full(k, dm.cols())).contains(k, v)) {
      out.reason = "xi is a coboundary";
      return out;
    }
  }

  const auto ss = nhh::spectral_sequence(k, cx, 1);
  for (const auto& [bd, d] : ss.infinity.dims) {
    const int pp = -bd.first;
    if (bd.second == pp && pp > *p && d > 0) {
      out.reason = "E_inf^{" + std::to_string(-pp) + "," + std::to_string(pp) + "} is nonzero, so xi is not in the last column";
      return out;
    }
  }

  std::map<int, typename Field::Element> values;
  for (const auto& c : pairing) {
    const auto& term = locate(e1, c, "pairing");
    auto& val = values.try_emplace(c.chain.front(), k.zero()).first->second;
    for (const auto& [idx, coef] : c.entries) {
      k.add_mul(val, k.from_rational(coef), lin::coeff(k, v, term.offset + term.local_index(idx)));
    }
  }
  for (const auto& [i, val] : values) {
    if (!k.is_zero(val)) {
      out.status = Verdict::Full;
      out.object = i;
      out.pairing_value = k.to_string(val);
      out.reason = "xi pairs nonzero against object " + std::to_string(i);
      return out;
    }
  }
  out.reason = "every pairing vanishes on xi";
  return out;
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::NotFull:
      return "NOT_FULL";
    case Verdict::Full:
      return "FULL";
    case Verdict::Inconclusive:
      break;
  }
  return "INCONCLUSIVE";
}

nlohmann::json FullnessVerdict::to_json() const {
  nlohmann::json j;
  j["status"] = to_string(status);
  j["reason"] = reason;
  j["height"] = height ? height->to_json() : nlohmann::json(nullptr);
  j["p"] = p ? nlohmann::json(*p) : nlohmann::json(nullptr);
  j["object"] = object ? nlohmann::json(*object) : nlohmann::json(nullptr);
  j["pairing_value"] = pairing_value ? nlohmann::json(*pairing_value) : nlohmann::json(nullptr);
  j["cocycle"] = cocycle;
  return j;
}

std::optional<FullnessVerdict> not_full_check(const height::Interval& h) {
  if (!(h.lo > ExtendedInt(0))) return std::nullopt;
  FullnessVerdict out;
  out.status = Verdict::NotFull;
  out.height = h;
  out.reason = "height " + h.to_string() + " is positive";
  return out;
}

FullnessVerdict full_check(const model::CollectionSpec& spec, const std::vector<model::TensorComponent>& xi,
                           const std::vector<model::TensorComponent>& pairing, std::optional<model::FieldSpec> field) {
  const auto fs = field.value_or(spec.field);
  return lin::with_field(fs.p, [&](const auto& k) { return run_full_check(k, spec, xi, pairing); });
}

FullnessVerdict fullness(const model::CollectionSpec& spec, std::optional<model::FieldSpec> field) {
  const auto h = height::height(spec, field);
  if (auto v = not_full_check(h.height)) return *v;
  if (!spec.fullness) {
    FullnessVerdict out;
    out.height = h.height;
    out.reason = "height is not positive and no fullness certificate is supplied";
    return out;
  }
  auto out = full_check(spec, spec.fullness->xi, spec.fullness->pairing, field);
  out.height = h.height;
  return out;
}

model::CollectionSpec beilinson_fixture(int n) { return fixtures::beilinson(n); }

}  // namespace excol::fullness
