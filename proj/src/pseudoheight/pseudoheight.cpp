#include "excol/pseudoheight/pseudoheight.hpp"

#include "excol/error.hpp"

namespace excol::ph {

bool chain_before(const Chain& a, const Chain& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

ExtendedInt rel_height(const model::GradedDims& dims) {
  for (const auto& [deg, dim] : dims) {
    if (dim > 0) return deg;
  }
  return ExtendedInt::pos_inf();
}

ExtendedInt chain_value(const model::CollectionSpec& spec, const Chain& chain) {
  ExtendedInt v = 0;
  for (std::size_t s = 0; s + 1 < chain.size(); ++s) v = v + rel_height(spec.a_space(chain[s], chain[s + 1]));
  v = v + rel_height(spec.n_space(chain.front(), chain.back()));
  return v - static_cast<long>(chain.size() - 1);
}

Pseudoheight pseudoheight(const model::CollectionSpec& spec) {
  if (!spec.flags.exact_dims) throw ValidationError("pseudoheight needs exact Ext dimensions; use the qualitative bounds");
  Pseudoheight out;
  for_each_chain(spec.n, [&](const Chain& c) {
    const ExtendedInt v = chain_value(spec, c);
    if (v.is_pos_inf()) return;
    if (v < out.ph) {  // strict: earlier chains win ties
      out.ph = v;
      out.witness = c;
    }
  });
  out.ph_ac = out.ph - spec.dim_x;
  return out;
}

PhBounds qualitative_ph_bounds(const model::QualitativeTable& t) {
  const int n = t.n();
  PhBounds out;
  out.lower = ExtendedInt::pos_inf();
  for_each_chain(n, [&](const Chain& c) {
    ExtendedInt lo = 0, hi = 0;
    for (std::size_t s = 0; s + 1 < c.size(); ++s) {
      lo = lo + t.se_lower(c[s], c[s + 1]);
      hi = hi + t.se_upper(c[s], c[s + 1]);
    }
    lo = lo + t.se_lower(c.back(), n + c.front());
    hi = hi + t.se_upper(c.back(), n + c.front());
    const long p = static_cast<long>(c.size() - 1);
    lo = lo - p;
    hi = hi - p;
    if (lo < out.lower) out.lower = lo;
    if (hi < out.upper) {
      out.upper = hi;
      out.witness = c;
    }
  });
  return out;
}

PhBounds qualitative_ph_bounds(const model::CollectionSpec& spec, bool use_exact) {
  return qualitative_ph_bounds(model::build_table(spec, use_exact));
}

const char* to_string(Tri t) {
  switch (t) {
    case Tri::True:
      return "true";
    case Tri::False:
      return "false";
    case Tri::Unknown:
      break;
  }
  return "unknown";
}

Connectivity cyclically_ext1_connected(const model::QualitativeTable& t) {
  const int n = t.n();
  Connectivity out;
  bool all_blocked = true;
  for_each_chain(n, [&](const Chain& c) {
    if (out.witness) return;
    bool all_nonzero = true, blocked = false;
    auto link = [&](int a, int b) {
      const auto st = t.get(a, b, 1);
      all_nonzero = all_nonzero && st == model::Status::Nonzero;
      blocked = blocked || st == model::Status::Zero;
    };
    for (std::size_t s = 0; s + 1 < c.size(); ++s) link(c[s], c[s + 1]);
    link(c.back(), n + c.front());
    if (all_nonzero) out.witness = c;
    if (!blocked) all_blocked = false;
  });
  out.value = out.witness ? Tri::True : (all_blocked ? Tri::False : Tri::Unknown);
  return out;
}

}  // namespace excol::ph
