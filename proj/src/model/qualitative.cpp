#include "excol/model/qualitative.hpp"

#include <algorithm>

#include "excol/error.hpp"

namespace excol::model {

namespace {
std::string pair_name(int src, int dst, int deg) {
  return "Ext^" + std::to_string(deg) + "(" + std::to_string(src) + "," + std::to_string(dst) + ")";
}
}  // namespace

QualitativeTable::QualitativeTable(int n, int dim_x) : n_(n), dim_x_(dim_x) {}

const QualitativeTable::Pair* QualitativeTable::find(int src, int dst) const {
  auto it = pairs_.find({src, dst});
  return it == pairs_.end() ? nullptr : &it->second;
}

QualitativeTable::Pair& QualitativeTable::at(int src, int dst) {
  if (!tracked(src, dst)) {
    throw ValidationError("qualitative table: pair (" + std::to_string(src) + "," + std::to_string(dst) + ") is outside the extended collection");
  }
  return pairs_[{src, dst}];
}

Status QualitativeTable::get(int src, int dst, int deg) const {
  const Pair* p = find(src, dst);
  if (!p) return Status::Unknown;
  if ((p->lo && deg < *p->lo) || (p->hi && deg > *p->hi)) return Status::Zero;
  auto it = p->known.find(deg);
  return it == p->known.end() ? Status::Unknown : it->second;
}

bool QualitativeTable::set(int src, int dst, int deg, Status s, const std::string& reason) {
  if (s == Status::Unknown) return false;
  const Status cur = get(src, dst, deg);
  if (cur == s) return false;
  if (cur != Status::Unknown) {
    throw ValidationError("contradictory Ext data for " + pair_name(src, dst, deg) + ": " + to_string(cur) + " vs " +
                          to_string(s) + " (" + reason + ")");
  }
  at(src, dst).known[deg] = s;
  return true;
}

bool QualitativeTable::bound(int src, int dst, int lo, int hi, const std::string& reason) {
  return bound_opt(src, dst, lo, hi, reason);
}

bool QualitativeTable::bound_opt(int src, int dst, std::optional<int> lo, std::optional<int> hi,
                                 const std::string& reason) {
  Pair& p = at(src, dst);
  for (const auto& [deg, st] : p.known) {
    if (st == Status::Nonzero && ((lo && deg < *lo) || (hi && deg > *hi))) {
      throw ValidationError("contradictory Ext data for " + pair_name(src, dst, deg) + ": NONZERO vs ZERO (" + reason + ")");
    }
  }
  bool changed = false;
  if (lo && (!p.lo || *p.lo < *lo)) {
    p.lo = lo;
    changed = true;
  }
  if (hi && (!p.hi || *p.hi > *hi)) {
    p.hi = hi;
    changed = true;
  }
  return changed;
}

bool QualitativeTable::merge_into(std::pair<int, int> from, std::pair<int, int> to, const std::string& reason) {
  const Pair* p = find(from.first, from.second);
  if (!p) return false;
  const Pair copy = *p;
  bool changed = false;
  if (copy.lo || copy.hi) changed |= bound_opt(to.first, to.second, copy.lo, copy.hi, reason);
  for (const auto& [deg, st] : copy.known) changed |= set(to.first, to.second, deg, st, reason);
  return changed;
}

ExtendedInt QualitativeTable::se_lower(int src, int dst) const {
  const Pair* p = find(src, dst);
  if (!p || !p->lo) return ExtendedInt::neg_inf();
  for (long d = *p->lo;; ++d) {
    if (p->hi && d > *p->hi) return ExtendedInt::pos_inf();
    if (get(src, dst, static_cast<int>(d)) != Status::Zero) return d;
  }
}

ExtendedInt QualitativeTable::se_upper(int src, int dst) const {
  const Pair* p = find(src, dst);
  if (!p) return ExtendedInt::pos_inf();
  for (const auto& [deg, st] : p->known) {
    if (st == Status::Nonzero) return deg;
  }
  return ExtendedInt::pos_inf();
}

std::vector<QualEntry> QualitativeTable::entries() const {
  std::vector<QualEntry> out;
  for (const auto& [key, p] : pairs_) {
    for (const auto& [deg, st] : p.known) {
      if (get(key.first, key.second, deg) == st) out.push_back({key.first, key.second, deg, st, ""});
    }
  }
  return out;
}

std::vector<QualEntry> hom_vanishing_from_degrees(const std::vector<int>& extended_degrees, bool is_surface,
                                                  bool ample_canonical, bool line_bundles) {
  if (!is_surface || !ample_canonical || !line_bundles) {
    throw ValidationError("Hom vanishing by degree needs a surface with ample canonical class and line bundles");
  }
  if (extended_degrees.size() % 2 != 0) throw ValidationError("extended degree sequence must have even length");
  const int n = static_cast<int>(extended_degrees.size() / 2);
  std::vector<QualEntry> out;
  for (int i = 1; i <= 2 * n; ++i) {
    for (int j = i + 1; j <= std::min(2 * n, i + n); ++j) {
      if (extended_degrees[i - 1] >= extended_degrees[j - 1]) {
        out.push_back({i, j, 0, Status::Zero, "canonical degree does not increase from source to target"});
      }
    }
  }
  return out;
}

QualitativeTable build_table(const CollectionSpec& spec, bool use_exact) {
  const int n = spec.n;
  QualitativeTable t(n, spec.dim_x);
  const auto& f = spec.flags;

  auto enter_exact = [&](int src, int dst, const GradedDims& g, int shift) {
    const std::string why = "exact dimensions";
    if (g.empty()) {
      t.bound(src, dst, 1, 0, why);
      return;
    }
    const int lo = g.begin()->first + shift;
    const int hi = g.rbegin()->first + shift;
    t.bound(src, dst, lo, hi, why);
    for (int d = lo; d <= hi; ++d) {
      t.set(src, dst, d, g.count(d - shift) ? Status::Nonzero : Status::Zero, why);
    }
  };
  if (use_exact && f.exact_dims) {
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) enter_exact(i, j, spec.a_space(i, j), 0);
      for (int j = i; j <= n; ++j) enter_exact(j, n + i, spec.n_space(i, j), -spec.dim_x);
    }
  }
  for (const auto& q : spec.qualitative) {
    t.set(q.src, q.dst, q.deg, q.status, q.source.empty() ? "document" : q.source);
  }
  if (f.line_bundles) {
    for (int i = 1; i <= 2 * n; ++i) {
      for (int j = i + 1; j <= std::min(2 * n, i + n); ++j) t.bound(i, j, 0, spec.dim_x, "line bundle cohomology range");
    }
  }
  if (f.is_surface && f.ample_canonical && f.line_bundles && spec.has_canonical_degrees() && spec.k_squared) {
    for (const auto& q : hom_vanishing_from_degrees(extend_degrees(spec.canonical_degrees(), *spec.k_squared), true,
                                                    true, true)) {
      t.set(q.src, q.dst, q.deg, q.status, q.source);
    }
  }
  if (f.is_surface && f.line_bundles && f.h2_anticanonical_nonzero) {
    for (int i = 1; i <= n; ++i) t.set(i, n + i, 2, Status::Nonzero, "H^2 of the anticanonical bundle is nonzero");
  }

  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        changed |= t.merge_into({i, j}, {n + i, n + j}, "twist by the anticanonical bundle");
        changed |= t.merge_into({n + i, n + j}, {i, j}, "twist by the anticanonical bundle");
      }
    }
    if (f.line_bundles) {
      for (int i = 2; i <= n; ++i) changed |= t.merge_into({i, n + i}, {1, n + 1}, "Ext(L, L(-K)) = H(-K)");
      for (int i = 2; i <= n; ++i) changed |= t.merge_into({1, n + 1}, {i, n + i}, "Ext(L, L(-K)) = H(-K)");
    }
  }
  return t;
}

}  // namespace excol::model
