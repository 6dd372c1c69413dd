#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "excol/extended_int.hpp"
#include "excol/model/collection.hpp"

namespace excol::model {

// Three-valued Ext knowledge on the anticanonically extended collection
// E_1..E_n, E_1(-K)..E_n(-K), indexed 1..2n. Only pairs src < dst <= src+n
// are tracked. Degrees are the plain Ext degrees of the pair, so N(i,j)^k
// lives at (j, n+i, k - dim_x). Updates are monotone and a contradiction
// throws ValidationError.
class QualitativeTable {
 public:
  QualitativeTable(int n, int dim_x);

  int n() const { return n_; }
  int dim_x() const { return dim_x_; }
  bool tracked(int src, int dst) const { return src >= 1 && src < dst && dst <= 2 * n_ && dst <= src + n_; }

  Status get(int src, int dst, int deg) const;

  // Each returns true if the table changed.
  bool set(int src, int dst, int deg, Status s, const std::string& reason);
  // Every degree outside [lo, hi] is ZERO.
  bool bound(int src, int dst, int lo, int hi, const std::string& reason);
  // Copy everything known about `from` into `to`.
  bool merge_into(std::pair<int, int> from, std::pair<int, int> to, const std::string& reason);

  // Interval for se(src, dst) = min{k : Ext^k != 0}. The lower end is the
  // first degree not known to vanish, the upper end the first degree known
  // to be nonzero.
  ExtendedInt se_lower(int src, int dst) const;
  ExtendedInt se_upper(int src, int dst) const;

  // (src, dst, deg, status) for every explicit entry, for reports.
  std::vector<QualEntry> entries() const;

 private:
  struct Pair {
    std::map<int, Status> known;
    std::optional<int> lo, hi;
  };
  const Pair* find(int src, int dst) const;
  bool bound_opt(int src, int dst, std::optional<int> lo, std::optional<int> hi, const std::string& reason);
  Pair& at(int src, int dst);

  int n_;
  int dim_x_;
  std::map<std::pair<int, int>, Pair> pairs_;
};

// Pairs (src, dst) with src < dst <= src + n and deg_src >= deg_dst, as
// degree-0 ZERO entries: on a surface with ample canonical class a nonzero
// map L1 -> L2 of distinct line bundles forces deg L1 < deg L2. Throws
// ValidationError unless all three flags are set.
std::vector<QualEntry> hom_vanishing_from_degrees(const std::vector<int>& extended_degrees, bool is_surface,
                                                  bool ample_canonical, bool line_bundles);

// Runs every deduction rule to a fixpoint. With use_exact the exact Ext
// dimensions are entered first (only when flags.exact_dims is set).
QualitativeTable build_table(const CollectionSpec& spec, bool use_exact = true);

}  // namespace excol::model
