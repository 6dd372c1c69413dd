#include "excol/fixtures/fixtures.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "excol/error.hpp"

namespace excol::fixtures {

using model::CollectionSpec;
using model::ProductBlock;
using model::QualEntry;
using model::Status;

namespace {

void gen_monomials(int vars, int d, int pos, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (pos == vars - 1) {
    cur[pos] = d;
    out.push_back(cur);
    return;
  }
  for (int e = d; e >= 0; --e) {
    cur[pos] = e;
    gen_monomials(vars, d - e, pos + 1, cur, out);
  }
}

class Monomials {
 public:
  explicit Monomials(int vars) : vars_(vars) {}

  const std::vector<std::vector<int>>& list(int d) {
    auto it = lists_.find(d);
    if (it != lists_.end()) return it->second;
    auto& l = lists_[d] = monomials(vars_, d);
    auto& idx = index_[d];
    for (std::size_t i = 0; i < l.size(); ++i) idx[l[i]] = i;
    return l;
  }
  std::size_t index(int d, const std::vector<int>& e) {
    list(d);
    return index_[d].at(e);
  }
  std::size_t dim(int d) { return list(d).size(); }

 private:
  int vars_;
  std::map<int, std::vector<std::vector<int>>> lists_;
  std::map<int, std::map<std::vector<int>, std::size_t>> index_;
};

// Multiplication S^a ⊗ S^b -> S^{a+b} as a product block.
ProductBlock multiplication(Monomials& mons, const std::string& kind, std::vector<int> path, std::vector<int> degs,
                            int out_deg, int a, int b, bool swap_inputs) {
  ProductBlock blk;
  blk.kind = kind;
  blk.path = std::move(path);
  blk.degs = std::move(degs);
  blk.out_deg = out_deg;
  const auto la = mons.list(a);
  const auto lb = mons.list(b);
  for (std::size_t i = 0; i < la.size(); ++i) {
    for (std::size_t j = 0; j < lb.size(); ++j) {
      std::vector<int> e(la[i].size());
      for (std::size_t v = 0; v < e.size(); ++v) e[v] = la[i][v] + lb[j][v];
      model::ProductEntry pe;
      pe.inputs = swap_inputs ? std::vector<std::size_t>{j, i} : std::vector<std::size_t>{i, j};
      pe.output = mons.index(a + b, e);
      pe.coef = 1;
      blk.entries.push_back(std::move(pe));
    }
  }
  return blk;
}

// Sign of a permutation given as a vector of distinct indices.
int perm_sign(const std::vector<std::size_t>& perm) {
  int s = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) s = -s;
    }
  }
  return s;
}

model::TensorComponent antisymmetric_tensor(int n) {
  model::TensorComponent c;
  c.chain.resize(n);
  std::iota(c.chain.begin(), c.chain.end(), 1);
  c.degs.assign(n, 0);
  c.degs.back() = n - 1;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    c.entries.emplace_back(perm, mpq_class(perm_sign(perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return c;
}

void set_objects(CollectionSpec& s, const std::vector<int>& degrees, const std::string& prefix) {
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    s.objects.push_back({prefix + std::to_string(i + 1), degrees[i]});
  }
}

void surface_flags(CollectionSpec& s) {
  s.flags.is_surface = true;
  s.flags.ample_canonical = true;
  s.flags.line_bundles = true;
  s.flags.h2_anticanonical_nonzero = true;
}

ProductBlock single(const std::string& kind, std::vector<int> path, std::vector<int> degs, int out_deg,
                    std::vector<std::vector<std::size_t>> entries) {
  ProductBlock b;
  b.kind = kind;
  b.path = std::move(path);
  b.degs = std::move(degs);
  b.out_deg = out_deg;
  for (auto& e : entries) {
    model::ProductEntry pe;
    pe.output = e.back();
    e.pop_back();
    pe.inputs = std::move(e);
    pe.coef = 1;
    b.entries.push_back(std::move(pe));
  }
  return b;
}

}  // namespace

std::vector<std::vector<int>> monomials(int vars, int d) {
  std::vector<std::vector<int>> out;
  if (d < 0 || vars < 1) return out;
  std::vector<int> cur(vars, 0);
  gen_monomials(vars, d, 0, cur, out);
  return out;
}

std::vector<std::string> names() {
  return {"beauville_I0", "beauville_I1", "beilinson_p1", "beilinson_p2", "beilinson_p3", "burniat", "godeaux", "point"};
}

CollectionSpec make(const std::string& name) {
  if (name == "point") return point();
  if (name == "beilinson_p1") return beilinson(2);
  if (name == "beilinson_p2") return beilinson(3);
  if (name == "beilinson_p3") return beilinson(4);
  if (name == "burniat") return burniat();
  if (name == "beauville_I0") return beauville_i0();
  if (name == "beauville_I1") return beauville_i1();
  if (name == "godeaux") return godeaux();
  throw FormatError("unknown fixture '" + name + "'");
}

CollectionSpec beilinson(int n) {
  if (n < 2 || n > 6) throw ValidationError("the Beilinson fixture is generated for 2 <= n <= 6");
  CollectionSpec s;
  s.n = n;
  s.dim_x = n - 1;
  for (int i = 0; i < n; ++i) s.objects.push_back({"O(" + std::to_string(i) + ")", std::nullopt});
  Monomials mons(n);
  const int top = n - 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) s.A[{i, j}][0] = mons.dim(j - i);
    for (int j = i; j <= n; ++j) s.N[{i, j}][top] = mons.dim(i + n - j);
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int l = j + 1; l <= n; ++l) {
        s.products.push_back(multiplication(mons, "AA", {i, j, l}, {0, 0}, 0, j - i, l - j, false));
      }
    }
  }
  // A(j1,j2) ⊗ N(i,j2) -> N(i,j1)
  for (int j1 = 1; j1 <= n; ++j1) {
    for (int j2 = j1 + 1; j2 <= n; ++j2) {
      for (int i = 1; i <= j1; ++i) {
        s.products.push_back(multiplication(mons, "AN", {j1, j2, i}, {0, top}, top, j2 - j1, i + n - j2, false));
      }
    }
  }
  // N(i1,j) ⊗ A(i1,i2) -> N(i2,j)
  for (int j = 1; j <= n; ++j) {
    for (int i1 = 1; i1 <= j; ++i1) {
      for (int i2 = i1 + 1; i2 <= j; ++i2) {
        s.products.push_back(multiplication(mons, "NA", {j, i1, i2}, {top, 0}, top, i1 + n - j, i2 - i1, false));
      }
    }
  }
  model::FullnessData f;
  f.xi.push_back(antisymmetric_tensor(n));
  f.pairing.push_back(antisymmetric_tensor(n));
  s.fullness = f;
  s.metadata = {{"description", "Beilinson collection O, O(1), ..., O(" + std::to_string(n - 1) + ") on P^" +
                                    std::to_string(n - 1) + " with polynomial multiplication in the monomial basis"},
                {"fullness", "xi is the antisymmetrizer of x1 ⊗ ... ⊗ xn on the full chain; the pairing is the "
                             "determinant functional on V^{⊗n}, so its value on xi is n!"}};
  model::canonicalize(s);
  return s;
}

CollectionSpec point() {
  CollectionSpec s;
  s.n = 1;
  s.dim_x = 0;
  s.objects.push_back({"O", std::nullopt});
  s.N[{1, 1}][0] = 1;
  s.metadata = {{"description", "the structure sheaf of a point"}};
  return s;
}

CollectionSpec burniat() {
  CollectionSpec s;
  s.n = 6;
  s.dim_x = 2;
  s.k_squared = 6;
  set_objects(s, {3, 3, 2, 2, 2, 0}, "L");
  surface_flags(s);
  s.flags.exact_dims = false;
  for (int i = 1; i <= 6; ++i) {
    for (int j = i + 1; j <= 6; ++j) {
      s.qualitative.push_back({i, j, 1, Status::Zero, "assumption: no Ext^1 between distinct objects of the collection"});
    }
  }
  s.qualitative.push_back({1, 7, 1, Status::Zero, "assumption: H^1 of the anticanonical bundle vanishes"});
  s.metadata = {
      {"description", "line-bundle collection of length 6 on a Burniat surface (p_g = q = 0, K^2 = 6); "
                      "qualitative data only"},
      {"assumptions",
       {"canonical degrees 3,3,2,2,2,0 of the six line bundles",
        "Ext^1(E_i, E_j) = 0 for i < j", "H^1(X, -K) = 0", "H^2(X, -K) = H^0(X, 2K)^* != 0"}}};
  model::canonicalize(s);
  return s;
}

CollectionSpec beauville_i1() {
  CollectionSpec s;
  s.n = 4;
  s.dim_x = 2;
  s.k_squared = 8;
  set_objects(s, {0, -2, -2, -4}, "L");
  surface_flags(s);
  s.flags.exact_dims = false;
  for (int i = 1; i <= 4; ++i) {
    for (int j = i; j <= 4; ++j) {
      s.qualitative.push_back({j, 4 + i, 1, Status::Zero, "assumption: no Ext^1 into the anticanonical twists"});
    }
  }
  s.metadata = {{"description", "line-bundle collection I_1 of length 4 on the Beauville surface (K^2 = 8); "
                                "qualitative data only"},
                {"assumptions",
                 {"canonical degrees 0,-2,-2,-4", "Ext^1(E_j, E_i(-K)) = 0 for all i, j (character computation)",
                  "H^2(X, -K) != 0"}}};
  model::canonicalize(s);
  return s;
}

CollectionSpec beauville_i0() {
  CollectionSpec s;
  s.n = 4;
  s.dim_x = 2;
  s.k_squared = 8;
  set_objects(s, {0, -2, -4, -6}, "L");
  surface_flags(s);
  s.flags.higher_products_complete = false;
  for (int i = 1; i <= 3; ++i) s.A[{i, i + 1}] = {{1, 1}, {2, 3}};
  s.A[{1, 3}] = {{2, 4}};
  s.A[{2, 4}] = {{2, 4}};
  s.A[{1, 4}] = {{2, 6}};
  for (int i = 1; i <= 4; ++i) s.N[{i, i}] = {{4, 9}};
  for (int i = 1; i <= 3; ++i) s.N[{i, i + 1}] = {{4, 6}};
  s.N[{1, 3}] = {{4, 4}};
  s.N[{2, 4}] = {{4, 4}};
  s.N[{1, 4}] = {{3, 1}, {4, 3}};
  s.products.push_back(single("AA", {1, 2, 3}, {1, 1}, 2, {{0, 0, 0}}));
  s.products.push_back(single("AA", {2, 3, 4}, {1, 1}, 2, {{0, 0, 0}}));
  s.products.push_back(single("AN", {3, 4, 1}, {1, 3}, 4, {{0, 0, 0}}));
  s.products.push_back(single("NA", {4, 1, 2}, {3, 1}, 4, {{0, 0, 0}}));
  const std::string why = "assumption: Ext^1 along the chain (1,2,3,4) and back to E_1(-K) is nonzero";
  for (int i = 1; i <= 4; ++i) s.qualitative.push_back({i, i + 1, 1, Status::Nonzero, why});
  s.metadata = {
      {"description", "model of the line-bundle collection I_0 on the Beauville surface (K^2 = 8): Ext "
                      "dimensions chosen consistent with Riemann-Roch, only the products needed on the "
                      "lowest chain are nonzero"},
      {"assumptions",
       {"canonical degrees 0,-2,-4,-6", "Ext^1(E_i, E_{i+1}) and Ext^1(E_4, E_1(-K)) are one-dimensional",
        "Ext^1(E_1,E_2) ⊗ Ext^1(E_2,E_3) -> Ext^2(E_1,E_3) is nonzero",
        "products of arity >= 3 are not known (height is reported from the second page)"}}};
  model::canonicalize(s);
  return s;
}

CollectionSpec godeaux() {
  CollectionSpec s;
  const std::vector<int> deg = {0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0};
  s.n = 11;
  s.dim_x = 2;
  s.k_squared = 1;
  set_objects(s, deg, "L");
  surface_flags(s);
  s.flags.higher_products_complete = false;
  for (int i = 1; i <= 11; ++i) {
    for (int j = i + 1; j <= 11; ++j) {
      const int delta = deg[j - 1] - deg[i - 1];
      if (i == 2 && j == 3) {
        s.A[{i, j}] = {{0, 1}, {1, 2}};
      } else if (delta == 1) {
        s.A[{i, j}] = {{1, 1}};
      } else if (delta == -1) {
        s.A[{i, j}] = {{2, 1}};
      }
    }
    for (int j = i; j <= 11; ++j) {
      const int delta = deg[j - 1] - deg[i - 1];
      if (i == j) {
        s.N[{i, j}] = {{4, 2}};
      } else if (delta == 0) {
        s.N[{i, j}] = {{4, 1}};
      } else if (delta == 1) {
        s.N[{i, j}] = {{4, 2}};
      }
    }
  }
  s.products.push_back(single("AN", {2, 3, 2}, {0, 4}, 4, {{0, 0, 0}, {0, 1, 1}}));
  s.products.push_back(single("NA", {3, 2, 3}, {4, 0}, 4, {{0, 0, 0}, {1, 0, 1}}));
  s.metadata = {
      {"description", "model of the line-bundle collection of length 11 on the classical Godeaux surface "
                      "(K^2 = 1)"},
      {"assumptions",
       {"canonical degrees 0,0,1,0,0,0,1,0,0,0,0",
        "Hom(E_i, E_j) != 0 only for (i, j) = (2, 3)",
        "Ext^k(E_3, E_2(-K)) vanishes for k = 0, 1 and has dimension 2 for k = 2",
        "Hom(E_2,E_3) ⊗ Ext^2(E_3,E_2(-K)) -> Ext^2(E_2,E_2(-K)) is injective",
        "external computation: Ext^1(E_j, E_i(-K)) = 0 on the chains (1,3), (1,7), (2,7), (4,7), (5,7), (6,7)",
        "products of arity >= 3 are not known (height is reported from the second page)"}}};
  model::canonicalize(s);
  return s;
}

}  // namespace excol::fixtures
