#include <doctest.h>

#include <map>

#include "excol/error.hpp"
#include "excol/exactlin/subspace.hpp"
#include "excol/fixtures/fixtures.hpp"
#include "excol/model/document.hpp"
#include "excol/model/validate.hpp"
#include "excol/nhh/complex.hpp"
#include "excol/nhh/spectral_sequence.hpp"
#include "excol/pseudoheight/pseudoheight.hpp"
#include "support/fixture_files.hpp"
#include "support/oracles.hpp"
#include "support/specs.hpp"

using namespace excol;
using namespace excol::nhh;
using lin::Rationals;

namespace {

using Dims = std::map<Bidegree, std::size_t>;

// h^0(P^m, Λ^p T) from the Euler sequence; the higher cohomology vanishes.
std::map<int, std::size_t> hkr_projective_space(int m) {
  std::map<int, std::size_t> out;
  std::size_t prev = 1;
  out[0] = 1;
  for (int p = 1; p <= m; ++p) {
    prev = oracle::binomial(m + 1, p) * oracle::binomial(m + p, m) - prev;
    out[p] = prev;
  }
  return out;
}

std::map<int, std::size_t> nonzero(const std::map<int, std::size_t>& m) {
  std::map<int, std::size_t> out;
  for (const auto& [k, v] : m)
    if (v > 0) out[k] = v;
  return out;
}

}  // namespace

TEST_CASE("E1 of Beilinson P^1") {
  const auto e1 = build_e1(load_fixture("beilinson_p1"));
  // chain (1,2): A(1,2) ⊗ N(1,2) = S^1 ⊗ S^1; chains (i): N(i,i) = S^2.
  const Dims expected = {{{-1, 1}, oracle::sym_dim(2, 1) * oracle::sym_dim(2, 1)}, {{0, 1}, 2 * oracle::sym_dim(2, 2)}};
  CHECK(e1.dims == expected);
  CHECK(e1.min_degree() == 0);
}

TEST_CASE("E1 of a point") {
  const auto e1 = build_e1(load_fixture("point"));
  CHECK(e1.dims == Dims{{{0, 0}, 1}});
}

TEST_CASE("E1 of Beauville I0 in total degree 3") {
  const auto e1 = build_e1(load_fixture("beauville_I0"));
  REQUIRE(e1.by_degree.count(3));
  const auto& terms = e1.by_degree.at(3);
  REQUIRE(terms.size() == 1);
  CHECK(terms[0].chain == ph::Chain{1, 2, 3, 4});
  CHECK(terms[0].degs == std::vector<int>{1, 1, 1, 3});
  CHECK(terms[0].column() == -3);
  CHECK(terms[0].q == 6);
  CHECK(e1.min_degree() == 3);
}

TEST_CASE("E1 needs exact dimensions") { CHECK_THROWS_AS(build_e1(load_fixture("burniat")), ValidationError); }

TEST_CASE("E1 lowest degree is the pseudoheight") {
  for (const auto& name : {"beilinson_p1", "beilinson_p2", "beauville_I0", "godeaux", "point"}) {
    CAPTURE(name);
    const auto s = load_fixture(name);
    CHECK(ExtendedInt(build_e1(s).min_degree()) == ph::pseudoheight(s).ph);
  }
}

TEST_CASE("the P^1 differential is polynomial multiplication") {
  Rationals k;
  const auto s = load_fixture("beilinson_p1");
  const auto cx = assemble_differential(k, s);
  const auto& d = cx.diff(0);
  REQUIRE(d.rows() == 6);
  REQUIRE(d.cols() == 4);

  // Oracle: f ⊗ g -> fg in N(1,1) and in N(2,2), monomials x > y.
  const auto* src = cx.e1.find({1, 2}, {0, 1});
  const auto* t11 = cx.e1.find({1}, {1});
  const auto* t22 = cx.e1.find({2}, {1});
  REQUIRE(src);
  REQUIRE(t11);
  REQUIRE(t22);
  const std::vector<std::vector<int>> lin = {{1, 0}, {0, 1}};
  const std::vector<std::vector<int>> quad = {{2, 0}, {1, 1}, {0, 2}};
  oracle::Dense expected = oracle::zeros(6, 4);
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      const std::vector<int> prod = {lin[a][0] + lin[b][0], lin[a][1] + lin[b][1]};
      const std::size_t out = std::find(quad.begin(), quad.end(), prod) - quad.begin();
      const std::size_t col = src->offset + src->local_index({a, b});
      expected[t11->offset + out][col] = 1;
      expected[t22->offset + out][col] = 1;
    }
  }
  const auto got = oracle::to_dense(d);
  for (const auto* term : {t11, t22}) {
    int sign = 0;
    for (std::size_t r = term->offset; r < term->offset + term->dim; ++r) {
      for (std::size_t c = 0; c < 4; ++c) {
        CHECK(abs(got[r][c]) == expected[r][c]);
        if (got[r][c] != 0) {
          const int sg = sgn(got[r][c]);
          if (sign == 0) sign = sg;
          CHECK(sg == sign);
        }
      }
    }
  }
  CHECK(oracle::rank(got) == 3);
  CHECK(oracle::rank(expected) == 3);
  CHECK(lin::rank(k, d) == 3);
}

TEST_CASE("a single object has zero differential") {
  Rationals k;
  const auto cx = assemble_differential(k, load_fixture("point"));
  for (const auto& [t, m] : cx.d) CHECK(m.is_zero());
}

TEST_CASE("total cohomology matches HKR on projective spaces") {
  Rationals k;
  CHECK(nonzero(total_cohomology(k, assemble_differential(k, load_fixture("point")))) == std::map<int, std::size_t>{{0, 1}});
  CHECK(nonzero(total_cohomology(k, assemble_differential(k, load_fixture("beilinson_p1")))) == hkr_projective_space(1));
  CHECK(nonzero(total_cohomology(k, assemble_differential(k, load_fixture("beilinson_p2")))) == hkr_projective_space(2));
  CHECK(hkr_projective_space(2) == std::map<int, std::size_t>{{0, 1}, {1, 8}, {2, 10}});
  lin::PrimeField f(lin::kDefaultPrime);
  CHECK(nonzero(total_cohomology(f, assemble_differential(f, load_fixture("beilinson_p3")))) == hkr_projective_space(3));
}

TEST_CASE("spectral sequence of P^1") {
  Rationals k;
  const auto cx = assemble_differential(k, load_fixture("beilinson_p1"));
  const auto ss = spectral_sequence(k, cx, 3);
  CHECK(ss.page(1).dims == Dims{{{-1, 1}, 4}, {{0, 1}, 6}});
  CHECK(ss.page(2).dims == Dims{{{-1, 1}, 1}, {{0, 1}, 3}});
  CHECK(ss.infinity.dims == ss.page(2).dims);
  CHECK(ss.stable_from == 2);
  CHECK_THROWS_AS(spectral_sequence(k, cx, 0), Error);
}

TEST_CASE("Beauville I0: E2^{-3,6} vanishes") {
  Rationals k;
  const auto cx = assemble_differential(k, load_fixture("beauville_I0"));
  const auto ss = spectral_sequence(k, cx, 2);
  CHECK(ss.page(1).dim(-3, 6) == 1);
  CHECK(ss.page(2).dim(-3, 6) == 0);
  CHECK(ss.page(2).total(3) == 0);
}

TEST_CASE("zero differential: E1 is E_inf") {
  auto s = fixtures::beilinson(2);
  s.products.clear();
  s.fullness.reset();
  Rationals k;
  const auto ss = spectral_sequence(k, assemble_differential(k, s), 2);
  CHECK(ss.infinity.dims == ss.page(1).dims);
  CHECK(ss.stable_from == 1);
}

TEST_CASE("an m3 gives a d2 and nothing else") {
  const auto s = m3_spec();
  REQUIRE(model::validate(s).ok());
  Rationals k;
  const auto cx = assemble_differential(k, s);
  CHECK(cx.max_arity == 3);
  const auto ss = spectral_sequence(k, cx, 3);
  const Dims e1 = {{{-2, 1}, 1}, {{0, 0}, 1}};
  CHECK(ss.page(1).dims == e1);
  CHECK(ss.page(2).dims == e1);
  CHECK(ss.page(3).empty());
  CHECK(ss.infinity.empty());
  CHECK(ss.stable_from == 3);
  CHECK(lin::rank(k, cx.diff(-1)) == 1);
  CHECK(nonzero(total_cohomology(k, cx)).empty());
}

TEST_CASE("assembly refuses invalid structure constants") {
  auto s = fixtures::beilinson(3);
  s.products.front().entries.front().coef = 5;
  Rationals k;
  CHECK_THROWS_AS(assemble_differential(k, s), ValidationError);
}

TEST_CASE("no Serre-twisted spaces: the zero complex") {
  const auto s = model::parse_text(R"({"n": 2, "dim_x": 1, "ext": [{"src": 1, "dst": 2, "deg": 0, "dim": 1}]})");
  Rationals k;
  const auto cx = assemble_differential(k, s);
  CHECK(cx.e1.empty());
  CHECK(nonzero(total_cohomology(k, cx)).empty());
}

TEST_CASE("representatives of E_inf are cocycles") {
  Rationals k;
  const auto cx = assemble_differential(k, load_fixture("beilinson_p2"));
  const auto ss = spectral_sequence(k, cx, 3);
  for (const auto& [bd, reps] : ss.infinity.reps) {
    const int t = bd.first + bd.second;
    CHECK(reps.size() == ss.infinity.dim(bd.first, bd.second));
    for (const auto& v : reps) {
      if (cx.d.count(t)) CHECK(cx.diff(t).apply(k, v).empty());
    }
  }
}
