#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "excol/error.hpp"
#include "excol/fixtures/fixtures.hpp"
#include "excol/model/collection.hpp"
#include "excol/model/document.hpp"
#include "excol/model/qualitative.hpp"
#include "excol/model/validate.hpp"
#include "support/fixture_files.hpp"

using namespace excol;
using namespace excol::model;

namespace {

const Check& check_named(const ValidationReport& r, const std::string& name) {
  auto it = std::find_if(r.checks.begin(), r.checks.end(), [&](const Check& c) { return c.name == name; });
  REQUIRE(it != r.checks.end());
  return *it;
}

bool has_zero_hom(const std::vector<QualEntry>& es, int src, int dst) {
  return std::any_of(es.begin(), es.end(), [&](const QualEntry& e) {
    return e.src == src && e.dst == dst && e.deg == 0 && e.status == Status::Zero;
  });
}

}  // namespace

TEST_CASE("minimal point document") {
  const auto s = parse_text(R"({"n": 1, "dim_x": 0, "serre_ext": [{"twist_src": 1, "from": 1, "deg": 0, "dim": 1}]})");
  CHECK(s.n == 1);
  CHECK(s.n_dim(1, 1, 0) == 1);
  CHECK(s.A.empty());
  CHECK(s.products.empty());
  CHECK(s.flags.exact_dims);
  CHECK(validate(s).ok());
}

TEST_CASE("round trip of every fixture") {
  for (const auto& name : fixtures::names()) {
    CAPTURE(name);
    const auto s = fixtures::make(name);
    const auto text = serialize_text(s);
    const auto back = parse_text(text);
    CHECK(back == s);
    CHECK(serialize_text(back) == text);
  }
}

TEST_CASE("shipped fixture files are the generated documents") {
  for (const auto& name : fixtures::names()) {
    CAPTURE(name);
    std::ifstream in(std::string(EXCOL_FIXTURE_DIR) + "/" + name + ".json");
    REQUIRE(in);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == serialize_text(fixtures::make(name)));
  }
}

TEST_CASE("every fixture validates") {
  for (const auto& name : fixtures::names()) {
    CAPTURE(name);
    const auto r = validate(load_fixture(name));
    CHECK(r.ok());
    CHECK(r.failures() == 0);
  }
}

TEST_CASE("Beilinson P^2 passes every check") {
  const auto r = validate(fixtures::beilinson(3));
  CHECK(r.ok());
  CHECK(r.relations_tested > 0);
  CHECK(check_named(r, "a_infinity_relations").ok);
}

TEST_CASE("backwards Ext is rejected") {
  const char* doc = R"({"n": 2, "dim_x": 1, "ext": [{"src": 2, "dst": 1, "deg": 0, "dim": 1}]})";
  CHECK_THROWS_AS(parse_text(doc), ValidationError);
}

TEST_CASE("malformed documents are format errors") {
  CHECK_THROWS_AS(parse_text("{"), FormatError);
  CHECK_THROWS_AS(parse_text(R"({"n": 1, "dim_x": 0, "bogus": 1})"), FormatError);
  CHECK_THROWS_AS(parse_text(R"({"n": 2, "dim_x": 0, "ext": [{"src": 1, "dst": 3, "deg": 0, "dim": 1}]})"), FormatError);
  CHECK_THROWS_AS(parse_text(R"({"n": 2, "dim_x": 0, "ext": [{"src": 1, "dst": 2, "deg": 0, "dim": -1}]})"), FormatError);
  // Product entry pointing past the end of A(1,2).
  CHECK_THROWS_AS(parse_text(R"({"n": 3, "dim_x": 0,
    "ext": [{"src": 1, "dst": 2, "deg": 0, "dim": 1}, {"src": 2, "dst": 3, "deg": 0, "dim": 1},
            {"src": 1, "dst": 3, "deg": 0, "dim": 1}],
    "products": [{"kind": "AA", "path": [1, 2, 3], "degs": [0, 0], "out_deg": 0, "entries": [[1, 0, 0, "1"]]}]})"),
                  FormatError);
  CHECK_THROWS_AS(parse_rational("1/0"), FormatError);
}

TEST_CASE("rationals are written in lowest terms") {
  CHECK(rational_to_string(parse_rational("6/4")) == "3/2");
  CHECK(rational_to_string(parse_rational("-2/1")) == "-2");
  CHECK(rational_to_string(parse_rational(5)) == "5");
}

TEST_CASE("non-commutative multiplication is still associative") {
  // A(1,2) = <x, y>, A(2,3) = <x, y>, A(1,3) = <xx, xy, yx, yy>: the free
  // product, where x.y != y.x.
  auto s = parse_text(R"({"n": 3, "dim_x": 0,
    "ext": [{"src": 1, "dst": 2, "deg": 0, "dim": 2}, {"src": 2, "dst": 3, "deg": 0, "dim": 2},
            {"src": 1, "dst": 3, "deg": 0, "dim": 4}],
    "products": [{"kind": "AA", "path": [1, 2, 3], "degs": [0, 0], "out_deg": 0,
                  "entries": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 2, "1"], [1, 1, 3, "1"]]}]})");
  CHECK(validate(s).ok());
}

TEST_CASE("wrong output degree fails degree additivity") {
  auto s = fixtures::beilinson(3);
  s.A[{1, 3}][1] = s.a_dim(1, 3, 0);
  auto it = std::find_if(s.products.begin(), s.products.end(), [](const ProductBlock& b) { return b.kind == "AA"; });
  REQUIRE(it != s.products.end());
  it->out_deg = 1;
  const auto r = validate(s);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(check_named(r, "degree_additivity").ok);
  CHECK_THROWS_AS(require_valid(s), ValidationError);
}

TEST_CASE("a perturbed structure constant breaks associativity") {
  auto s = fixtures::beilinson(3);
  auto it = std::find_if(s.products.begin(), s.products.end(), [](const ProductBlock& b) { return b.kind == "AN"; });
  REQUIRE(it != s.products.end());
  it->entries.front().coef = 2;
  const auto r = validate(s);
  CHECK_FALSE(check_named(r, "a_infinity_relations").ok);
}

TEST_CASE("extended degree sequences") {
  CHECK(extend_degrees({3, 3, 2, 2, 2, 0}, 6) == std::vector<int>{3, 3, 2, 2, 2, 0, -3, -3, -4, -4, -4, -6});
  CHECK(extend_degrees({0, -2, -2, -4}, 8) == std::vector<int>{0, -2, -2, -4, -8, -10, -10, -12});
  CHECK(extend_degrees({0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0}, 1) ==
        std::vector<int>{0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, -1, -1, 0, -1, -1, -1, 0, -1, -1, -1, -1});
}

TEST_CASE("Hom vanishing from degrees") {
  SUBCASE("non-increasing sequence: everything Hom-free") {
    const auto es = hom_vanishing_from_degrees(extend_degrees({3, 3, 2, 2, 2, 0}, 6), true, true, true);
    // pairs src < dst <= src + 6 inside 1..12
    CHECK(es.size() == 51);
    for (const auto& e : es) CHECK(e.status == Status::Zero);
  }
  SUBCASE("strictly increasing: nothing") {
    CHECK(hom_vanishing_from_degrees({0, 1, 2, 3, 4, 5}, true, true, true).empty());
  }
  SUBCASE("Godeaux: Homs may survive only where the degree goes up") {
    const auto es = hom_vanishing_from_degrees(extend_degrees({0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0}, 1), true, true, true);
    CHECK_FALSE(has_zero_hom(es, 2, 3));
    CHECK(has_zero_hom(es, 1, 2));
    CHECK(has_zero_hom(es, 3, 4));
    for (const auto& e : es) CHECK(e.status == Status::Zero);
  }
  SUBCASE("refused without the surface flags") {
    CHECK_THROWS_AS(hom_vanishing_from_degrees({0, 0}, false, true, true), ValidationError);
    CHECK_THROWS_AS(hom_vanishing_from_degrees({0, 0}, true, false, true), ValidationError);
  }
}

TEST_CASE("exact and qualitative data must agree") {
  auto s = fixtures::beilinson(2);
  // Ext^0(E1, E2) = 2 but claimed zero.
  s.qualitative.push_back({1, 2, 0, Status::Zero, "test"});
  CHECK_FALSE(validate(s).ok());
  CHECK_THROWS_AS(build_table(s), ValidationError);
}

TEST_CASE("qualitative table bounds") {
  QualitativeTable t(2, 2);
  CHECK(t.se_lower(1, 2) == ExtendedInt::neg_inf());
  CHECK(t.se_upper(1, 2) == ExtendedInt::pos_inf());
  t.set(1, 2, 0, Status::Zero, "");
  t.set(1, 2, 2, Status::Nonzero, "");
  // Negative degrees are still unknown.
  CHECK(t.se_lower(1, 2) == ExtendedInt::neg_inf());
  CHECK(t.se_upper(1, 2) == ExtendedInt(2));
  t.bound(1, 2, 0, 4, "");
  CHECK(t.se_lower(1, 2) == ExtendedInt(1));
  t.bound(1, 2, 2, 2, "");
  CHECK(t.se_lower(1, 2) == ExtendedInt(2));
  CHECK_THROWS_AS(t.set(1, 2, 2, Status::Zero, ""), ValidationError);
}
