#include <doctest.h>

#include <set>

#include "ringline/reference_data.hpp"
#include "ringline/ring.hpp"

using namespace ringline;

namespace {

Ring r_triangle() {
  Ring gf2 = make_gf(2);
  return direct_product({gf2, gf2, gf2});
}

}  // namespace

TEST_CASE("GF(2) basics") {
  Ring gf2 = make_gf(2);
  CHECK(gf2.size() == 2);
  CHECK((gf2.one() + gf2.one()) == gf2.zero());
  CHECK(gf2.units().size() == 1);
  CHECK(gf2.units()[0] == gf2.one());
  CHECK(gf2.characteristic() == 2);
  CHECK(gf2.is_field());
}

TEST_CASE("GF(3) arithmetic") {
  Ring gf3 = make_gf(3);
  Element two = gf3.element("2");
  CHECK((two * two) == gf3.one());
  CHECK((-two) == gf3.element("1"));
  CHECK(gf3.characteristic() == 3);
  CHECK(gf3.units().size() == 2);
}

TEST_CASE("make_gf rejects bad orders") {
  CHECK_THROWS_AS(make_gf(0), std::invalid_argument);
  CHECK_THROWS_AS(make_gf(1), std::invalid_argument);
  CHECK_THROWS_AS(make_gf(4), std::invalid_argument);
  CHECK_THROWS_AS(make_gf(98), std::invalid_argument);
  CHECK_THROWS_AS(make_gf(101), std::invalid_argument);  // prime, over the cap
  CHECK(make_gf(97).size() == 97);
}

TEST_CASE("GF(2)^3 tables match the reference transcription") {
  Ring r = r_triangle();
  for (std::size_t i = 0; i < 8; ++i) {
    Element x = r.element(std::string(1, refdata::kLetters[i]));
    for (std::size_t j = 0; j < 8; ++j) {
      Element y = r.element(std::string(1, refdata::kLetters[j]));
      CHECK((x + y).name() == std::string(1, refdata::kAddTable[i][j]));
      CHECK((x * y).name() == std::string(1, refdata::kMulTable[i][j]));
    }
  }
}

TEST_CASE("GF(2)^3 spot arithmetic") {
  Ring r = r_triangle();
  CHECK((r.element("e") + r.element("c")) == r.element("b"));
  CHECK((r.element("f") * r.element("g")) == r.element("d"));
  CHECK((r.element("d") + r.element("e")) == r.element("h"));
  CHECK((r.element("e") * r.element("f")) == r.element("b"));
  CHECK((-r.element("g")) == r.element("g"));  // characteristic 2
}

TEST_CASE("classification of GF(2)^3 elements") {
  Ring r = r_triangle();
  CHECK(r.element("h").cls() == ElementClass::Unit);
  CHECK(r.element("e").cls() == ElementClass::ZeroDivisor);
  CHECK(r.element("a").cls() == ElementClass::Zero);
  CHECK(r.units().size() == 1);
  CHECK(r.units()[0].name() == "h");
  CHECK(r.zero_divisors(true).size() == 7);
  CHECK(r.zero_divisors(false).size() == 6);
  std::set<std::string> proper;
  for (const Element& e : r.zero_divisors(false)) proper.insert(e.name());
  CHECK(proper == std::set<std::string>{"b", "c", "d", "e", "f", "g"});
}

TEST_CASE("characteristic of small rings") {
  CHECK(r_triangle().characteristic() == 2);
  Ring gf2 = make_gf(2);
  CHECK(direct_product({gf2, gf2}).characteristic() == 2);
  CHECK(make_gf(3).characteristic() == 3);
  CHECK(direct_product({make_gf(2), make_gf(3)}).characteristic() == 6);
}

TEST_CASE("product coordinates decode the letter map") {
  Ring r = r_triangle();
  auto coords_of = [&](const char* name) {
    std::string out;
    for (const Element& c : product_coordinates(r.element(name)))
      out += c.name();
    return out;
  };
  CHECK(coords_of("a") == "000");
  CHECK(coords_of("b") == "100");
  CHECK(coords_of("c") == "010");
  CHECK(coords_of("d") == "001");
  CHECK(coords_of("e") == "110");
  CHECK(coords_of("f") == "101");
  CHECK(coords_of("g") == "011");
  CHECK(coords_of("h") == "111");
}

TEST_CASE("product_coordinates rejects non-product rings") {
  Ring gf3 = make_gf(3);
  CHECK_THROWS_AS(product_coordinates(gf3.element("1")),
                  std::invalid_argument);
}

TEST_CASE("single-factor product behaves like its factor") {
  Ring p = direct_product({make_gf(2)});
  CHECK(p.size() == 2);
  CHECK(p.characteristic() == 2);
  CHECK(p.units().size() == 1);
  // Same tables under the index map.
  Ring gf2 = make_gf(2);
  for (std::uint16_t i = 0; i < 2; ++i)
    for (std::uint16_t j = 0; j < 2; ++j) {
      CHECK(p.add_index(i, j) == gf2.add_index(i, j));
      CHECK(p.mul_index(i, j) == gf2.mul_index(i, j));
    }
}

TEST_CASE("cross-ring arithmetic is rejected") {
  Ring a = make_gf(2);
  Ring b = make_gf(2);  // same shape, different identity
  CHECK(!a.same(b));
  CHECK_THROWS_AS(a.one() + b.one(), std::invalid_argument);
  CHECK_THROWS_AS(a.one() * b.one(), std::invalid_argument);
  CHECK(a.one() != b.one());
}

TEST_CASE("direct_product caps and argument checks") {
  CHECK_THROWS_AS(direct_product({}), std::invalid_argument);
  Ring gf97 = make_gf(97);
  CHECK_THROWS_AS(direct_product({gf97, gf97}), std::invalid_argument);
}

TEST_CASE("trichotomy and unit-group closure over assorted rings") {
  Ring gf2 = make_gf(2);
  std::vector<Ring> rings = {gf2, make_gf(3), make_gf(5),
                             direct_product({gf2, gf2}), r_triangle(),
                             direct_product({gf2, make_gf(3)})};
  for (const Ring& r : rings) {
    std::size_t zero = 0, units = 0, zds = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      switch (r.classify(static_cast<std::uint16_t>(i))) {
        case ElementClass::Zero:
          ++zero;
          break;
        case ElementClass::Unit:
          ++units;
          break;
        case ElementClass::ZeroDivisor:
          ++zds;
          break;
      }
    }
    CHECK(zero == 1);
    CHECK(zero + units + zds == r.size());
    for (const Element& u : r.units()) {
      auto inv = u.inverse();
      REQUIRE(inv.has_value());
      CHECK(inv->cls() == ElementClass::Unit);
      CHECK((u * *inv) == r.one());
      for (const Element& v : r.units())
        CHECK((u * v).cls() == ElementClass::Unit);
    }
  }
}

TEST_CASE("product elements classify componentwise") {
  Ring r = direct_product({make_gf(2), make_gf(3)});
  for (std::uint16_t i = 0; i < r.size(); ++i) {
    auto coords = r.coordinate_indices(i);
    bool all_units = true;
    bool some_zero = false;
    for (std::size_t k = 0; k < coords.size(); ++k) {
      ElementClass c = r.factors()[k].classify(coords[k]);
      if (c != ElementClass::Unit) all_units = false;
      if (c == ElementClass::Zero) some_zero = true;
    }
    CHECK((r.classify(i) == ElementClass::Unit) == all_units);
    // Factors are fields, so non-units are exactly the elements with a
    // zero coordinate.
    CHECK((r.classify(i) != ElementClass::Unit) == some_zero);
  }
}

TEST_CASE("axiom validation reports witnesses") {
  // mod-3 addition with a tampered multiplication cell: 2*2 = 2.
  RingTables t;
  t.size = 3;
  t.add = {0, 1, 2, 1, 2, 0, 2, 0, 1};
  t.mul = {0, 0, 0, 0, 1, 2, 0, 2, 2};
  t.zero = 0;
  t.one = 1;
  t.names = {"0", "1", "2"};
  t.label = "tampered";
  std::vector<std::string> violations = validate_ring_tables(t);
  REQUIRE(!violations.empty());
  bool mentions_distributivity = false;
  for (const std::string& v : violations)
    if (v.find("distributivity") != std::string::npos &&
        v.find("2") != std::string::npos)
      mentions_distributivity = true;
  CHECK(mentions_distributivity);
  CHECK_THROWS_AS(Ring(std::move(t)), TableValidationError);
}

TEST_CASE("structural defects are rejected before the axiom sweep") {
  RingTables t;
  t.size = 2;
  t.add = {0, 1, 1};  // wrong cell count
  t.mul = {0, 0, 0, 1};
  CHECK_THROWS_AS(validate_ring_tables(t), std::invalid_argument);
  RingTables dup;
  dup.size = 2;
  dup.add = {0, 1, 1, 0};
  dup.mul = {0, 0, 0, 1};
  dup.zero = 0;
  dup.one = 1;
  dup.names = {"x", "x"};
  CHECK_THROWS_AS(validate_ring_tables(dup), std::invalid_argument);
}

TEST_CASE("element lookup by name") {
  Ring r = r_triangle();
  CHECK(r.element("e").index() == r.element(std::size_t{6}).index());
  CHECK(r.has_element("g"));
  CHECK(!r.has_element("z"));
  CHECK_THROWS_AS(r.element("z"), std::invalid_argument);
  CHECK_THROWS_AS(r.element(std::size_t{8}), std::invalid_argument);
}
