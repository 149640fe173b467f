#include <doctest.h>

#include "ringline/ideals.hpp"
#include "ringline/ring_spec.hpp"

using namespace ringline;

namespace {

// The four-element subring with inherited unity h.
constexpr const char* kRingO = R"(# four elements closed in GF(2)^3
elements: a b g h
add:
a b g h
b a h g
g h a b
h g b a
mul:
a a a a
a b a b
a a g g
a b g h
zero: a
one: h
)";

// The four-element subring whose own unity e is a zero-divisor upstairs.
constexpr const char* kRingBullet = R"(
elements: a b c e
add:
a b c e
b a e c
c e a b
e c b a
mul:
a a a a
a b a b
a a c c
a b c e
zero: a
one: e
)";

constexpr const char* kZ4 = R"(# integers mod 4
elements: 0 1 2 3
add:
0 1 2 3
1 2 3 0
2 3 0 1
3 0 1 2
mul:
0 0 0 0
0 1 2 3
0 2 0 2
0 3 2 1
zero: 0
one: 1
)";

}  // namespace

TEST_CASE("product spec builds GF(2)^3 with letter names") {
  Ring r = ring_from_spec("product GF2 GF2 GF2");
  CHECK(r.size() == 8);
  CHECK(r.is_product());
  CHECK(r.units().size() == 1);
  CHECK(r.units()[0].name() == "h");
  CHECK((r.element("e") + r.element("c")) == r.element("b"));
}

TEST_CASE("product spec accepts other prime fields") {
  Ring r = ring_from_spec("product GF2 GF3");
  CHECK(r.size() == 6);
  CHECK(r.characteristic() == 6);
}

TEST_CASE("explicit tables: the inherited-unity subring") {
  Ring r = ring_from_spec(kRingO);
  CHECK(r.size() == 4);
  CHECK(r.one().name() == "h");
  CHECK(r.characteristic() == 2);
  Ring gf2 = make_gf(2);
  Ring gf2xgf2 = direct_product({gf2, gf2});
  auto iso = find_isomorphism(r, gf2xgf2);
  REQUIRE(iso.has_value());
  CHECK(is_isomorphism_map(*iso));

  // The stated correspondence a=[0,0], b=[1,0], g=[0,1], h=[1,1] is itself
  // an isomorphism.
  RingMap stated{r, gf2xgf2,
                 {gf2xgf2.element("[0,0]").index(),
                  gf2xgf2.element("[1,0]").index(),
                  gf2xgf2.element("[0,1]").index(),
                  gf2xgf2.element("[1,1]").index()},
                 true};
  CHECK(is_isomorphism_map(stated));
}

TEST_CASE("explicit tables: the adopted-unity subring") {
  Ring r = ring_from_spec(kRingBullet);
  CHECK(r.size() == 4);
  CHECK(r.one().name() == "e");
  Ring gf2 = make_gf(2);
  Ring gf2xgf2 = direct_product({gf2, gf2});
  auto iso = find_isomorphism(r, gf2xgf2);
  REQUIRE(iso.has_value());
  CHECK(is_isomorphism_map(*iso));
  RingMap stated{r, gf2xgf2,
                 {gf2xgf2.element("[0,0]").index(),
                  gf2xgf2.element("[1,0]").index(),
                  gf2xgf2.element("[0,1]").index(),
                  gf2xgf2.element("[1,1]").index()},
                 true};
  CHECK(is_isomorphism_map(stated));
  // Upstairs that same element e is a zero-divisor.
  Ring parent = ring_from_spec("product GF2 GF2 GF2");
  CHECK(parent.element("e").cls() == ElementClass::ZeroDivisor);
}

TEST_CASE("explicit tables: integers mod 4") {
  Ring r = ring_from_spec(kZ4);
  CHECK(r.size() == 4);
  CHECK(r.characteristic() == 4);
  CHECK(!r.is_field());
  CHECK(r.units().size() == 2);
  CHECK(r.element("2").cls() == ElementClass::ZeroDivisor);
}

TEST_CASE("parse errors carry positions") {
  try {
    ring_from_spec("elements: a b\nbogus: a\n");
    FAIL("expected SpecParseError");
  } catch (const SpecParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 1);
    CHECK(std::string(e.what()).find("bogus") != std::string::npos);
  }

  try {
    ring_from_spec("elements: a b\nadd:\na b\nb a a\n");
    FAIL("expected SpecParseError");
  } catch (const SpecParseError& e) {
    CHECK(e.line() == 4);
  }

  CHECK_THROWS_AS(ring_from_spec(""), SpecParseError);
  CHECK_THROWS_AS(ring_from_spec("# only a comment\n"), SpecParseError);
  CHECK_THROWS_AS(ring_from_spec("elements: a a\n"), SpecParseError);
  CHECK_THROWS_AS(ring_from_spec("product GF4"), SpecParseError);
  CHECK_THROWS_AS(ring_from_spec("product"), SpecParseError);
  // Missing one:
  CHECK_THROWS_AS(
      ring_from_spec("elements: a b\nadd:\na b\nb a\nmul:\na a\na b\nzero: a\n"),
      SpecParseError);
  // Unknown element inside a table.
  CHECK_THROWS_AS(
      ring_from_spec(
          "elements: a b\nadd:\na q\nb a\nmul:\na a\na b\nzero: a\none: b\n"),
      SpecParseError);
}

TEST_CASE("axiom violations in explicit tables name witnesses") {
  // "subtraction mod 3" as multiplication: neither commutative nor
  // associative, and 1 is not an identity.
  constexpr const char* bad = R"(
elements: 0 1 2
add:
0 1 2
1 2 0
2 0 1
mul:
0 2 1
1 0 2
2 1 0
zero: 0
one: 1
)";
  try {
    ring_from_spec(bad);
    FAIL("expected TableValidationError");
  } catch (const TableValidationError& e) {
    CHECK(!e.violations().empty());
    bool found_associativity = false;
    for (const std::string& v : e.violations())
      if (v.find("associative") != std::string::npos)
        found_associativity = true;
    CHECK(found_associativity);
  }
}

TEST_CASE("comments and blank lines are ignored") {
  Ring r = ring_from_spec(
      "# leading comment\n\nproduct GF2 GF2   # trailing comment\n\n");
  CHECK(r.size() == 4);
}
