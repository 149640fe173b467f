#include <doctest.h>

#include <set>

#include "ringline/proj_line.hpp"
#include "ringline/ring_spec.hpp"
#include "ringline/verify.hpp"

using namespace ringline;

namespace {

Ring r_triangle() { return ring_from_spec("product GF2 GF2 GF2"); }

Ring z4() {
  return ring_from_spec(
      "elements: 0 1 2 3\n"
      "add:\n0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 2\n"
      "mul:\n0 0 0 0\n0 1 2 3\n0 2 0 2\n0 3 2 1\n"
      "zero: 0\none: 1\n");
}

std::size_t point_of(const ProjectiveLine& line, const char* alpha,
                     const char* beta) {
  auto idx = line.point_index(line.ring().element(alpha),
                              line.ring().element(beta));
  REQUIRE(idx.has_value());
  return *idx;
}

}  // namespace

TEST_CASE("det2 over GF(2)^3") {
  Ring r = r_triangle();
  auto el = [&](const char* n) { return r.element(n); };
  CHECK(det2({el("b"), el("h"), el("h"), el("g")}) == el("h"));
  CHECK(det2({el("h"), el("a"), el("a"), el("h")}) == el("h"));
  CHECK(det2({el("e"), el("g"), el("c"), el("h")}) == el("b"));
}

TEST_CASE("det2 honors subtraction in odd characteristic") {
  Ring gf3 = make_gf(3);
  auto el = [&](const char* n) { return gf3.element(n); };
  // 1*1 - 2*2 = 1 - 4 = -3 = 0 mod 3
  CHECK(det2({el("1"), el("2"), el("2"), el("1")}) == el("0"));
  // 2*2 - 1*1 = 3 = 0; 2*1 - 1*1 = 1
  CHECK(det2({el("2"), el("1"), el("1"), el("1")}) == el("1"));
}

TEST_CASE("det2 rejects mixed rings") {
  Ring a = make_gf(2), b = make_gf(2);
  CHECK_THROWS_AS(det2({a.one(), a.zero(), b.zero(), b.one()}),
                  std::invalid_argument);
}

TEST_CASE("is_invertible_2x2 over GF(2)^3") {
  Ring r = r_triangle();
  auto el = [&](const char* n) { return r.element(n); };
  CHECK(is_invertible_2x2({el("b"), el("h"), el("h"), el("g")}));
  CHECK(!is_invertible_2x2({el("e"), el("g"), el("c"), el("h")}));
  CHECK(is_invertible_2x2({el("h"), el("a"), el("a"), el("h")}));
}

TEST_CASE("admissibility examples") {
  Ring r = r_triangle();
  CHECK(is_admissible(r.element("e"), r.element("d")));
  CHECK(!is_admissible(r.element("e"), r.element("b")));
  CHECK(is_admissible(r.element("h"), r.element("a")));
  CHECK(!is_admissible(r.element("a"), r.element("a")));
}

TEST_CASE("admissibility fast path equals the completion search") {
  for (const Ring& r : {r_triangle(), make_gf(3), z4(),
                        direct_product({make_gf(2), make_gf(2)})}) {
    for (std::uint16_t a = 0; a < r.size(); ++a)
      for (std::uint16_t b = 0; b < r.size(); ++b) {
        Element ea = r.element(a), eb = r.element(b);
        CHECK(is_admissible(ea, eb) == admissible_by_completion(ea, eb));
      }
  }
}

TEST_CASE("line sizes over small rings") {
  CHECK(ProjectiveLine(r_triangle()).point_count() == 27);
  CHECK(ProjectiveLine(make_gf(2)).point_count() == 3);
  CHECK(ProjectiveLine(direct_product({make_gf(2), make_gf(2)})).point_count() ==
        9);
  CHECK(ProjectiveLine(make_gf(3)).point_count() == 4);
  CHECK(ProjectiveLine(z4()).point_count() == 6);
  CHECK_THROWS_AS(ProjectiveLine(make_gf(97)), std::invalid_argument);
}

TEST_CASE("the GF(2) line is the three-point line") {
  ProjectiveLine line(make_gf(2));
  REQUIRE(line.point_count() == 3);
  std::set<std::string> names;
  for (std::size_t i = 0; i < 3; ++i) names.insert(line.point_name(i));
  CHECK(names == std::set<std::string>{"(0,1)", "(1,0)", "(1,1)"});
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(line.distant(i, j) == (i != j));
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(line.neighbourhood(i).empty());
}

TEST_CASE("distant and neighbour examples on the GF(2)^3 line") {
  Ring r = r_triangle();
  ProjectiveLine line(r);
  std::size_t j1s = point_of(line, "b", "h");
  std::size_t i3f = point_of(line, "h", "g");
  CHECK(line.distant(j1s, i3f));
  std::size_t f2p = point_of(line, "e", "g");
  std::size_t j2s = point_of(line, "c", "h");
  CHECK(line.neighbour(f2p, j2s));
  CHECK(line.neighbour(j1s, j1s));  // reflexive
  CHECK(!line.distant(j1s, j1s));
}

TEST_CASE("neighbourhoods and common neighbourhoods") {
  Ring r = r_triangle();
  ProjectiveLine line(r);
  std::size_t u = point_of(line, "h", "a");
  std::size_t v = point_of(line, "a", "h");
  std::size_t w = point_of(line, "h", "h");
  CHECK(line.neighbourhood(u).size() == 18);
  CHECK(line.neighbourhood(v).size() == 18);
  CHECK(line.neighbourhood(w).size() == 18);

  const std::size_t pair[2] = {u, v};
  CHECK(line.common_neighbourhood(pair).size() == 12);
  const std::size_t triple[3] = {u, v, w};
  CHECK(line.common_neighbourhood(triple).size() == 6);
  const std::size_t single[1] = {u};
  CHECK(line.common_neighbourhood(single) == line.neighbourhood(u));

  const std::size_t dup[2] = {u, u};
  CHECK_THROWS_AS(line.common_neighbourhood(dup), std::invalid_argument);
  CHECK_THROWS_AS(line.common_neighbourhood({}), std::invalid_argument);
}

TEST_CASE("counting laws over all points, pairs, and triples") {
  ProjectiveLine line(r_triangle());
  const std::size_t m = line.point_count();
  for (std::size_t i = 0; i < m; ++i) {
    CHECK(line.neighbourhood(i).size() == 18);
    CHECK(line.distant_degree(i) == 8);
  }
  CHECK(line.distant_edge_count() == 108);
  std::size_t pairs = 0, triples = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!line.distant(i, j)) continue;
      ++pairs;
      const std::size_t two[2] = {i, j};
      CHECK(line.common_neighbourhood(two).size() == 12);
      for (std::size_t k = j + 1; k < m; ++k) {
        if (!line.distant(i, k) || !line.distant(j, k)) continue;
        ++triples;
        const std::size_t three[3] = {i, j, k};
        CHECK(line.common_neighbourhood(three).size() == 6);
      }
    }
  CHECK(pairs == 108);
  CHECK(triples == 36);
}

TEST_CASE("representative independence under unit rescaling") {
  for (const Ring& r : {make_gf(3), make_gf(5), z4()}) {
    ProjectiveLine line(r);
    std::vector<std::uint16_t> units;
    for (std::uint16_t u = 0; u < r.size(); ++u)
      if (r.classify(u) == ElementClass::Unit) units.push_back(u);
    for (std::size_t i = 0; i < line.point_count(); ++i) {
      auto [a, b] = line.point_rep(i);
      for (std::uint16_t u : units) {
        auto scaled = line.point_index(r.element(r.mul_index(u, a)),
                                       r.element(r.mul_index(u, b)));
        REQUIRE(scaled.has_value());
        CHECK(*scaled == i);  // same class, hence the same distant row
      }
    }
  }
}

TEST_CASE("product lines factor componentwise") {
  Ring gf2 = make_gf(2);
  for (std::size_t copies : {std::size_t{2}, std::size_t{3}}) {
    std::vector<Ring> factors(copies, gf2);
    Ring prod = direct_product(factors);
    ProjectiveLine line(prod);
    ProjectiveLine base(gf2);
    std::size_t expected = 1;
    for (std::size_t c = 0; c < copies; ++c) expected *= base.point_count();
    REQUIRE(line.point_count() == expected);

    // Explicit bijection onto tuples of base-line points.
    std::set<std::vector<std::size_t>> seen;
    std::vector<std::vector<std::size_t>> tuples;
    for (std::size_t i = 0; i < line.point_count(); ++i) {
      auto [a, b] = line.point_rep(i);
      auto ca = prod.coordinate_indices(a);
      auto cb = prod.coordinate_indices(b);
      std::vector<std::size_t> tuple;
      for (std::size_t c = 0; c < copies; ++c) {
        auto idx = base.point_index(gf2.element(ca[c]), gf2.element(cb[c]));
        REQUIRE(idx.has_value());
        tuple.push_back(*idx);
      }
      CHECK(seen.insert(tuple).second);
      tuples.push_back(std::move(tuple));
    }
    // Distant exactly when all coordinates differ.
    for (std::size_t i = 0; i < line.point_count(); ++i)
      for (std::size_t j = 0; j < line.point_count(); ++j) {
        bool all_differ = true;
        for (std::size_t c = 0; c < copies; ++c)
          if (tuples[i][c] == tuples[j][c]) all_differ = false;
        CHECK(line.distant(i, j) == all_differ);
      }
  }
}

TEST_CASE("invertibility criterion matches brute force on sampled matrices") {
  Ring r = r_triangle();
  ProjectiveLine line(r);
  for (std::size_t i = 0; i < line.point_count(); i += 5)
    for (std::size_t j = 0; j < line.point_count(); j += 3) {
      auto [a, b] = line.point_rep(i);
      auto [c, d] = line.point_rep(j);
      Mat2 m{r.element(a), r.element(b), r.element(c), r.element(d)};
      CHECK(is_invertible_2x2(m) == invertible_by_search(m));
    }
  Ring gf3 = make_gf(3);
  for (std::uint16_t a = 0; a < 3; ++a)
    for (std::uint16_t b = 0; b < 3; ++b)
      for (std::uint16_t c = 0; c < 3; ++c)
        for (std::uint16_t d = 0; d < 3; ++d) {
          Mat2 m{gf3.element(a), gf3.element(b), gf3.element(c),
                 gf3.element(d)};
          CHECK(is_invertible_2x2(m) == invertible_by_search(m));
        }
}

TEST_CASE("transitivity counterexamples") {
  ProjectiveLine tri(r_triangle());
  auto cex = tri.transitivity_counterexample();
  REQUIRE(cex.has_value());
  auto [x, y, z] = *cex;
  CHECK(tri.neighbour(x, y));
  CHECK(tri.neighbour(y, z));
  CHECK(tri.distant(x, z));
  CHECK(x != y);
  CHECK(y != z);
  CHECK(x != z);

  CHECK(!ProjectiveLine(make_gf(2)).transitivity_counterexample().has_value());
  CHECK(!ProjectiveLine(make_gf(3)).transitivity_counterexample().has_value());
  // Local ring: neighbour is an equivalence, so no counterexample either.
  CHECK(!ProjectiveLine(z4()).transitivity_counterexample().has_value());
}

TEST_CASE("point lookups reject foreign elements and bad indices") {
  ProjectiveLine line(make_gf(2));
  Ring other = make_gf(2);
  CHECK_THROWS_AS(line.point_index(other.one(), other.zero()),
                  std::invalid_argument);
  CHECK_THROWS_AS(line.distant(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(line.neighbourhood(5), std::invalid_argument);
  CHECK(!line.point_index(line.ring().zero(), line.ring().zero()).has_value());
}
