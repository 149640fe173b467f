#include "ringline/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "ringline/classify.hpp"
#include "ringline/ideals.hpp"
#include "ringline/reference_data.hpp"

namespace ringline {

std::optional<Suite> suite_from_string(std::string_view s) {
  if (s == "axioms") return Suite::Axioms;
  if (s == "ideals") return Suite::Ideals;
  if (s == "line") return Suite::Line;
  if (s == "tables") return Suite::Tables;
  if (s == "all") return Suite::All;
  return std::nullopt;
}

std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::Axioms:
      return "axioms";
    case Suite::Ideals:
      return "ideals";
    case Suite::Line:
      return "line";
    case Suite::Tables:
      return "tables";
    case Suite::All:
      return "all";
  }
  return "?";
}

bool admissible_by_completion(const Element& alpha, const Element& beta) {
  const Ring& r = alpha.ring();
  if (!beta.ring().same(r))
    throw std::invalid_argument("pair entries come from different rings");
  for (std::uint16_t g = 0; g < r.size(); ++g)
    for (std::uint16_t d = 0; d < r.size(); ++d) {
      std::uint16_t det = r.sub_index(r.mul_index(alpha.index(), d),
                                      r.mul_index(beta.index(), g));
      if (r.classify(det) == ElementClass::Unit) return true;
    }
  return false;
}

bool invertible_by_search(const Mat2& m) {
  const Ring& r = m.a.ring();
  const std::uint16_t a = m.a.index(), b = m.b.index(), c = m.c.index(),
                      d = m.d.index();
  const std::uint16_t zero = r.zero_index(), one = r.one_index();
  const std::size_t n = r.size();
  for (std::uint16_t p = 0; p < n; ++p)
    for (std::uint16_t q = 0; q < n; ++q)
      for (std::uint16_t s = 0; s < n; ++s)
        for (std::uint16_t t = 0; t < n; ++t) {
          // M * N == I
          if (r.add_index(r.mul_index(a, p), r.mul_index(b, s)) != one)
            continue;
          if (r.add_index(r.mul_index(a, q), r.mul_index(b, t)) != zero)
            continue;
          if (r.add_index(r.mul_index(c, p), r.mul_index(d, s)) != zero)
            continue;
          if (r.add_index(r.mul_index(c, q), r.mul_index(d, t)) != one)
            continue;
          // N * M == I
          if (r.add_index(r.mul_index(p, a), r.mul_index(q, c)) != one)
            continue;
          if (r.add_index(r.mul_index(p, b), r.mul_index(q, d)) != zero)
            continue;
          if (r.add_index(r.mul_index(s, a), r.mul_index(t, c)) != zero)
            continue;
          if (r.add_index(r.mul_index(s, b), r.mul_index(t, d)) != one)
            continue;
          return true;
        }
  return false;
}

std::vector<std::vector<std::uint16_t>> ideal_sets_by_powerset(const Ring& r) {
  if (r.size() > 16)
    throw std::invalid_argument("power-set ideal oracle is capped at size 16");
  const auto n = static_cast<std::uint32_t>(r.size());
  std::vector<std::vector<std::uint16_t>> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::uint16_t> members;
    for (std::uint16_t i = 0; i < n; ++i)
      if (mask & (1u << i)) members.push_back(i);
    if (is_ideal_set(r, members)) out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

namespace {

class Checks {
 public:
  explicit Checks(std::string prefix) : prefix_(std::move(prefix)) {}

  void add(std::string name, bool passed, std::string detail) {
    results_.push_back(
        CheckResult{prefix_ + std::move(name), passed, std::move(detail)});
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::string prefix_;
  std::vector<CheckResult> results_;
};

std::string set_display(const Ring& r, const std::vector<std::uint16_t>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += r.name(s[i]);
  }
  return out + "}";
}

std::vector<std::uint16_t> indices_by_names(const Ring& r,
                                            std::initializer_list<const char*> names) {
  std::vector<std::uint16_t> out;
  for (const char* n : names) out.push_back(r.element(n).index());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<CheckResult> verify_axioms(const Ring& r) {
  Checks checks("");
  const std::size_t n = r.size();

  if (n <= kAutoValidateCap) {
    RingTables t;
    t.size = n;
    t.add.resize(n * n);
    t.mul.resize(n * n);
    for (std::uint16_t i = 0; i < n; ++i)
      for (std::uint16_t j = 0; j < n; ++j) {
        t.add[i * n + j] = r.add_index(i, j);
        t.mul[i * n + j] = r.mul_index(i, j);
      }
    t.zero = r.zero_index();
    t.one = r.one_index();
    for (std::uint16_t i = 0; i < n; ++i) t.names.push_back(r.name(i));
    std::vector<std::string> violations = validate_ring_tables(t);
    checks.add("ring axioms hold on every element tuple",
               violations.empty(),
               violations.empty()
                   ? std::to_string(n) + " elements swept"
                   : violations.front() + " (+" +
                         std::to_string(violations.size() - 1) + " more)");
  } else {
    checks.add("ring axioms hold on every element tuple", true,
               "accepted from componentwise construction (size " +
                   std::to_string(n) + " exceeds the sweep cap)");
  }

  bool trichotomy = true;
  std::string witness;
  for (std::uint16_t x = 0; x < n && trichotomy; ++x) {
    bool is_zero = x == r.zero_index();
    bool unit = false, annihilated = false;
    for (std::uint16_t y = 0; y < n; ++y) {
      if (r.mul_index(x, y) == r.one_index()) unit = true;
      if (y != r.zero_index() && r.mul_index(x, y) == r.zero_index())
        annihilated = true;
    }
    ElementClass expected = is_zero ? ElementClass::Zero
                            : unit  ? ElementClass::Unit
                                    : ElementClass::ZeroDivisor;
    bool consistent = r.classify(x) == expected &&
                      (is_zero || unit || annihilated) && !(unit && is_zero);
    if (unit && annihilated && !is_zero) consistent = false;
    if (!consistent) {
      trichotomy = false;
      witness = r.name(x);
    }
  }
  checks.add("every element is exactly one of zero, unit, zero-divisor",
             trichotomy,
             trichotomy ? std::to_string(n) + " elements classified"
                        : "element " + witness + " breaks the trichotomy");

  bool closure = true;
  std::string closure_witness;
  for (std::uint16_t x = 0; x < n && closure; ++x) {
    if (r.classify(x) != ElementClass::Unit) continue;
    auto inv = r.inverse_index(x);
    if (!inv || r.classify(*inv) != ElementClass::Unit) {
      closure = false;
      closure_witness = r.name(x);
      break;
    }
    for (std::uint16_t y = 0; y < n; ++y) {
      if (r.classify(y) != ElementClass::Unit) continue;
      if (r.classify(r.mul_index(x, y)) != ElementClass::Unit) {
        closure = false;
        closure_witness = r.name(x) + "*" + r.name(y);
        break;
      }
    }
  }
  checks.add("units form a group under multiplication", closure,
             closure ? std::to_string(r.units().size()) + " unit(s)"
                     : "failure at " + closure_witness);

  unsigned chr = r.characteristic();
  bool chr_ok = true;
  std::uint16_t acc = r.zero_index();
  for (unsigned k = 1; k <= chr; ++k) {
    acc = r.add_index(acc, r.one_index());
    if (k < chr && acc == r.zero_index()) chr_ok = false;
  }
  chr_ok = chr_ok && acc == r.zero_index();
  checks.add("characteristic is the least s with s*1 = 0", chr_ok,
             "characteristic " + std::to_string(chr));

  if (r.is_product()) {
    bool comp_ok = true;
    std::string comp_witness;
    for (std::uint16_t x = 0; x < n && comp_ok; ++x) {
      auto coords = r.coordinate_indices(x);
      bool all_units = true, some_nonunit = false;
      for (std::size_t k = 0; k < coords.size(); ++k) {
        ElementClass c = r.factors()[k].classify(coords[k]);
        if (c != ElementClass::Unit) {
          all_units = false;
          some_nonunit = true;
        }
      }
      bool is_unit = r.classify(x) == ElementClass::Unit;
      if (is_unit != all_units || is_unit == some_nonunit) {
        comp_ok = false;
        comp_witness = r.name(x);
      }
    }
    checks.add("product elements classify componentwise", comp_ok,
               comp_ok ? std::to_string(n) + " elements checked"
                       : "mismatch at " + comp_witness);
  }

  if (is_gf2_cubed(r)) {
    std::size_t mismatches = 0;
    std::string first;
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) {
        Element x = r.element(std::string_view(&refdata::kLetters[i], 1));
        Element y = r.element(std::string_view(&refdata::kLetters[j], 1));
        std::string sum = (x + y).name();
        std::string prod = (x * y).name();
        if (sum != std::string(1, refdata::kAddTable[i][j]) ||
            prod != std::string(1, refdata::kMulTable[i][j])) {
          if (mismatches == 0)
            first = "(" + x.name() + "," + y.name() + ")";
          ++mismatches;
        }
      }
    checks.add("generated tables match the reference 8x8 tables",
               mismatches == 0,
               mismatches == 0 ? "128 cells compared"
                               : std::to_string(mismatches) +
                                     " mismatches, first at " + first);
  }

  return checks.take();
}

std::vector<CheckResult> verify_ideals(const Ring& r) {
  Checks checks("");
  std::vector<Ideal> ideals = all_ideals(r);

  bool predicate_ok = true;
  std::string predicate_witness;
  for (const Ideal& ideal : ideals)
    if (!is_ideal_set(r, ideal.elements)) {
      predicate_ok = false;
      predicate_witness = ideal.display();
      break;
    }
  checks.add("every enumerated ideal satisfies the ideal predicate",
             predicate_ok,
             predicate_ok ? std::to_string(ideals.size()) + " ideals"
                          : predicate_witness);

  if (r.size() <= 16) {
    auto oracle = ideal_sets_by_powerset(r);
    bool same = oracle.size() == ideals.size();
    if (same)
      for (std::size_t i = 0; i < oracle.size(); ++i)
        if (oracle[i] != ideals[i].elements) {
          same = false;
          break;
        }
    checks.add("closure enumeration matches the power-set filter", same,
               std::to_string(oracle.size()) + " subsets qualify");
  }

  bool principal_ok = true;
  std::string principal_witness;
  for (const Ideal& ideal : ideals) {
    std::optional<std::uint16_t> gen;
    for (std::uint16_t a : ideal.elements) {
      if (principal_ideal(r.element(a)).elements == ideal.elements) {
        gen = a;
        break;
      }
    }
    if (gen.has_value() != ideal.principal ||
        (gen && ideal.generator != gen)) {
      principal_ok = false;
      principal_witness = ideal.display();
      break;
    }
  }
  checks.add("principal flags and generators are correct", principal_ok,
             principal_ok ? std::to_string(ideals.size()) + " ideals checked"
                          : principal_witness);

  bool maximal_ok = true;
  std::string maximal_witness;
  for (const Ideal& ideal : ideals) {
    bool expect = ideal.elements.size() < r.size();
    if (expect)
      for (const Ideal& other : ideals) {
        if (other.elements.size() >= r.size() ||
            other.elements.size() <= ideal.elements.size())
          continue;
        if (std::includes(other.elements.begin(), other.elements.end(),
                          ideal.elements.begin(), ideal.elements.end())) {
          expect = false;
          break;
        }
      }
    if (expect != ideal.maximal) {
      maximal_ok = false;
      maximal_witness = ideal.display();
      break;
    }
  }
  checks.add("maximal flags agree with pairwise inclusion", maximal_ok,
             maximal_ok ? std::to_string(ideals.size()) + " ideals checked"
                        : maximal_witness);

  // Independent radical characterization: x is in the radical iff
  // 1 - r*x is a unit for every r.
  Ideal radical = jacobson_radical(r);
  std::vector<std::uint16_t> quasi;
  for (std::uint16_t x = 0; x < r.size(); ++x) {
    bool in = true;
    for (std::uint16_t s = 0; s < r.size(); ++s) {
      std::uint16_t v = r.sub_index(r.one_index(), r.mul_index(s, x));
      if (r.classify(v) != ElementClass::Unit) {
        in = false;
        break;
      }
    }
    if (in) quasi.push_back(x);
  }
  checks.add("radical equals the quasi-regular elements",
             radical.elements == quasi,
             "radical " + set_display(r, radical.elements));

  bool quotient_ok = true;
  std::string quotient_witness;
  for (const Ideal& ideal : ideals) {
    if (ideal.elements.size() == r.size()) continue;  // trivial quotient
    QuotientRing q = quotient(r, ideal);
    bool ok = q.ring.size() * ideal.elements.size() == r.size();
    RingMap proj{r, q.ring, q.projection, false};
    ok = ok && is_homomorphism(proj);
    std::vector<std::uint16_t> kernel;
    for (std::uint16_t x = 0; x < r.size(); ++x)
      if (q.projection[x] == q.ring.zero_index()) kernel.push_back(x);
    ok = ok && kernel == ideal.elements;
    ok = ok && q.ring.is_field() == ideal.maximal;
    if (!ok) {
      quotient_ok = false;
      quotient_witness = ideal.display();
      break;
    }
  }
  checks.add(
      "quotients: size, canonical projection, kernel, field iff maximal",
      quotient_ok,
      quotient_ok ? std::to_string(ideals.size() - 1) + " quotients built"
                  : quotient_witness);

  {
    QuotientRing q = quotient(r, ideals.front());  // ideals.front() == {0}
    RingMap proj{r, q.ring, q.projection, false};
    bool ok = q.ring.size() == r.size() && is_isomorphism_map(proj);
    checks.add("quotient by {0} is isomorphic to the ring itself", ok,
               "size " + std::to_string(q.ring.size()));
  }

  if (is_gf2_cubed(r)) {
    const std::vector<std::vector<std::uint16_t>> expected = {
        indices_by_names(r, {"a"}),
        indices_by_names(r, {"a", "b"}),
        indices_by_names(r, {"a", "c"}),
        indices_by_names(r, {"a", "d"}),
        indices_by_names(r, {"a", "b", "c", "e"}),
        indices_by_names(r, {"a", "b", "d", "f"}),
        indices_by_names(r, {"a", "c", "d", "g"}),
        indices_by_names(r, {"a", "b", "c", "d", "e", "f", "g", "h"}),
    };
    std::vector<std::vector<std::uint16_t>> got;
    for (const Ideal& ideal : ideals) got.push_back(ideal.elements);
    std::vector<std::vector<std::uint16_t>> want = expected;
    std::sort(want.begin(), want.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    checks.add("the eight ideals are the frozen family", got == want,
               std::to_string(got.size()) + " ideals found");

    bool all_principal = std::all_of(
        ideals.begin(), ideals.end(),
        [](const Ideal& ideal) { return ideal.principal; });
    checks.add("every ideal is principal", all_principal,
               std::to_string(ideals.size()) + " ideals");

    auto find_ideal = [&](std::initializer_list<const char*> names) {
      std::vector<std::uint16_t> want_set = indices_by_names(r, names);
      for (const Ideal& ideal : ideals)
        if (ideal.elements == want_set) return ideal;
      throw std::logic_error("expected ideal missing");
    };
    Ideal ie = find_ideal({"a", "b", "c", "e"});
    Ideal iff = find_ideal({"a", "b", "d", "f"});
    Ideal ig = find_ideal({"a", "c", "d", "g"});
    bool maxes_ok = ie.maximal && iff.maximal && ig.maximal;
    std::vector<Ideal> maxes = maximal_ideals(r);
    maxes_ok = maxes_ok && maxes.size() == 3;
    checks.add("the three size-4 ideals are exactly the maximal ones",
               maxes_ok, "3 maximal ideals expected");

    auto intersect = [](const std::vector<std::uint16_t>& a,
                        const std::vector<std::uint16_t>& b) {
      std::vector<std::uint16_t> out;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                            std::back_inserter(out));
      return out;
    };
    bool inter_ok =
        intersect(ie.elements, iff.elements) == indices_by_names(r, {"a", "b"}) &&
        intersect(ie.elements, ig.elements) == indices_by_names(r, {"a", "c"}) &&
        intersect(iff.elements, ig.elements) == indices_by_names(r, {"a", "d"});
    checks.add("pairwise intersections of the maximal ideals", inter_ok,
               "three intersections compared");

    checks.add("radical is {a}",
               radical.elements == indices_by_names(r, {"a"}),
               "radical " + set_display(r, radical.elements));

    Ring gf2 = make_gf(2);
    Ring gf2xgf2 = direct_product({gf2, gf2});
    bool small_quotients_ok = true;
    bool big_quotients_ok = true;
    for (const Ideal& ideal : ideals) {
      if (ideal.elements.size() == 4) {
        auto iso = find_isomorphism(quotient(r, ideal).ring, gf2);
        if (!iso || !is_isomorphism_map(*iso)) big_quotients_ok = false;
      } else if (ideal.elements.size() == 2) {
        auto iso = find_isomorphism(quotient(r, ideal).ring, gf2xgf2);
        if (!iso || !is_isomorphism_map(*iso)) small_quotients_ok = false;
      }
    }
    checks.add("quotients by the maximal ideals are isomorphic to GF(2)",
               big_quotients_ok, "3 quotients");
    checks.add(
        "quotients by the size-2 ideals are isomorphic to GF(2)xGF(2)",
        small_quotients_ok, "3 quotients");

    std::vector<Subring> subs = subrings(r, false);
    auto find_subring = [&](std::initializer_list<const char*> names)
        -> std::optional<Subring> {
      std::vector<std::uint16_t> want_set = indices_by_names(r, names);
      for (const Subring& s : subs)
        if (s.elements == want_set) return s;
      return std::nullopt;
    };
    auto inherited = find_subring({"a", "b", "g", "h"});
    auto adopted = find_subring({"a", "b", "c", "e"});
    bool subring_ok = inherited && adopted &&
                      inherited->unity == r.element("h").index() &&
                      inherited->unity_inherited &&
                      adopted->unity == r.element("e").index() &&
                      !adopted->unity_inherited;
    if (subring_ok) {
      auto iso1 =
          find_isomorphism(subring_as_ring(r, inherited->elements), gf2xgf2);
      auto iso2 =
          find_isomorphism(subring_as_ring(r, adopted->elements), gf2xgf2);
      subring_ok = iso1 && iso2;
    }
    checks.add(
        "subrings {a,b,g,h} and {a,b,c,e} found with unities h and e, "
        "both isomorphic to GF(2)xGF(2)",
        subring_ok, std::to_string(subs.size()) + " subrings enumerated");
  }

  return checks.take();
}

namespace {

std::uint32_t next_rand(std::mt19937& rng) { return rng(); }

}  // namespace

std::vector<CheckResult> verify_line(const Ring& r) {
  Checks checks("");
  ProjectiveLine line(r);
  const std::size_t m = line.point_count();
  const std::size_t n = r.size();

  bool refl_sym = true;
  for (std::size_t i = 0; i < m && refl_sym; ++i) {
    if (line.distant(i, i)) refl_sym = false;
    for (std::size_t j = 0; j < m; ++j)
      if (line.distant(i, j) != line.distant(j, i)) refl_sym = false;
  }
  checks.add("neighbour relation is reflexive and symmetric", refl_sym,
             std::to_string(m) + " points");

  // Canonical representatives: admissible, least in their unit orbit, and
  // the orbits partition the admissible pairs.
  bool canon_ok = true;
  std::size_t admissible_pairs = 0;
  std::vector<std::uint16_t> unit_idx;
  for (std::uint16_t u = 0; u < n; ++u)
    if (r.classify(u) == ElementClass::Unit) unit_idx.push_back(u);
  for (std::uint16_t a = 0; a < n && canon_ok; ++a)
    for (std::uint16_t b = 0; b < n && canon_ok; ++b) {
      bool adm = is_admissible(r.element(a), r.element(b));
      auto idx = line.point_index(r.element(a), r.element(b));
      if (adm != idx.has_value()) canon_ok = false;
      if (adm) ++admissible_pairs;
      if (!adm || !canon_ok) continue;
      auto [ca, cb] = line.point_rep(*idx);
      bool in_orbit = false;
      for (std::uint16_t u : unit_idx) {
        if (r.mul_index(u, a) == ca && r.mul_index(u, b) == cb)
          in_orbit = true;
        if (std::make_pair(r.mul_index(u, a), r.mul_index(u, b)) <
            std::make_pair(ca, cb))
          canon_ok = false;  // representative was not minimal
      }
      if (!in_orbit) canon_ok = false;
    }
  checks.add("points are least representatives of unit-scaling orbits",
             canon_ok,
             std::to_string(admissible_pairs) + " admissible pairs in " +
                 std::to_string(m) + " classes");

  bool rep_indep = true;
  for (std::size_t i = 0; i < m && rep_indep; ++i) {
    auto [a, b] = line.point_rep(i);
    for (std::uint16_t u : unit_idx) {
      std::uint16_t ua = r.mul_index(u, a), ub = r.mul_index(u, b);
      for (std::size_t j = 0; j < m; ++j) {
        auto [c, d] = line.point_rep(j);
        std::uint16_t det =
            r.sub_index(r.mul_index(ua, d), r.mul_index(ub, c));
        bool dist = r.classify(det) == ElementClass::Unit;
        if (dist != line.distant(i, j)) {
          rep_indep = false;
          break;
        }
      }
    }
  }
  checks.add("distant is independent of the representative chosen", rep_indep,
             std::to_string(unit_idx.size()) + " unit rescalings per point");

  if (n <= 8) {
    bool fast_slow = true;
    for (std::uint16_t a = 0; a < n && fast_slow; ++a)
      for (std::uint16_t b = 0; b < n; ++b) {
        Element ea = r.element(a), eb = r.element(b);
        if (is_admissible(ea, eb) != admissible_by_completion(ea, eb)) {
          fast_slow = false;
          break;
        }
      }
    checks.add("admissibility fast path matches the completion search",
               fast_slow, std::to_string(n * n) + " pairs");

    bool det_ok = true;
    std::size_t tested = 0;
    for (std::size_t i = 0; i < m && det_ok; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        auto [a, b] = line.point_rep(i);
        auto [c, d] = line.point_rep(j);
        Mat2 mat{r.element(a), r.element(b), r.element(c), r.element(d)};
        if (is_invertible_2x2(mat) != invertible_by_search(mat)) {
          det_ok = false;
          break;
        }
        ++tested;
      }
    std::mt19937 rng(0xC0FFEE);
    for (std::size_t k = 0; k < 10000 && det_ok; ++k) {
      Mat2 mat{r.element(next_rand(rng) % n), r.element(next_rand(rng) % n),
               r.element(next_rand(rng) % n), r.element(next_rand(rng) % n)};
      if (is_invertible_2x2(mat) != invertible_by_search(mat)) det_ok = false;
      ++tested;
    }
    checks.add("det-unit criterion matches the brute-force inverse search",
               det_ok, std::to_string(tested) + " matrices");
  }

  if (r.is_field()) {
    bool field_ok = m == n + 1;
    for (std::size_t i = 0; i < m && field_ok; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (line.distant(i, j) != (i != j)) {
          field_ok = false;
          break;
        }
    checks.add("field line: neighbour equals identity and size is q+1",
               field_ok, std::to_string(m) + " points");
    checks.add("field line admits no transitivity counterexample",
               !line.transitivity_counterexample().has_value(), "exhaustive");
  }

  bool product_of_fields = r.is_product();
  if (product_of_fields)
    for (const Ring& f : r.factors())
      if (!f.is_field()) product_of_fields = false;
  if (product_of_fields) {
    const auto& factors = r.factors();
    std::vector<ProjectiveLine> flines;
    std::size_t expect = 1;
    for (const Ring& f : factors) {
      flines.emplace_back(f);
      expect *= flines.back().point_count();
    }
    bool bij_ok = m == expect;
    std::set<std::vector<std::size_t>> seen;
    std::vector<std::vector<std::size_t>> tuples(m);
    for (std::size_t i = 0; i < m && bij_ok; ++i) {
      auto [a, b] = line.point_rep(i);
      auto ca = r.coordinate_indices(a);
      auto cb = r.coordinate_indices(b);
      std::vector<std::size_t> tuple;
      for (std::size_t k = 0; k < factors.size(); ++k) {
        auto idx = flines[k].point_index(factors[k].element(ca[k]),
                                         factors[k].element(cb[k]));
        if (!idx) {
          bij_ok = false;
          break;
        }
        tuple.push_back(*idx);
      }
      if (!bij_ok) break;
      if (!seen.insert(tuple).second) bij_ok = false;
      tuples[i] = std::move(tuple);
    }
    if (bij_ok)
      for (std::size_t i = 0; i < m && bij_ok; ++i)
        for (std::size_t j = 0; j < m; ++j) {
          bool componentwise_distinct = true;
          for (std::size_t k = 0; k < factors.size(); ++k)
            if (tuples[i][k] == tuples[j][k]) componentwise_distinct = false;
          if (line.distant(i, j) != componentwise_distinct) {
            bij_ok = false;
            break;
          }
        }
    checks.add(
        "line is in distant-preserving bijection with the product of "
        "factor lines",
        bij_ok, std::to_string(m) + " points vs " + std::to_string(expect));
  }

  if (is_gf2_cubed(r)) {
    checks.add("line has 27 points", m == 27, std::to_string(m) + " points");

    bool nb18 = true, deg8 = true;
    for (std::size_t i = 0; i < m; ++i) {
      if (line.neighbourhood(i).size() != 18) nb18 = false;
      if (line.distant_degree(i) != 8) deg8 = false;
    }
    checks.add("every neighbourhood has 18 points", nb18, "27 points swept");
    checks.add("every point is distant from exactly 8 points", deg8,
               "27 points swept");
    checks.add("the distant graph has 108 edges",
               line.distant_edge_count() == 108,
               std::to_string(line.distant_edge_count()) + " edges");

    bool pair12 = true;
    std::size_t distant_pairs = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        if (!line.distant(i, j)) continue;
        ++distant_pairs;
        const std::size_t pts[2] = {i, j};
        if (line.common_neighbourhood(pts).size() != 12) pair12 = false;
      }
    checks.add("neighbourhoods of any two distant points share 12 points",
               pair12, std::to_string(distant_pairs) + " distant pairs");

    bool triple6 = true;
    std::size_t triples = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        if (!line.distant(i, j)) continue;
        for (std::size_t k = j + 1; k < m; ++k) {
          if (!line.distant(i, k) || !line.distant(j, k)) continue;
          ++triples;
          const std::size_t pts[3] = {i, j, k};
          if (line.common_neighbourhood(pts).size() != 6) triple6 = false;
        }
      }
    checks.add(
        "neighbourhoods of any three pairwise distant points share 6 points",
        triple6, std::to_string(triples) + " triples");

    auto cex = line.transitivity_counterexample();
    bool cex_ok = cex.has_value();
    if (cex_ok) {
      auto [x, y, z] = *cex;
      cex_ok = line.neighbour(x, y) && line.neighbour(y, z) &&
               line.distant(x, z);
    }
    checks.add("a verified transitivity counterexample exists", cex_ok,
               cex_ok ? line.point_name((*cex)[0]) + " ~ " +
                            line.point_name((*cex)[1]) + " ~ " +
                            line.point_name((*cex)[2]) + " yet the ends are distant"
                      : "none found");
  }

  return checks.take();
}

std::vector<CheckResult> verify_tables(const Ring& r) {
  if (!is_gf2_cubed(r))
    throw std::invalid_argument(
        "the tables suite applies only to GF(2)xGF(2)xGF(2); got '" +
        r.label() + "'");
  Checks checks("");
  ProjectiveLine line(r);

  bool weights_ok = true;
  for (const char* s : {"b", "c", "d"})
    if (zero_divisor_weight(r.element(s)) != ZdWeight::Slim) weights_ok = false;
  for (const char* s : {"e", "f", "g"})
    if (zero_divisor_weight(r.element(s)) != ZdWeight::Fat) weights_ok = false;
  checks.add("zero-divisor weights: b,c,d slim and e,f,g fat", weights_ok,
             "6 elements");

  bool labels_ok = line.point_count() == 27;
  std::set<std::string> label_set;
  for (std::size_t i = 0; i < line.point_count() && labels_ok; ++i) {
    PointLabel l = label_point(line, i);
    if (!label_set.insert(l.str()).second) labels_ok = false;
    if (point_by_label(line, l.str()) != i) labels_ok = false;
  }
  if (labels_ok)
    for (const auto& p : refdata::kPoints) {
      std::size_t idx = point_by_label(line, p.label);
      auto [a, b] = line.point_rep(idx);
      if (r.name(a) != std::string(1, p.alpha) ||
          r.name(b) != std::string(1, p.beta))
        labels_ok = false;
    }
  checks.add("labels are a bijection matching the reference coordinates",
             labels_ok, "27 labels");

  auto inner = inner_shell_labels();
  auto outer = outer_shell_labels();
  auto nucleus = nucleus_labels();
  auto compare = [&](const char* name, std::span<const std::string> rows,
                     std::span<const std::string> cols,
                     std::span<const std::string_view> expect) {
    ShellTable t = shell_table(line, rows, cols);
    std::size_t mismatches = 0;
    std::string first;
    for (std::size_t i = 0; i < t.cells.size(); ++i)
      for (std::size_t j = 0; j < t.cells[i].size(); ++j)
        if (t.cells[i][j] != expect[i][j]) {
          if (!mismatches)
            first = t.row_labels[i] + "/" + t.col_labels[j];
          ++mismatches;
        }
    checks.add(std::string("reference table: ") + name, mismatches == 0,
               mismatches == 0
                   ? std::to_string(t.cells.size() * t.col_labels.size()) +
                         " cells"
                   : std::to_string(mismatches) + " mismatches, first at " +
                         first);
  };
  std::vector<std::string_view> t1(refdata::kInnerTable.begin(),
                                   refdata::kInnerTable.end());
  std::vector<std::string_view> t2(refdata::kOuterTable.begin(),
                                   refdata::kOuterTable.end());
  std::vector<std::string_view> t3(refdata::kCrossTable.begin(),
                                   refdata::kCrossTable.end());
  std::vector<std::string_view> t4a(refdata::kNucleusInnerTable.begin(),
                                    refdata::kNucleusInnerTable.end());
  std::vector<std::string_view> t4b(refdata::kNucleusOuterTable.begin(),
                                    refdata::kNucleusOuterTable.end());
  compare("inner shell vs inner shell", inner, inner, t1);
  compare("outer shell vs outer shell", outer, outer, t2);
  compare("outer shell vs inner shell", outer, inner, t3);
  compare("nucleus vs inner shell", nucleus, inner, t4a);
  compare("nucleus vs outer shell", nucleus, outer, t4b);

  // Neighbourhoods of the nucleus in terms of label series.
  auto series_set = [&](std::size_t pt) {
    std::set<std::string> out;
    for (std::size_t q : line.neighbourhood(pt))
      out.insert(label_point(line, q).str());
    return out;
  };
  auto expect_series = [&](std::initializer_list<char> series) {
    std::set<std::string> out;
    for (const auto& p : refdata::kPoints)
      for (char s : series)
        if (p.label[0] == s && p.label.size() == 3)
          out.insert(std::string(p.label));
    return out;
  };
  bool u_ok = series_set(point_by_label(line, "U")) ==
              expect_series({'I', 'S', 'F'});
  bool v_ok = series_set(point_by_label(line, "V")) ==
              expect_series({'J', 'S', 'F'});
  bool w_ok = series_set(point_by_label(line, "W")) ==
              expect_series({'I', 'J', 'F'});
  checks.add("neighbourhood of U is the I, S, F series", u_ok, "18 labels");
  checks.add("neighbourhood of V is the J, S, F series", v_ok, "18 labels");
  checks.add("neighbourhood of W is the I, J, F series", w_ok, "18 labels");

  {
    std::size_t u = point_by_label(line, "U");
    std::size_t v = point_by_label(line, "V");
    std::size_t w = point_by_label(line, "W");
    const std::size_t pair[2] = {u, v};
    const std::size_t triple[3] = {u, v, w};
    auto common_uv = line.common_neighbourhood(pair);
    auto common_uvw = line.common_neighbourhood(triple);
    std::set<std::string> uvw_labels;
    for (std::size_t q : common_uvw) uvw_labels.insert(label_point(line, q).str());
    bool ok = common_uv.size() == 12 && common_uvw.size() == 6 &&
              uvw_labels == expect_series({'F'});
    checks.add("U,V share 12 neighbours and U,V,W share the six F points",
               ok, "computed from the distant matrix");
  }

  // Cross-shell coupling per row of the outer-vs-inner table: fat rows are
  // neighbour to two inner points of every series/weight quadrant; slim
  // rows are distant from one I-point and three J-points ('+' sign) or the
  // mirror ('-' sign).
  {
    ShellTable cross = shell_table(line, outer, inner);
    bool fat_ok = true, slim_ok = true;
    for (std::size_t row = 0; row < cross.row_labels.size(); ++row) {
      const std::string& label = cross.row_labels[row];
      int quad_neighbours[4] = {0, 0, 0, 0};  // I.slim, I.fat, J.slim, J.fat
      int distant_i = 0, distant_j = 0;
      for (std::size_t col = 0; col < cross.col_labels.size(); ++col) {
        bool dist = cross.cells[row][col] == '+';
        std::size_t quadrant = col / 3;  // ordering fixes the quadrants
        if (!dist) quad_neighbours[quadrant]++;
        if (dist) (col < 6 ? distant_i : distant_j)++;
      }
      if (label[0] == 'F') {
        for (int q : quad_neighbours)
          if (q != 2) fat_ok = false;
      } else {
        int want_i = label[2] == '+' ? 1 : 3;
        int want_j = label[2] == '+' ? 3 : 1;
        if (distant_i != want_i || distant_j != want_j) slim_ok = false;
      }
    }
    checks.add("fat outer points couple two-and-two with the inner shell",
               fat_ok, "6 rows");
    checks.add("slim outer points show the three-and-one asymmetry", slim_ok,
               "6 rows");
  }

  {
    auto census = layer_census(line);
    std::map<std::string, int> got(census.begin(), census.end());
    bool ok = got["nucleus"] == 3 && got["inner"] == 12 &&
              got["inner.I"] == 6 && got["inner.J"] == 6 &&
              got["inner.I.slim"] == 3 && got["inner.I.fat"] == 3 &&
              got["inner.J.slim"] == 3 && got["inner.J.fat"] == 3 &&
              got["outer"] == 12 && got["outer.S"] == 6 &&
              got["outer.F"] == 6 && got["outer.S.plus"] == 3 &&
              got["outer.S.minus"] == 3 && got["outer.F.plus"] == 3 &&
              got["outer.F.minus"] == 3;
    checks.add("layer census: 3 nucleus, 6+6 inner, 6+6 outer with 3+3 splits",
               ok, "15 counters");
  }

  // Swapping the coordinates of an outer point flips its sign and keeps
  // series and index.
  {
    bool swap_ok = true;
    for (const auto& p : refdata::kPoints) {
      if (p.label[0] != 'S' && p.label[0] != 'F') continue;
      std::size_t idx = point_by_label(line, p.label);
      auto [alpha, beta] = line.point(idx);
      auto sw = line.point_index(beta, alpha);
      if (!sw) {
        swap_ok = false;
        continue;
      }
      PointLabel orig = label_point(line, idx);
      PointLabel mirrored = label_point(line, *sw);
      if (mirrored.series != orig.series || mirrored.index != orig.index ||
          mirrored.tag == orig.tag)
        swap_ok = false;
    }
    checks.add("coordinate swap flips the outer sign, fixing series and index",
               swap_ok, "12 outer points");
  }

  return checks.take();
}

std::vector<CheckResult> run_suite(const Ring& r, Suite suite) {
  auto with_prefix = [](std::vector<CheckResult> results,
                        std::string_view prefix) {
    for (CheckResult& c : results)
      c.name = std::string(prefix) + ": " + c.name;
    return results;
  };
  switch (suite) {
    case Suite::Axioms:
      return with_prefix(verify_axioms(r), "axioms");
    case Suite::Ideals:
      return with_prefix(verify_ideals(r), "ideals");
    case Suite::Line:
      return with_prefix(verify_line(r), "line");
    case Suite::Tables:
      return with_prefix(verify_tables(r), "tables");
    case Suite::All: {
      std::vector<CheckResult> out = with_prefix(verify_axioms(r), "axioms");
      auto append = [&](std::vector<CheckResult> more) {
        out.insert(out.end(), std::make_move_iterator(more.begin()),
                   std::make_move_iterator(more.end()));
      };
      append(with_prefix(verify_ideals(r), "ideals"));
      if (r.size() <= kLineRingSizeCap)
        append(with_prefix(verify_line(r), "line"));
      if (is_gf2_cubed(r)) append(with_prefix(verify_tables(r), "tables"));
      return out;
    }
  }
  throw std::logic_error("unknown suite");
}

}  // namespace ringline
