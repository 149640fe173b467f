#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ringline/proj_line.hpp"
#include "ringline/ring.hpp"

namespace ringline {

/// Outcome of one verification check.
struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  ///< counts on success, the counterexample on failure
};

enum class Suite { Axioms, Ideals, Line, Tables, All };

std::optional<Suite> suite_from_string(std::string_view s);
std::string_view to_string(Suite s);

/// Ring-axiom and classification checks, exhaustive for sizes within the
/// validation cap.
std::vector<CheckResult> verify_axioms(const Ring& r);

/// Ideal enumeration against the power-set oracle (size <= 16), flag
/// correctness, radical cross-check, and quotient structure; plus the
/// frozen GF(2)^3 ideal family when applicable.
std::vector<CheckResult> verify_ideals(const Ring& r);

/// Projective-line structure: relation properties, canonical
/// representatives, admissibility and invertibility oracles, field and
/// product laws, and the GF(2)^3 counting laws when applicable.
std::vector<CheckResult> verify_line(const Ring& r);

/// Shell-taxonomy checks against the bundled reference tables.
/// Only defined for GF(2)^3; throws std::invalid_argument otherwise.
std::vector<CheckResult> verify_tables(const Ring& r);

/// Runs one suite, or all applicable suites for Suite::All. Check names
/// are prefixed with their suite.
std::vector<CheckResult> run_suite(const Ring& r, Suite suite);

/// Exhaustive reference oracles. Deliberately written as plain searches,
/// independent of the implementation paths they cross-check.

/// Search all (gamma, delta) completions for an invertible matrix.
bool admissible_by_completion(const Element& alpha, const Element& beta);

/// Search all size^4 candidate matrices for a two-sided inverse.
bool invertible_by_search(const Mat2& m);

/// Filter every subset of the ring by the ideal predicate (size <= 16).
std::vector<std::vector<std::uint16_t>> ideal_sets_by_powerset(const Ring& r);

}  // namespace ringline
