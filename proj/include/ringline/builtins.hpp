#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ringline/ring.hpp"

namespace ringline {

/// Named rings reachable without authoring a spec file: R_triangle
/// (GF(2)xGF(2)xGF(2)), GF2xGF2, and GF<p> for any prime p <= 97.
Ring builtin_ring(std::string_view name);

/// The names advertised in help text and error messages.
std::vector<std::string> builtin_ring_names();

/// A CLI ring argument: "file:<path>" loads a ring-spec file, anything
/// else must be a built-in name.
Ring resolve_ring_argument(std::string_view arg);

/// Label of the product of prime fields the ring is isomorphic to
/// ("GF(2)", "GF(2)xGF(2)", ...), when the isomorphism search finds one.
std::optional<std::string> builtin_isomorphism_class(const Ring& r);

}  // namespace ringline
