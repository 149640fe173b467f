#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ringline/ring.hpp"

namespace ringline {

/// Isomorphism search is factorial in the worst case; keep it desk-scale.
inline constexpr std::size_t kIsomorphismSizeCap = 16;
inline constexpr std::size_t kSubringSizeCap = 16;

/// A two-sided ideal of a finite commutative ring, stored as a sorted set
/// of element indices.
struct Ideal {
  Ring ring;
  std::vector<std::uint16_t> elements;
  bool principal = false;
  std::optional<std::uint16_t> generator;  ///< least-index generator if principal
  bool maximal = false;

  bool contains(std::uint16_t i) const;
  /// "{a,b}" - members by name, in index order.
  std::string display() const;
};

/// Smallest ideal containing the generators: closes under addition and
/// under multiplication by every ring element.
std::vector<std::uint16_t> ideal_closure(const Ring& r,
                                         std::span<const std::uint16_t> gens);

/// True iff the set contains zero and is closed under addition and under
/// multiplication by arbitrary ring elements.
bool is_ideal_set(const Ring& r, std::span<const std::uint16_t> elements);

/// { ra : r in R }, with the generator recorded and maximality marked.
Ideal principal_ideal(const Element& a);

/// Every ideal, found by closing generator sets (breadth-first over
/// single-element extensions of known ideals). Sorted by size, then by
/// elements lexicographically; includes {0} and R.
std::vector<Ideal> all_ideals(const Ring& r);

/// The proper ideals maximal under inclusion among proper ideals.
std::vector<Ideal> maximal_ideals(const Ring& r);

/// Intersection of all maximal ideals.
Ideal jacobson_radical(const Ring& r);

/// True iff the ring has exactly one maximal ideal.
bool is_local(const Ring& r);

/// The coset ring R/I together with the canonical surjection.
struct QuotientRing {
  Ring base;
  Ideal ideal;
  Ring ring;                             ///< the ring of cosets
  std::vector<std::uint16_t> projection;  ///< base index -> coset index

  Element project(const Element& x) const;
};

/// Builds R/I. Cosets are named after their lexicographically least member
/// (by name); the projection is verified to be a ring homomorphism whose
/// kernel is exactly the ideal.
QuotientRing quotient(const Ring& r, const Ideal& ideal);

/// A structure-preserving map between rings, given element-wise.
struct RingMap {
  Ring source;
  Ring target;
  std::vector<std::uint16_t> images;  ///< source index -> target index
  bool isomorphism = false;
};

/// Checks preservation of + and * on all pairs, and 1 -> 1.
bool is_homomorphism(const RingMap& m);
/// is_homomorphism plus bijectivity.
bool is_isomorphism_map(const RingMap& m);

/// Backtracking search for a ring isomorphism, pruned by per-element
/// profiles (additive order, class, idempotency). Exhaustive: a nullopt
/// result means no isomorphism exists. Sizes must be <= 16.
std::optional<RingMap> find_isomorphism(const Ring& r, const Ring& s);

/// A subset closed under + and * that forms a ring with its own unity.
struct Subring {
  std::vector<std::uint16_t> elements;  ///< sorted
  std::uint16_t unity;
  bool unity_inherited;  ///< unity equals the parent ring's one
};

/// All nontrivial subrings (the trivial {0} is excluded since rings here
/// require zero != one). With the flag set, only subrings whose unity is
/// the parent's one. Ring size must be <= 16.
std::vector<Subring> subrings(const Ring& r, bool require_inherited_unity);

/// The induced ring on a multiplicatively and additively closed subset.
/// Element names are inherited; the subset's own unity becomes `one`.
Ring subring_as_ring(const Ring& r, std::span<const std::uint16_t> elements);

}  // namespace ringline
