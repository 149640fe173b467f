#pragma once

#include <array>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ringline/ring.hpp"

namespace ringline {

/// Line construction enumerates size^2 pairs; keep the base ring small.
inline constexpr std::size_t kLineRingSizeCap = 64;

/// A 2x2 matrix over one ring, rows (a b; c d).
struct Mat2 {
  Element a, b;
  Element c, d;
};

/// ad - bc, evaluated with the ring's own subtraction.
Element det2(const Mat2& m);

/// True iff det2(m) is a unit.
bool is_invertible_2x2(const Mat2& m);

/// True iff (alpha, beta) extends to an invertible 2x2 matrix. Uses the
/// finite-commutative-ring criterion: the ideal generated by the pair is
/// the whole ring.
bool is_admissible(const Element& alpha, const Element& beta);

/// The projective line over a finite commutative ring: unit-scaling classes
/// of admissible pairs, with the symmetric distant relation on points.
/// Points are stored via their canonical representative, the
/// lexicographically least pair (by element index, first coordinate most
/// significant) in the scaling class, and are ordered lexicographically.
class ProjectiveLine {
 public:
  explicit ProjectiveLine(Ring ring);

  const Ring& ring() const { return ring_; }
  std::size_t point_count() const { return points_.size(); }
  std::pair<std::uint16_t, std::uint16_t> point_rep(std::size_t i) const;
  std::pair<Element, Element> point(std::size_t i) const;
  std::string point_name(std::size_t i) const;  ///< "(a,b)" by element names

  /// Class index of an admissible pair (any representative); nullopt when
  /// the pair is not admissible.
  std::optional<std::size_t> point_index(const Element& alpha,
                                         const Element& beta) const;

  bool distant(std::size_t i, std::size_t j) const;
  /// Complement of distant; reflexive by convention.
  bool neighbour(std::size_t i, std::size_t j) const;
  std::size_t distant_degree(std::size_t i) const;
  std::size_t distant_edge_count() const;

  /// All points neighbour to i, excluding i itself.
  std::vector<std::size_t> neighbourhood(std::size_t i) const;

  /// Intersection of the neighbourhoods of the given points. A single
  /// point gives its own neighbourhood. The list must be non-empty and
  /// duplicate-free.
  std::vector<std::size_t> common_neighbourhood(
      std::span<const std::size_t> points) const;

  /// First triple (X, Y, Z) in lexicographic point order with X ~ Y,
  /// Y ~ Z but X distant Z, if any. Empty for lines over fields and,
  /// more generally, whenever neighbour is an equivalence.
  std::optional<std::array<std::size_t, 3>> transitivity_counterexample()
      const;

 private:
  Ring ring_;
  std::vector<std::pair<std::uint16_t, std::uint16_t>> points_;
  std::vector<std::int32_t> class_of_pair_;  // size^2 -> point or -1
  std::vector<std::uint8_t> distant_;        // n x n, row-major
};

inline ProjectiveLine build_line(const Ring& r) { return ProjectiveLine(r); }

}  // namespace ringline
