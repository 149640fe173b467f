#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ringline {

class Ring;
class Element;

/// Hard caps keeping every exhaustive sweep desk-scale.
inline constexpr std::size_t kMaxRingSize = 4096;
inline constexpr unsigned kMaxPrime = 97;
/// Rings up to this size get the full O(n^3) axiom sweep on construction;
/// larger ones (only reachable through direct products of already-validated
/// factors) rely on componentwise construction.
inline constexpr std::size_t kAutoValidateCap = 256;

/// Trichotomy of elements of a finite commutative ring with unity.
enum class ElementClass { Zero, Unit, ZeroDivisor };

std::string_view to_string(ElementClass c);

/// Raw material for building a ring: explicit operation tables over indexed
/// elements, row-major (table[i * size + j]).
struct RingTables {
  std::size_t size = 0;
  std::vector<std::uint16_t> add;
  std::vector<std::uint16_t> mul;
  std::uint16_t zero = 0;
  std::uint16_t one = 0;
  std::vector<std::string> names;  ///< optional; defaults to "r0", "r1", ...
  std::string label;               ///< display name of the ring
  std::vector<Ring> factors;       ///< set when built as a direct product
  std::vector<std::uint16_t> display_order;  ///< optional rendering order
};

/// Raised when operation tables fail the commutative-ring-with-unity axioms.
/// Carries one entry per violated axiom instance, with witnesses by name.
class TableValidationError : public std::runtime_error {
 public:
  TableValidationError(const std::string& label,
                       std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

/// Checks the ring axioms exhaustively and reports every violated instance.
/// Structural defects (bad table sizes, out-of-range indices, duplicate
/// names) throw std::invalid_argument instead, since the axiom sweep cannot
/// run on malformed tables.
std::vector<std::string> validate_ring_tables(const RingTables& t);

/// A finite commutative ring with unity, immutable once constructed.
/// Cheap to copy (shared handle); all queries are safe concurrently.
class Ring {
 public:
  enum class Validation { Auto, Exhaustive };

  explicit Ring(RingTables tables, Validation mode = Validation::Auto);

  std::size_t size() const;
  Element element(std::size_t index) const;
  Element element(std::string_view name) const;
  bool has_element(std::string_view name) const;
  Element zero() const;
  Element one() const;
  std::uint16_t zero_index() const;
  std::uint16_t one_index() const;

  std::uint16_t add_index(std::uint16_t i, std::uint16_t j) const;
  std::uint16_t mul_index(std::uint16_t i, std::uint16_t j) const;
  std::uint16_t neg_index(std::uint16_t i) const;
  std::uint16_t sub_index(std::uint16_t i, std::uint16_t j) const;

  ElementClass classify(std::uint16_t i) const;
  std::optional<std::uint16_t> inverse_index(std::uint16_t i) const;
  std::vector<Element> units() const;
  std::vector<Element> zero_divisors(bool include_zero) const;
  bool is_field() const;
  unsigned characteristic() const;

  bool is_product() const;
  const std::vector<Ring>& factors() const;
  /// Mixed-radix decode of a product-ring index, first factor most
  /// significant. Throws if the ring was not built as a direct product.
  std::vector<std::uint16_t> coordinate_indices(std::uint16_t i) const;

  const std::string& name(std::uint16_t i) const;
  const std::string& label() const;
  std::span<const std::uint16_t> display_order() const;

  /// Identity of the underlying table data, not structural isomorphism.
  bool same(const Ring& other) const;

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

/// An element of a specific Ring. Arithmetic between elements of different
/// rings is rejected with std::invalid_argument.
class Element {
 public:
  Element(Ring ring, std::uint16_t index);

  const Ring& ring() const { return ring_; }
  std::uint16_t index() const { return index_; }
  const std::string& name() const;
  ElementClass cls() const;
  std::optional<Element> inverse() const;

  friend Element operator+(const Element& x, const Element& y);
  friend Element operator*(const Element& x, const Element& y);
  friend Element operator-(const Element& x, const Element& y);
  friend Element operator-(const Element& x);

  friend bool operator==(const Element& x, const Element& y);
  friend bool operator!=(const Element& x, const Element& y);

 private:
  Ring ring_;
  std::uint16_t index_;
};

/// The field GF(p) = integers mod p. Requires p prime, p <= 97.
Ring make_gf(unsigned p);

/// Componentwise product of one or more rings. Product of sizes <= 4096.
/// A product of exactly three GF(2) factors gets the letter names a..h by
/// coordinate triple: a=[0,0,0], b=[1,0,0], c=[0,1,0], d=[0,0,1],
/// e=[1,1,0], f=[1,0,1], g=[0,1,1], h=[1,1,1].
Ring direct_product(std::vector<Ring> factors);

/// Coordinates of a product-ring element as elements of the factors.
std::vector<Element> product_coordinates(const Element& x);

}  // namespace ringline
