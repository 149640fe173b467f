#include "ringline/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace ringline {

std::string_view to_string(ElementClass c) {
  switch (c) {
    case ElementClass::Zero:
      return "zero";
    case ElementClass::Unit:
      return "unit";
    case ElementClass::ZeroDivisor:
      return "zero-divisor";
  }
  return "?";
}

namespace {

std::string join_violations(const std::string& label,
                            const std::vector<std::string>& violations) {
  std::ostringstream os;
  os << "ring '" << label << "' fails " << violations.size()
     << " axiom check(s)";
  std::size_t shown = std::min<std::size_t>(violations.size(), 8);
  for (std::size_t i = 0; i < shown; ++i) os << "\n  " << violations[i];
  if (violations.size() > shown)
    os << "\n  ... (" << (violations.size() - shown) << " more)";
  return os.str();
}

}  // namespace

TableValidationError::TableValidationError(const std::string& label,
                                           std::vector<std::string> violations)
    : std::runtime_error(join_violations(label, violations)),
      violations_(std::move(violations)) {}

struct Ring::Data {
  std::size_t size = 0;
  std::vector<std::uint16_t> add;
  std::vector<std::uint16_t> mul;
  std::uint16_t zero = 0;
  std::uint16_t one = 0;
  std::vector<std::string> names;
  std::string label;
  std::vector<Ring> factors;
  std::vector<std::size_t> factor_sizes;
  std::vector<std::uint16_t> display_order;
  std::unordered_map<std::string, std::uint16_t> name_index;

  // Derived caches.
  std::vector<ElementClass> classes;
  std::vector<std::int32_t> inverses;  // -1 when no multiplicative inverse
  unsigned characteristic = 0;

  std::uint16_t at(const std::vector<std::uint16_t>& t, std::uint16_t i,
                   std::uint16_t j) const {
    return t[static_cast<std::size_t>(i) * size + j];
  }
};

namespace {

void check_structure(const RingTables& t) {
  if (t.size == 0) throw std::invalid_argument("ring must have at least one element");
  if (t.size > kMaxRingSize)
    throw std::invalid_argument("ring size " + std::to_string(t.size) +
                                " exceeds the cap of " +
                                std::to_string(kMaxRingSize));
  const std::size_t cells = t.size * t.size;
  if (t.add.size() != cells)
    throw std::invalid_argument("addition table has " +
                                std::to_string(t.add.size()) +
                                " cells, expected " + std::to_string(cells));
  if (t.mul.size() != cells)
    throw std::invalid_argument("multiplication table has " +
                                std::to_string(t.mul.size()) +
                                " cells, expected " + std::to_string(cells));
  for (std::uint16_t v : t.add)
    if (v >= t.size) throw std::invalid_argument("addition table entry out of range");
  for (std::uint16_t v : t.mul)
    if (v >= t.size) throw std::invalid_argument("multiplication table entry out of range");
  if (t.zero >= t.size || t.one >= t.size)
    throw std::invalid_argument("zero/one index out of range");
  if (!t.names.empty()) {
    if (t.names.size() != t.size)
      throw std::invalid_argument("expected one name per element");
    std::vector<std::string> sorted = t.names;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("element names must be unique");
  }
  if (!t.display_order.empty()) {
    if (t.display_order.size() != t.size)
      throw std::invalid_argument("display order must list every element once");
    std::vector<bool> seen(t.size, false);
    for (std::uint16_t v : t.display_order) {
      if (v >= t.size || seen[v])
        throw std::invalid_argument("display order must be a permutation");
      seen[v] = true;
    }
  }
}

std::string element_label(const RingTables& t, std::uint16_t i) {
  if (!t.names.empty()) return t.names[i];
  return "r" + std::to_string(i);
}

}  // namespace

std::vector<std::string> validate_ring_tables(const RingTables& t) {
  check_structure(t);
  std::vector<std::string> out;
  const auto n = static_cast<std::uint16_t>(t.size);
  auto nm = [&](std::uint16_t i) { return element_label(t, i); };
  auto add = [&](std::uint16_t i, std::uint16_t j) {
    return t.add[static_cast<std::size_t>(i) * n + j];
  };
  auto mul = [&](std::uint16_t i, std::uint16_t j) {
    return t.mul[static_cast<std::size_t>(i) * n + j];
  };

  if (t.zero == t.one)
    out.push_back("zero and one coincide; the ring must be nontrivial");

  for (std::uint16_t x = 0; x < n; ++x) {
    if (add(t.zero, x) != x)
      out.push_back("additive identity fails: 0 + " + nm(x) + " = " +
                    nm(add(t.zero, x)));
    if (mul(t.one, x) != x)
      out.push_back("multiplicative identity fails: 1 * " + nm(x) + " = " +
                    nm(mul(t.one, x)));
    bool has_inverse = false;
    for (std::uint16_t y = 0; y < n; ++y)
      if (add(x, y) == t.zero) {
        has_inverse = true;
        break;
      }
    if (!has_inverse)
      out.push_back("no additive inverse for " + nm(x));
  }

  for (std::uint16_t x = 0; x < n; ++x)
    for (std::uint16_t y = x; y < n; ++y) {
      if (add(x, y) != add(y, x))
        out.push_back("addition not commutative at (" + nm(x) + ", " + nm(y) +
                      "): " + nm(add(x, y)) + " vs " + nm(add(y, x)));
      if (mul(x, y) != mul(y, x))
        out.push_back("multiplication not commutative at (" + nm(x) + ", " +
                      nm(y) + "): " + nm(mul(x, y)) + " vs " + nm(mul(y, x)));
    }

  for (std::uint16_t x = 0; x < n; ++x)
    for (std::uint16_t y = 0; y < n; ++y)
      for (std::uint16_t z = 0; z < n; ++z) {
        if (add(add(x, y), z) != add(x, add(y, z)))
          out.push_back("addition not associative at (" + nm(x) + ", " + nm(y) +
                        ", " + nm(z) + "): (" + nm(x) + "+" + nm(y) + ")+" +
                        nm(z) + " = " + nm(add(add(x, y), z)) + ", " + nm(x) +
                        "+(" + nm(y) + "+" + nm(z) + ") = " +
                        nm(add(x, add(y, z))));
        if (mul(mul(x, y), z) != mul(x, mul(y, z)))
          out.push_back("multiplication not associative at (" + nm(x) + ", " +
                        nm(y) + ", " + nm(z) + "): (" + nm(x) + "*" + nm(y) +
                        ")*" + nm(z) + " = " + nm(mul(mul(x, y), z)) + ", " +
                        nm(x) + "*(" + nm(y) + "*" + nm(z) + ") = " +
                        nm(mul(x, mul(y, z))));
        if (mul(x, add(y, z)) != add(mul(x, y), mul(x, z)))
          out.push_back("distributivity fails at (" + nm(x) + ", " + nm(y) +
                        ", " + nm(z) + "): " + nm(x) + "*(" + nm(y) + "+" +
                        nm(z) + ") = " + nm(mul(x, add(y, z))) + " but " +
                        nm(x) + "*" + nm(y) + " + " + nm(x) + "*" + nm(z) +
                        " = " + nm(add(mul(x, y), mul(x, z))));
      }
  return out;
}

Ring::Ring(RingTables tables, Validation mode) {
  check_structure(tables);
  if (mode == Validation::Exhaustive || tables.size <= kAutoValidateCap) {
    std::vector<std::string> violations = validate_ring_tables(tables);
    if (!violations.empty())
      throw TableValidationError(
          tables.label.empty() ? "(unnamed)" : tables.label,
          std::move(violations));
  }

  auto d = std::make_shared<Data>();
  d->size = tables.size;
  d->add = std::move(tables.add);
  d->mul = std::move(tables.mul);
  d->zero = tables.zero;
  d->one = tables.one;
  d->label = tables.label.empty() ? "ring" + std::to_string(tables.size)
                                  : std::move(tables.label);
  if (tables.names.empty()) {
    d->names.reserve(d->size);
    for (std::size_t i = 0; i < d->size; ++i)
      d->names.push_back("r" + std::to_string(i));
  } else {
    d->names = std::move(tables.names);
  }
  d->factors = std::move(tables.factors);
  for (const Ring& f : d->factors) d->factor_sizes.push_back(f.size());
  if (tables.display_order.empty()) {
    d->display_order.resize(d->size);
    std::iota(d->display_order.begin(), d->display_order.end(), 0);
  } else {
    d->display_order = std::move(tables.display_order);
  }
  for (std::uint16_t i = 0; i < d->size; ++i) d->name_index[d->names[i]] = i;

  d->inverses.assign(d->size, -1);
  d->classes.resize(d->size);
  for (std::uint16_t x = 0; x < d->size; ++x) {
    for (std::uint16_t y = 0; y < d->size; ++y)
      if (d->at(d->mul, x, y) == d->one) {
        d->inverses[x] = y;
        break;
      }
    if (x == d->zero)
      d->classes[x] = ElementClass::Zero;
    else
      d->classes[x] = d->inverses[x] >= 0 ? ElementClass::Unit
                                          : ElementClass::ZeroDivisor;
  }

  std::uint16_t acc = d->one;
  unsigned s = 1;
  while (acc != d->zero && s <= d->size) {
    acc = d->at(d->add, acc, d->one);
    ++s;
  }
  d->characteristic = s;

  data_ = std::move(d);
}

std::size_t Ring::size() const { return data_->size; }

Element Ring::element(std::size_t index) const {
  if (index >= data_->size)
    throw std::invalid_argument("element index " + std::to_string(index) +
                                " out of range for ring of size " +
                                std::to_string(data_->size));
  return Element(*this, static_cast<std::uint16_t>(index));
}

Element Ring::element(std::string_view name) const {
  auto it = data_->name_index.find(std::string(name));
  if (it == data_->name_index.end())
    throw std::invalid_argument("ring '" + data_->label +
                                "' has no element named '" +
                                std::string(name) + "'");
  return Element(*this, it->second);
}

bool Ring::has_element(std::string_view name) const {
  return data_->name_index.count(std::string(name)) != 0;
}

Element Ring::zero() const { return Element(*this, data_->zero); }
Element Ring::one() const { return Element(*this, data_->one); }
std::uint16_t Ring::zero_index() const { return data_->zero; }
std::uint16_t Ring::one_index() const { return data_->one; }

std::uint16_t Ring::add_index(std::uint16_t i, std::uint16_t j) const {
  return data_->at(data_->add, i, j);
}

std::uint16_t Ring::mul_index(std::uint16_t i, std::uint16_t j) const {
  return data_->at(data_->mul, i, j);
}

std::uint16_t Ring::neg_index(std::uint16_t i) const {
  for (std::uint16_t y = 0; y < data_->size; ++y)
    if (data_->at(data_->add, i, y) == data_->zero) return y;
  throw std::logic_error("validated ring lost an additive inverse");
}

std::uint16_t Ring::sub_index(std::uint16_t i, std::uint16_t j) const {
  return add_index(i, neg_index(j));
}

ElementClass Ring::classify(std::uint16_t i) const {
  return data_->classes.at(i);
}

std::optional<std::uint16_t> Ring::inverse_index(std::uint16_t i) const {
  std::int32_t inv = data_->inverses.at(i);
  if (inv < 0) return std::nullopt;
  return static_cast<std::uint16_t>(inv);
}

std::vector<Element> Ring::units() const {
  std::vector<Element> out;
  for (std::uint16_t i = 0; i < data_->size; ++i)
    if (data_->classes[i] == ElementClass::Unit) out.push_back(Element(*this, i));
  return out;
}

std::vector<Element> Ring::zero_divisors(bool include_zero) const {
  std::vector<Element> out;
  for (std::uint16_t i = 0; i < data_->size; ++i) {
    if (data_->classes[i] == ElementClass::ZeroDivisor ||
        (include_zero && data_->classes[i] == ElementClass::Zero))
      out.push_back(Element(*this, i));
  }
  return out;
}

bool Ring::is_field() const {
  for (std::uint16_t i = 0; i < data_->size; ++i)
    if (data_->classes[i] == ElementClass::ZeroDivisor) return false;
  return true;
}

unsigned Ring::characteristic() const { return data_->characteristic; }

bool Ring::is_product() const { return !data_->factors.empty(); }

const std::vector<Ring>& Ring::factors() const {
  if (!is_product())
    throw std::invalid_argument("ring '" + data_->label +
                                "' was not built as a direct product");
  return data_->factors;
}

std::vector<std::uint16_t> Ring::coordinate_indices(std::uint16_t i) const {
  if (!is_product())
    throw std::invalid_argument("ring '" + data_->label +
                                "' was not built as a direct product");
  const auto& sizes = data_->factor_sizes;
  std::vector<std::uint16_t> coords(sizes.size());
  std::size_t rest = i;
  for (std::size_t k = sizes.size(); k-- > 0;) {
    coords[k] = static_cast<std::uint16_t>(rest % sizes[k]);
    rest /= sizes[k];
  }
  return coords;
}

const std::string& Ring::name(std::uint16_t i) const {
  return data_->names.at(i);
}

const std::string& Ring::label() const { return data_->label; }

std::span<const std::uint16_t> Ring::display_order() const {
  return data_->display_order;
}

bool Ring::same(const Ring& other) const { return data_ == other.data_; }

Element::Element(Ring ring, std::uint16_t index)
    : ring_(std::move(ring)), index_(index) {
  if (index_ >= ring_.size())
    throw std::invalid_argument("element index out of range");
}

const std::string& Element::name() const { return ring_.name(index_); }

ElementClass Element::cls() const { return ring_.classify(index_); }

std::optional<Element> Element::inverse() const {
  auto inv = ring_.inverse_index(index_);
  if (!inv) return std::nullopt;
  return Element(ring_, *inv);
}

namespace {

void require_same_ring(const Element& x, const Element& y, const char* op) {
  if (!x.ring().same(y.ring()))
    throw std::invalid_argument(std::string("cannot ") + op +
                                " elements of different rings ('" +
                                x.ring().label() + "' vs '" +
                                y.ring().label() + "')");
}

}  // namespace

Element operator+(const Element& x, const Element& y) {
  require_same_ring(x, y, "add");
  return Element(x.ring(), x.ring().add_index(x.index(), y.index()));
}

Element operator*(const Element& x, const Element& y) {
  require_same_ring(x, y, "multiply");
  return Element(x.ring(), x.ring().mul_index(x.index(), y.index()));
}

Element operator-(const Element& x, const Element& y) {
  require_same_ring(x, y, "subtract");
  return Element(x.ring(), x.ring().sub_index(x.index(), y.index()));
}

Element operator-(const Element& x) {
  return Element(x.ring(), x.ring().neg_index(x.index()));
}

bool operator==(const Element& x, const Element& y) {
  return x.ring().same(y.ring()) && x.index() == y.index();
}

bool operator!=(const Element& x, const Element& y) { return !(x == y); }

namespace {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Letter names of GF(2)^3 by coordinate triple (first coordinate listed
// first): a=[0,0,0], b=[1,0,0], c=[0,1,0], d=[0,0,1], e=[1,1,0],
// f=[1,0,1], g=[0,1,1], h=[1,1,1].
const char* letter_for_triple(unsigned x0, unsigned x1, unsigned x2) {
  static constexpr const char* kByBits[8] = {
      // index = x0*4 + x1*2 + x2
      "a", "d", "c", "g", "b", "f", "e", "h"};
  return kByBits[x0 * 4 + x1 * 2 + x2];
}

}  // namespace

Ring make_gf(unsigned p) {
  if (!is_prime(p))
    throw std::invalid_argument("GF(" + std::to_string(p) +
                                "): order must be a prime");
  if (p > kMaxPrime)
    throw std::invalid_argument("GF(" + std::to_string(p) +
                                "): prime exceeds the cap of " +
                                std::to_string(kMaxPrime));
  RingTables t;
  t.size = p;
  t.add.resize(t.size * t.size);
  t.mul.resize(t.size * t.size);
  for (unsigned i = 0; i < p; ++i)
    for (unsigned j = 0; j < p; ++j) {
      t.add[i * p + j] = static_cast<std::uint16_t>((i + j) % p);
      t.mul[i * p + j] = static_cast<std::uint16_t>((i * j) % p);
    }
  t.zero = 0;
  t.one = 1;
  for (unsigned i = 0; i < p; ++i) t.names.push_back(std::to_string(i));
  t.label = "GF(" + std::to_string(p) + ")";
  return Ring(std::move(t), Ring::Validation::Exhaustive);
}

Ring direct_product(std::vector<Ring> factors) {
  if (factors.empty())
    throw std::invalid_argument("direct product needs at least one factor");
  std::size_t n = 1;
  for (const Ring& f : factors) {
    n *= f.size();
    if (n > kMaxRingSize)
      throw std::invalid_argument(
          "direct product size exceeds the cap of " +
          std::to_string(kMaxRingSize));
  }
  const std::size_t k = factors.size();

  std::vector<std::size_t> sizes(k);
  for (std::size_t i = 0; i < k; ++i) sizes[i] = factors[i].size();
  auto decode = [&](std::size_t idx, std::vector<std::uint16_t>& coords) {
    for (std::size_t c = k; c-- > 0;) {
      coords[c] = static_cast<std::uint16_t>(idx % sizes[c]);
      idx /= sizes[c];
    }
  };
  auto encode = [&](const std::vector<std::uint16_t>& coords) {
    std::size_t idx = 0;
    for (std::size_t c = 0; c < k; ++c) idx = idx * sizes[c] + coords[c];
    return static_cast<std::uint16_t>(idx);
  };

  RingTables t;
  t.size = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  std::vector<std::uint16_t> ci(k), cj(k), cr(k);
  for (std::size_t i = 0; i < n; ++i) {
    decode(i, ci);
    for (std::size_t j = 0; j < n; ++j) {
      decode(j, cj);
      for (std::size_t c = 0; c < k; ++c)
        cr[c] = factors[c].add_index(ci[c], cj[c]);
      t.add[i * n + j] = encode(cr);
      for (std::size_t c = 0; c < k; ++c)
        cr[c] = factors[c].mul_index(ci[c], cj[c]);
      t.mul[i * n + j] = encode(cr);
    }
  }
  std::vector<std::uint16_t> czero(k), cone(k);
  for (std::size_t c = 0; c < k; ++c) {
    czero[c] = factors[c].zero_index();
    cone[c] = factors[c].one_index();
  }
  t.zero = encode(czero);
  t.one = encode(cone);

  const bool gf2_cubed = k == 3 && sizes[0] == 2 && sizes[1] == 2 &&
                         sizes[2] == 2;
  t.names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    decode(i, ci);
    if (gf2_cubed) {
      t.names.push_back(letter_for_triple(ci[0], ci[1], ci[2]));
    } else {
      std::string nm = "[";
      for (std::size_t c = 0; c < k; ++c) {
        if (c) nm += ",";
        nm += factors[c].name(ci[c]);
      }
      nm += "]";
      t.names.push_back(std::move(nm));
    }
  }
  if (gf2_cubed) {
    // Render tables in letter order a..h rather than index order.
    t.display_order.resize(n);
    std::vector<std::pair<std::string, std::uint16_t>> by_name;
    for (std::uint16_t i = 0; i < n; ++i) by_name.emplace_back(t.names[i], i);
    std::sort(by_name.begin(), by_name.end());
    for (std::size_t i = 0; i < n; ++i) t.display_order[i] = by_name[i].second;
  }
  for (std::size_t c = 0; c < k; ++c) {
    if (c) t.label += "x";
    t.label += factors[c].label();
  }
  t.factors = std::move(factors);
  return Ring(std::move(t));
}

std::vector<Element> product_coordinates(const Element& x) {
  const Ring& r = x.ring();
  std::vector<std::uint16_t> coords = r.coordinate_indices(x.index());
  std::vector<Element> out;
  out.reserve(coords.size());
  for (std::size_t c = 0; c < coords.size(); ++c)
    out.push_back(r.factors()[c].element(coords[c]));
  return out;
}

}  // namespace ringline
