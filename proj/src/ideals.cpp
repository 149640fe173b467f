#include "ringline/ideals.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace ringline {

bool Ideal::contains(std::uint16_t i) const {
  return std::binary_search(elements.begin(), elements.end(), i);
}

std::string Ideal::display() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i) out += ",";
    out += ring.name(elements[i]);
  }
  out += "}";
  return out;
}

std::vector<std::uint16_t> ideal_closure(const Ring& r,
                                         std::span<const std::uint16_t> gens) {
  const std::size_t n = r.size();
  std::vector<bool> in(n, false);
  std::vector<std::uint16_t> members;
  std::vector<std::uint16_t> work;
  auto push = [&](std::uint16_t x) {
    if (!in[x]) {
      in[x] = true;
      members.push_back(x);
      work.push_back(x);
    }
  };
  push(r.zero_index());
  for (std::uint16_t g : gens) push(g);
  while (!work.empty()) {
    std::uint16_t x = work.back();
    work.pop_back();
    for (std::uint16_t s = 0; s < n; ++s) push(r.mul_index(s, x));
    // members grows during the loop; index-based iteration covers new ones
    for (std::size_t i = 0; i < members.size(); ++i)
      push(r.add_index(members[i], x));
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool is_ideal_set(const Ring& r, std::span<const std::uint16_t> elements) {
  const std::size_t n = r.size();
  std::vector<bool> in(n, false);
  for (std::uint16_t x : elements) {
    if (x >= n) return false;
    in[x] = true;
  }
  if (!in[r.zero_index()]) return false;
  for (std::uint16_t x : elements) {
    for (std::uint16_t y : elements)
      if (!in[r.add_index(x, y)]) return false;
    for (std::uint16_t s = 0; s < n; ++s)
      if (!in[r.mul_index(s, x)]) return false;
  }
  return true;
}

namespace {

std::vector<std::uint16_t> principal_set(const Ring& r, std::uint16_t a) {
  std::vector<std::uint16_t> out;
  std::vector<bool> seen(r.size(), false);
  for (std::uint16_t s = 0; s < r.size(); ++s) {
    std::uint16_t v = r.mul_index(s, a);
    if (!seen[v]) {
      seen[v] = true;
      out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Least-index generator if the set is principal.
std::optional<std::uint16_t> find_generator(
    const Ring& r, const std::vector<std::uint16_t>& elements) {
  for (std::uint16_t a : elements)
    if (principal_set(r, a) == elements) return a;
  return std::nullopt;
}

std::vector<std::vector<std::uint16_t>> enumerate_ideal_sets(const Ring& r) {
  std::set<std::vector<std::uint16_t>> known;
  std::vector<std::vector<std::uint16_t>> work;
  std::vector<std::uint16_t> zero_set = {r.zero_index()};
  known.insert(zero_set);
  work.push_back(zero_set);
  while (!work.empty()) {
    std::vector<std::uint16_t> base = std::move(work.back());
    work.pop_back();
    for (std::uint16_t x = 0; x < r.size(); ++x) {
      if (std::binary_search(base.begin(), base.end(), x)) continue;
      std::vector<std::uint16_t> gens = base;
      gens.push_back(x);
      std::vector<std::uint16_t> closed = ideal_closure(r, gens);
      if (known.insert(closed).second) work.push_back(std::move(closed));
    }
  }
  return {known.begin(), known.end()};
}

void mark_flags(const Ring& r, std::vector<Ideal>& ideals) {
  for (Ideal& ideal : ideals) {
    ideal.generator = find_generator(r, ideal.elements);
    ideal.principal = ideal.generator.has_value();
  }
  // Maximal = proper and not strictly contained in another proper ideal.
  for (Ideal& ideal : ideals) {
    if (ideal.elements.size() == r.size()) {
      ideal.maximal = false;
      continue;
    }
    bool maximal = true;
    for (const Ideal& other : ideals) {
      if (other.elements.size() == r.size() ||
          other.elements.size() <= ideal.elements.size())
        continue;
      if (std::includes(other.elements.begin(), other.elements.end(),
                        ideal.elements.begin(), ideal.elements.end())) {
        maximal = false;
        break;
      }
    }
    ideal.maximal = maximal;
  }
}

}  // namespace

namespace {

/// Proper, and extending by any outside element generates the whole ring.
bool set_is_maximal_ideal(const Ring& r,
                          const std::vector<std::uint16_t>& elements) {
  if (elements.size() == r.size()) return false;
  for (std::uint16_t x = 0; x < r.size(); ++x) {
    if (std::binary_search(elements.begin(), elements.end(), x)) continue;
    std::vector<std::uint16_t> gens = elements;
    gens.push_back(x);
    if (ideal_closure(r, gens).size() != r.size()) return false;
  }
  return true;
}

}  // namespace

Ideal principal_ideal(const Element& a) {
  const Ring& r = a.ring();
  Ideal ideal{r, principal_set(r, a.index()), true, a.index(), false};
  // Report the least-index generator for determinism.
  ideal.generator = find_generator(r, ideal.elements);
  ideal.maximal = set_is_maximal_ideal(r, ideal.elements);
  return ideal;
}

std::vector<Ideal> all_ideals(const Ring& r) {
  std::vector<std::vector<std::uint16_t>> sets = enumerate_ideal_sets(r);
  std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<Ideal> out;
  out.reserve(sets.size());
  for (auto& s : sets) out.push_back(Ideal{r, std::move(s), false, {}, false});
  mark_flags(r, out);
  return out;
}

std::vector<Ideal> maximal_ideals(const Ring& r) {
  std::vector<Ideal> out;
  for (Ideal& ideal : all_ideals(r))
    if (ideal.maximal) out.push_back(std::move(ideal));
  return out;
}

Ideal jacobson_radical(const Ring& r) {
  std::vector<Ideal> maxes = maximal_ideals(r);
  std::vector<std::uint16_t> acc;
  if (maxes.empty()) {
    for (std::uint16_t i = 0; i < r.size(); ++i) acc.push_back(i);
  } else {
    acc = maxes[0].elements;
    for (std::size_t k = 1; k < maxes.size(); ++k) {
      std::vector<std::uint16_t> next;
      std::set_intersection(acc.begin(), acc.end(), maxes[k].elements.begin(),
                            maxes[k].elements.end(), std::back_inserter(next));
      acc = std::move(next);
    }
  }
  Ideal ideal{r, std::move(acc), false, {}, false};
  ideal.generator = find_generator(r, ideal.elements);
  ideal.principal = ideal.generator.has_value();
  ideal.maximal = std::any_of(maxes.begin(), maxes.end(), [&](const Ideal& m) {
    return m.elements == ideal.elements;
  });
  return ideal;
}

bool is_local(const Ring& r) { return maximal_ideals(r).size() == 1; }

Element QuotientRing::project(const Element& x) const {
  if (!x.ring().same(base))
    throw std::invalid_argument("element does not belong to the quotient's base ring");
  return ring.element(projection[x.index()]);
}

QuotientRing quotient(const Ring& r, const Ideal& ideal) {
  if (!ideal.ring.same(r))
    throw std::invalid_argument("ideal belongs to a different ring");
  if (!is_ideal_set(r, ideal.elements))
    throw std::invalid_argument("the given set is not an ideal of the ring");

  const std::size_t n = r.size();
  // Coset of x = { x + i : i in ideal }, keyed by its least member index.
  std::vector<std::int32_t> coset_of(n, -1);
  std::vector<std::vector<std::uint16_t>> cosets;
  for (std::uint16_t x = 0; x < n; ++x) {
    if (coset_of[x] >= 0) continue;
    std::vector<std::uint16_t> members;
    for (std::uint16_t i : ideal.elements) members.push_back(r.add_index(x, i));
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    auto id = static_cast<std::int32_t>(cosets.size());
    for (std::uint16_t m : members) coset_of[m] = id;
    cosets.push_back(std::move(members));
  }
  if (cosets.size() * ideal.elements.size() != n)
    throw std::invalid_argument("coset partition is uneven; the set is not an ideal");

  const std::size_t q = cosets.size();
  RingTables t;
  t.size = q;
  t.add.resize(q * q);
  t.mul.resize(q * q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) {
      std::uint16_t x = cosets[i][0];
      std::uint16_t y = cosets[j][0];
      t.add[i * q + j] = static_cast<std::uint16_t>(coset_of[r.add_index(x, y)]);
      t.mul[i * q + j] = static_cast<std::uint16_t>(coset_of[r.mul_index(x, y)]);
    }
  // Well-definedness: representative choice must not matter.
  for (std::uint16_t x = 0; x < n; ++x)
    for (std::uint16_t y = 0; y < n; ++y) {
      auto cx = static_cast<std::size_t>(coset_of[x]);
      auto cy = static_cast<std::size_t>(coset_of[y]);
      if (t.add[cx * q + cy] !=
              static_cast<std::uint16_t>(coset_of[r.add_index(x, y)]) ||
          t.mul[cx * q + cy] !=
              static_cast<std::uint16_t>(coset_of[r.mul_index(x, y)]))
        throw std::invalid_argument(
            "coset operations are not well defined; the set is not an ideal");
    }
  t.zero = static_cast<std::uint16_t>(coset_of[r.zero_index()]);
  t.one = static_cast<std::uint16_t>(coset_of[r.one_index()]);
  for (const auto& coset : cosets) {
    std::string least = r.name(coset[0]);
    for (std::uint16_t m : coset) least = std::min(least, r.name(m));
    t.names.push_back(std::move(least));
  }
  Ideal ideal_copy = ideal;
  std::string ideal_tag = ideal_copy.principal && ideal_copy.generator
                              ? "<" + r.name(*ideal_copy.generator) + ">"
                              : ideal_copy.display();
  t.label = r.label() + "/" + ideal_tag;

  QuotientRing out{r, std::move(ideal_copy), Ring(std::move(t)), {}};
  out.projection.resize(n);
  for (std::uint16_t x = 0; x < n; ++x)
    out.projection[x] = static_cast<std::uint16_t>(coset_of[x]);
  return out;
}

bool is_homomorphism(const RingMap& m) {
  const Ring& r = m.source;
  const Ring& s = m.target;
  if (m.images.size() != r.size()) return false;
  for (std::uint16_t v : m.images)
    if (v >= s.size()) return false;
  if (m.images[r.one_index()] != s.one_index()) return false;
  for (std::uint16_t x = 0; x < r.size(); ++x)
    for (std::uint16_t y = 0; y < r.size(); ++y) {
      if (m.images[r.add_index(x, y)] !=
          s.add_index(m.images[x], m.images[y]))
        return false;
      if (m.images[r.mul_index(x, y)] !=
          s.mul_index(m.images[x], m.images[y]))
        return false;
    }
  return true;
}

bool is_isomorphism_map(const RingMap& m) {
  if (m.source.size() != m.target.size()) return false;
  if (!is_homomorphism(m)) return false;
  std::vector<bool> hit(m.target.size(), false);
  for (std::uint16_t v : m.images) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

namespace {

/// Additive order of x: least k >= 1 with k.x = 0.
unsigned additive_order(const Ring& r, std::uint16_t x) {
  std::uint16_t acc = x;
  unsigned k = 1;
  while (acc != r.zero_index()) {
    acc = r.add_index(acc, x);
    ++k;
  }
  return k;
}

struct Profile {
  unsigned add_order;
  ElementClass cls;
  bool idempotent;
  auto key() const { return std::tuple(add_order, static_cast<int>(cls), idempotent); }
};

std::vector<Profile> profiles(const Ring& r) {
  std::vector<Profile> out(r.size());
  for (std::uint16_t x = 0; x < r.size(); ++x)
    out[x] = Profile{additive_order(r, x), r.classify(x),
                     r.mul_index(x, x) == x};
  return out;
}

class IsoSearch {
 public:
  IsoSearch(const Ring& r, const Ring& s)
      : r_(r), s_(s), rp_(profiles(r)), sp_(profiles(s)) {}

  std::optional<std::vector<std::uint16_t>> run() {
    const std::size_t n = r_.size();
    img_.assign(n, kUnset);
    used_.assign(n, false);
    if (!assign(r_.zero_index(), s_.zero_index())) return std::nullopt;
    if (!assign(r_.one_index(), s_.one_index())) return std::nullopt;
    if (!propagate()) return std::nullopt;
    if (extend()) return img_;
    return std::nullopt;
  }

 private:
  static constexpr std::uint16_t kUnset = 0xffff;

  bool assign(std::uint16_t x, std::uint16_t y) {
    if (img_[x] != kUnset) return img_[x] == y;
    if (used_[y]) return false;
    if (rp_[x].key() != sp_[y].key()) return false;
    img_[x] = y;
    used_[y] = true;
    trail_.push_back(x);
    return true;
  }

  // Derives every image forced through + and * until a fixpoint;
  // false on any conflict with already-made assignments.
  bool propagate() {
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::uint16_t x = 0; x < r_.size(); ++x) {
        if (img_[x] == kUnset) continue;
        for (std::uint16_t z = 0; z < r_.size(); ++z) {
          if (img_[z] == kUnset) continue;
          std::uint16_t sum = r_.add_index(x, z);
          std::uint16_t sum_img = s_.add_index(img_[x], img_[z]);
          if (img_[sum] == kUnset) {
            if (!assign(sum, sum_img)) return false;
            grew = true;
          } else if (img_[sum] != sum_img) {
            return false;
          }
          std::uint16_t prod = r_.mul_index(x, z);
          std::uint16_t prod_img = s_.mul_index(img_[x], img_[z]);
          if (img_[prod] == kUnset) {
            if (!assign(prod, prod_img)) return false;
            grew = true;
          } else if (img_[prod] != prod_img) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool extend() {
    std::uint16_t x = kUnset;
    for (std::uint16_t i = 0; i < r_.size(); ++i)
      if (img_[i] == kUnset) {
        x = i;
        break;
      }
    if (x == kUnset) return true;
    for (std::uint16_t y = 0; y < s_.size(); ++y) {
      if (used_[y] || rp_[x].key() != sp_[y].key()) continue;
      std::size_t mark = trail_.size();
      if (assign(x, y) && propagate() && extend()) return true;
      while (trail_.size() > mark) {
        std::uint16_t undone = trail_.back();
        trail_.pop_back();
        used_[img_[undone]] = false;
        img_[undone] = kUnset;
      }
    }
    return false;
  }

  const Ring& r_;
  const Ring& s_;
  std::vector<Profile> rp_, sp_;
  std::vector<std::uint16_t> img_;
  std::vector<bool> used_;
  std::vector<std::uint16_t> trail_;
};

}  // namespace

std::optional<RingMap> find_isomorphism(const Ring& r, const Ring& s) {
  if (r.size() > kIsomorphismSizeCap || s.size() > kIsomorphismSizeCap)
    throw std::invalid_argument(
        "isomorphism search is capped at rings of size " +
        std::to_string(kIsomorphismSizeCap));
  if (r.size() != s.size()) return std::nullopt;
  // Profile multisets must match before any search.
  std::vector<std::tuple<unsigned, int, bool>> a, b;
  for (const Profile& p : profiles(r)) a.push_back(p.key());
  for (const Profile& p : profiles(s)) b.push_back(p.key());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) return std::nullopt;

  auto img = IsoSearch(r, s).run();
  if (!img) return std::nullopt;
  RingMap map{r, s, std::move(*img), true};
  if (!is_isomorphism_map(map))
    throw std::logic_error("isomorphism search produced an invalid map");
  return map;
}

std::vector<Subring> subrings(const Ring& r, bool require_inherited_unity) {
  if (r.size() > kSubringSizeCap)
    throw std::invalid_argument("subring enumeration is capped at rings of size " +
                                std::to_string(kSubringSizeCap));
  const std::size_t n = r.size();
  std::vector<Subring> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (!(mask & (1u << r.zero_index()))) continue;
    if (__builtin_popcount(mask) < 2) continue;  // {0} alone is not a ring here
    std::vector<std::uint16_t> members;
    for (std::uint16_t i = 0; i < n; ++i)
      if (mask & (1u << i)) members.push_back(i);
    bool closed = true;
    for (std::uint16_t x : members) {
      for (std::uint16_t y : members) {
        if (!(mask & (1u << r.add_index(x, y))) ||
            !(mask & (1u << r.mul_index(x, y)))) {
          closed = false;
          break;
        }
      }
      if (!closed) break;
    }
    if (!closed) continue;
    std::optional<std::uint16_t> unity;
    for (std::uint16_t u : members) {
      bool ok = true;
      for (std::uint16_t x : members)
        if (r.mul_index(u, x) != x) {
          ok = false;
          break;
        }
      if (ok) {
        unity = u;
        break;
      }
    }
    if (!unity) continue;
    if (require_inherited_unity && *unity != r.one_index()) continue;
    out.push_back(Subring{std::move(members), *unity, *unity == r.one_index()});
  }
  std::sort(out.begin(), out.end(), [](const Subring& a, const Subring& b) {
    if (a.elements.size() != b.elements.size())
      return a.elements.size() < b.elements.size();
    return a.elements < b.elements;
  });
  return out;
}

Ring subring_as_ring(const Ring& r, std::span<const std::uint16_t> elements) {
  std::vector<std::uint16_t> members(elements.begin(), elements.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  const std::size_t m = members.size();
  std::vector<std::int32_t> pos(r.size(), -1);
  for (std::size_t i = 0; i < m; ++i) {
    if (members[i] >= r.size())
      throw std::invalid_argument("subring member index out of range");
    pos[members[i]] = static_cast<std::int32_t>(i);
  }
  auto local = [&](std::uint16_t parent_idx) {
    std::int32_t p = pos[parent_idx];
    if (p < 0)
      throw std::invalid_argument("subset is not closed under the ring operations");
    return static_cast<std::uint16_t>(p);
  };
  RingTables t;
  t.size = m;
  t.add.resize(m * m);
  t.mul.resize(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      t.add[i * m + j] = local(r.add_index(members[i], members[j]));
      t.mul[i * m + j] = local(r.mul_index(members[i], members[j]));
    }
  t.zero = local(r.zero_index());
  std::optional<std::uint16_t> unity;
  for (std::size_t u = 0; u < m; ++u) {
    bool ok = true;
    for (std::size_t x = 0; x < m; ++x)
      if (t.mul[u * m + x] != x) {
        ok = false;
        break;
      }
    if (ok) {
      unity = static_cast<std::uint16_t>(u);
      break;
    }
  }
  if (!unity)
    throw std::invalid_argument("subset has no multiplicative identity");
  t.one = *unity;
  std::string label = "{";
  for (std::size_t i = 0; i < m; ++i) {
    if (i) label += ",";
    std::string nm = r.name(members[i]);
    t.names.push_back(nm);
    label += nm;
  }
  label += "}";
  t.label = std::move(label);
  return Ring(std::move(t), Ring::Validation::Exhaustive);
}

}  // namespace ringline
