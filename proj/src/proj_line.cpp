#include "ringline/proj_line.hpp"

#include <algorithm>
#include <stdexcept>

#include "ringline/ideals.hpp"

namespace ringline {

namespace {

void require_same_ring(const Element& x, const Element& y) {
  if (!x.ring().same(y.ring()))
    throw std::invalid_argument("matrix entries come from different rings");
}

}  // namespace

Element det2(const Mat2& m) {
  require_same_ring(m.a, m.b);
  require_same_ring(m.a, m.c);
  require_same_ring(m.a, m.d);
  return m.a * m.d - m.b * m.c;
}

bool is_invertible_2x2(const Mat2& m) {
  return det2(m).cls() == ElementClass::Unit;
}

bool is_admissible(const Element& alpha, const Element& beta) {
  require_same_ring(alpha, beta);
  const Ring& r = alpha.ring();
  const std::uint16_t gens[2] = {alpha.index(), beta.index()};
  return ideal_closure(r, gens).size() == r.size();
}

ProjectiveLine::ProjectiveLine(Ring ring) : ring_(std::move(ring)) {
  const std::size_t n = ring_.size();
  if (n > kLineRingSizeCap)
    throw std::invalid_argument(
        "projective line construction is capped at rings of size " +
        std::to_string(kLineRingSizeCap));

  std::vector<std::uint16_t> unit_idx;
  for (std::uint16_t u = 0; u < n; ++u)
    if (ring_.classify(u) == ElementClass::Unit) unit_idx.push_back(u);

  class_of_pair_.assign(n * n, -1);
  // Lexicographic sweep: the first unclassified admissible pair is the
  // canonical (least) representative of its unit-scaling orbit.
  for (std::uint16_t a = 0; a < n; ++a)
    for (std::uint16_t b = 0; b < n; ++b) {
      if (class_of_pair_[a * n + b] >= 0) continue;
      if (!is_admissible(ring_.element(a), ring_.element(b))) continue;
      auto id = static_cast<std::int32_t>(points_.size());
      points_.emplace_back(a, b);
      for (std::uint16_t u : unit_idx) {
        std::uint16_t ua = ring_.mul_index(u, a);
        std::uint16_t ub = ring_.mul_index(u, b);
        class_of_pair_[ua * n + ub] = id;
      }
    }

  const std::size_t m = points_.size();
  distant_.assign(m * m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      auto [a, b] = points_[i];
      auto [c, d] = points_[j];
      std::uint16_t det = ring_.sub_index(ring_.mul_index(a, d),
                                          ring_.mul_index(b, c));
      std::uint8_t dist = ring_.classify(det) == ElementClass::Unit ? 1 : 0;
      distant_[i * m + j] = dist;
      distant_[j * m + i] = dist;
    }
}

std::pair<std::uint16_t, std::uint16_t> ProjectiveLine::point_rep(
    std::size_t i) const {
  return points_.at(i);
}

std::pair<Element, Element> ProjectiveLine::point(std::size_t i) const {
  auto [a, b] = points_.at(i);
  return {ring_.element(a), ring_.element(b)};
}

std::string ProjectiveLine::point_name(std::size_t i) const {
  auto [a, b] = points_.at(i);
  return "(" + ring_.name(a) + "," + ring_.name(b) + ")";
}

std::optional<std::size_t> ProjectiveLine::point_index(
    const Element& alpha, const Element& beta) const {
  if (!alpha.ring().same(ring_) || !beta.ring().same(ring_))
    throw std::invalid_argument("pair does not live over the line's ring");
  std::int32_t id = class_of_pair_[alpha.index() * ring_.size() + beta.index()];
  if (id < 0) return std::nullopt;
  return static_cast<std::size_t>(id);
}

bool ProjectiveLine::distant(std::size_t i, std::size_t j) const {
  if (i >= points_.size() || j >= points_.size())
    throw std::invalid_argument("point index out of range");
  return distant_[i * points_.size() + j] != 0;
}

bool ProjectiveLine::neighbour(std::size_t i, std::size_t j) const {
  return !distant(i, j);
}

std::size_t ProjectiveLine::distant_degree(std::size_t i) const {
  if (i >= points_.size())
    throw std::invalid_argument("point index out of range");
  std::size_t deg = 0;
  for (std::size_t j = 0; j < points_.size(); ++j)
    deg += distant_[i * points_.size() + j];
  return deg;
}

std::size_t ProjectiveLine::distant_edge_count() const {
  std::size_t total = 0;
  for (std::size_t i = 0; i < points_.size(); ++i) total += distant_degree(i);
  return total / 2;
}

std::vector<std::size_t> ProjectiveLine::neighbourhood(std::size_t i) const {
  if (i >= points_.size())
    throw std::invalid_argument("point index out of range");
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < points_.size(); ++j)
    if (j != i && !distant_[i * points_.size() + j]) out.push_back(j);
  return out;
}

std::vector<std::size_t> ProjectiveLine::common_neighbourhood(
    std::span<const std::size_t> points) const {
  if (points.empty())
    throw std::invalid_argument("common neighbourhood of no points");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] >= points_.size())
      throw std::invalid_argument("point index out of range");
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j])
        throw std::invalid_argument("points must be pairwise distinct");
  }
  std::vector<std::size_t> out = neighbourhood(points[0]);
  for (std::size_t k = 1; k < points.size(); ++k) {
    std::vector<std::size_t> other = neighbourhood(points[k]);
    std::vector<std::size_t> merged;
    std::set_intersection(out.begin(), out.end(), other.begin(), other.end(),
                          std::back_inserter(merged));
    out = std::move(merged);
  }
  return out;
}

std::optional<std::array<std::size_t, 3>>
ProjectiveLine::transitivity_counterexample() const {
  const std::size_t m = points_.size();
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      if (y == x || distant_[x * m + y]) continue;
      for (std::size_t z = 0; z < m; ++z) {
        if (z == x || z == y) continue;
        if (!distant_[y * m + z] && distant_[x * m + z])
          return std::array<std::size_t, 3>{x, y, z};
      }
    }
  return std::nullopt;
}

}  // namespace ringline
