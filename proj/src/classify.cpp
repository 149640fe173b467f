#include "ringline/classify.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ringline/reference_data.hpp"

namespace ringline {

bool is_gf2_cubed(const Ring& r) {
  if (!r.is_product()) return false;
  const auto& factors = r.factors();
  return factors.size() == 3 &&
         std::all_of(factors.begin(), factors.end(),
                     [](const Ring& f) { return f.size() == 2; });
}

namespace {

void require_gf2_cubed(const Ring& r, const char* what) {
  if (!is_gf2_cubed(r))
    throw std::invalid_argument(std::string(what) +
                                " is only defined over GF(2)xGF(2)xGF(2); "
                                "got ring '" +
                                r.label() + "'");
}

/// Fixed orders behind the shell indices: slim b,c,d -> 1,2,3 and
/// fat e,f,g -> 1,2,3 (by letter name).
int slim_index(const std::string& name) {
  if (name == "b") return 1;
  if (name == "c") return 2;
  if (name == "d") return 3;
  return 0;
}

int fat_index(const std::string& name) {
  if (name == "e") return 1;
  if (name == "f") return 2;
  if (name == "g") return 3;
  return 0;
}

}  // namespace

ZdWeight zero_divisor_weight(const Element& x) {
  require_gf2_cubed(x.ring(), "zero-divisor weight");
  if (x.cls() != ElementClass::ZeroDivisor)
    throw std::invalid_argument("element '" + x.name() +
                                "' is not a non-trivial zero-divisor");
  int nonzero = 0;
  for (const Element& c : product_coordinates(x))
    if (c.index() != c.ring().zero_index()) ++nonzero;
  if (nonzero == 1) return ZdWeight::Slim;
  if (nonzero == 2) return ZdWeight::Fat;
  throw std::logic_error("zero-divisor of GF(2)^3 with unexpected support");
}

std::string_view to_string(Layer layer) {
  switch (layer) {
    case Layer::Nucleus:
      return "nucleus";
    case Layer::InnerShell:
      return "inner";
    case Layer::OuterShell:
      return "outer";
  }
  return "?";
}

std::string PointLabel::str() const {
  if (layer == Layer::Nucleus) return std::string(1, series);
  std::string out(1, series);
  out += std::to_string(index);
  out += tag;
  return out;
}

PointLabel label_point(const ProjectiveLine& line, std::size_t point) {
  const Ring& r = line.ring();
  require_gf2_cubed(r, "point labelling");
  auto [ai, bi] = line.point_rep(point);
  const std::string& an = r.name(ai);
  const std::string& bn = r.name(bi);

  const bool a_trivial = an == "a" || an == "h";
  const bool b_trivial = bn == "a" || bn == "h";
  if (a_trivial && b_trivial) {
    if (bn == "a") return PointLabel{Layer::Nucleus, 'U', 0, '\0'};
    if (an == "a") return PointLabel{Layer::Nucleus, 'V', 0, '\0'};
    return PointLabel{Layer::Nucleus, 'W', 0, '\0'};
  }
  if (an == "h") {
    int idx = slim_index(bn);
    if (idx) return PointLabel{Layer::InnerShell, 'I', idx, 'S'};
    return PointLabel{Layer::InnerShell, 'I', fat_index(bn), 'F'};
  }
  if (bn == "h") {
    int idx = slim_index(an);
    if (idx) return PointLabel{Layer::InnerShell, 'J', idx, 'S'};
    return PointLabel{Layer::InnerShell, 'J', fat_index(an), 'F'};
  }
  // Outer shell: the sign is defined by the fixed coordinate listing.
  for (const auto& p : refdata::kPoints) {
    if (p.label[0] != 'S' && p.label[0] != 'F') continue;
    if (an == std::string(1, p.alpha) && bn == std::string(1, p.beta))
      return PointLabel{Layer::OuterShell, p.label[0], p.label[1] - '0',
                        static_cast<char>(p.label[2])};
  }
  throw std::logic_error("point (" + an + "," + bn +
                         ") missing from the outer-shell listing");
}

std::size_t point_by_label(const ProjectiveLine& line,
                           std::string_view label) {
  const Ring& r = line.ring();
  require_gf2_cubed(r, "label lookup");
  for (const auto& p : refdata::kPoints) {
    if (p.label != label) continue;
    auto idx = line.point_index(r.element(std::string_view(&p.alpha, 1)),
                                r.element(std::string_view(&p.beta, 1)));
    if (!idx) throw std::logic_error("labelled point is not on the line");
    return *idx;
  }
  throw std::invalid_argument("unknown point label '" + std::string(label) +
                              "'");
}

std::vector<std::string> inner_shell_labels() {
  return {refdata::kInnerOrder.begin(), refdata::kInnerOrder.end()};
}

std::vector<std::string> outer_shell_labels() {
  return {refdata::kOuterOrder.begin(), refdata::kOuterOrder.end()};
}

std::vector<std::string> nucleus_labels() {
  return {refdata::kNucleusOrder.begin(), refdata::kNucleusOrder.end()};
}

ShellTable shell_table(const ProjectiveLine& line,
                       std::span<const std::string> rows,
                       std::span<const std::string> cols) {
  ShellTable table;
  table.row_labels.assign(rows.begin(), rows.end());
  table.col_labels.assign(cols.begin(), cols.end());
  std::vector<std::size_t> row_pts, col_pts;
  for (const std::string& l : rows) row_pts.push_back(point_by_label(line, l));
  for (const std::string& l : cols) col_pts.push_back(point_by_label(line, l));
  for (std::size_t r = 0; r < row_pts.size(); ++r) {
    std::string cells;
    for (std::size_t c = 0; c < col_pts.size(); ++c)
      cells += line.distant(row_pts[r], col_pts[c]) ? '+' : '-';
    table.cells.push_back(std::move(cells));
  }
  return table;
}

std::vector<std::pair<std::string, int>> layer_census(
    const ProjectiveLine& line) {
  require_gf2_cubed(line.ring(), "layer census");
  std::map<std::string, int> counts;
  const char* keys[] = {"nucleus",      "inner",        "inner.I",
                        "inner.I.slim", "inner.I.fat",  "inner.J",
                        "inner.J.slim", "inner.J.fat",  "outer",
                        "outer.S",      "outer.S.plus", "outer.S.minus",
                        "outer.F",      "outer.F.plus", "outer.F.minus"};
  for (const char* k : keys) counts[k] = 0;
  for (std::size_t i = 0; i < line.point_count(); ++i) {
    PointLabel l = label_point(line, i);
    switch (l.layer) {
      case Layer::Nucleus:
        counts["nucleus"]++;
        break;
      case Layer::InnerShell: {
        counts["inner"]++;
        std::string series = std::string("inner.") + l.series;
        counts[series]++;
        counts[series + (l.tag == 'S' ? ".slim" : ".fat")]++;
        break;
      }
      case Layer::OuterShell: {
        counts["outer"]++;
        std::string series = std::string("outer.") + l.series;
        counts[series]++;
        counts[series + (l.tag == '+' ? ".plus" : ".minus")]++;
        break;
      }
    }
  }
  std::vector<std::pair<std::string, int>> out;
  for (const char* k : keys) out.emplace_back(k, counts[k]);
  return out;
}

}  // namespace ringline
