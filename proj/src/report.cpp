#include "ringline/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ringline/builtins.hpp"
#include "ringline/ideals.hpp"
#include "ringline/proj_line.hpp"

namespace ringline {

namespace {

std::string pad(const std::string& s, std::size_t width) {
  if (s.size() >= width) return s;
  return s + std::string(width - s.size(), ' ');
}

void append_row(std::ostringstream& os, std::string row) {
  while (!row.empty() && row.back() == ' ') row.pop_back();
  os << row << "\n";
}

std::string operation_table(const Ring& r, char symbol,
                            std::uint16_t (Ring::*op)(std::uint16_t,
                                                      std::uint16_t) const) {
  auto order = r.display_order();
  std::size_t width = 1;
  for (std::uint16_t i : order) width = std::max(width, r.name(i).size());
  std::ostringstream os;
  {
    std::string header = pad(std::string(1, symbol), width) + " |";
    for (std::uint16_t j : order) header += " " + pad(r.name(j), width);
    append_row(os, std::move(header));
  }
  os << std::string(width, '-') << "-+"
     << std::string((width + 1) * order.size(), '-') << "\n";
  for (std::uint16_t i : order) {
    std::string row = pad(r.name(i), width) + " |";
    for (std::uint16_t j : order) row += " " + pad(r.name((r.*op)(i, j)), width);
    append_row(os, std::move(row));
  }
  return os.str();
}

std::string element_list(const Ring& r, const std::vector<Element>& elems) {
  // Render in display order for stable, table-consistent output.
  std::vector<bool> member(r.size(), false);
  for (const Element& e : elems) member[e.index()] = true;
  std::string out;
  bool first = true;
  for (std::uint16_t i : r.display_order()) {
    if (!member[i]) continue;
    if (!first) out += " ";
    out += r.name(i);
    first = false;
  }
  return out.empty() ? "(none)" : out;
}

std::string histogram(const std::map<std::size_t, std::size_t>& h) {
  if (h.empty()) return "(none)";
  std::string out;
  bool first = true;
  for (const auto& [k, v] : h) {
    if (!first) out += " ";
    out += std::to_string(k) + ":" + std::to_string(v);
    first = false;
  }
  return out;
}

}  // namespace

std::string ring_report(const Ring& r) {
  std::ostringstream os;
  os << "ring: " << r.label() << "\n";
  os << "size: " << r.size() << "\n";
  os << "characteristic: " << r.characteristic() << "\n";
  os << "elements:";
  for (std::uint16_t i : r.display_order()) os << " " << r.name(i);
  os << "\n";
  if (r.is_product()) {
    os << "coordinates:";
    for (std::uint16_t i : r.display_order()) {
      os << " " << r.name(i) << "=[";
      auto coords = r.coordinate_indices(i);
      for (std::size_t k = 0; k < coords.size(); ++k) {
        if (k) os << ",";
        os << r.factors()[k].name(coords[k]);
      }
      os << "]";
    }
    os << "\n";
  }
  auto units = r.units();
  auto zd_all = r.zero_divisors(true);
  auto zd_proper = r.zero_divisors(false);
  os << "units (" << units.size() << "): " << element_list(r, units) << "\n";
  os << "zero-divisors including zero (" << zd_all.size()
     << "): " << element_list(r, zd_all) << "\n";
  os << "non-trivial zero-divisors (" << zd_proper.size()
     << "): " << element_list(r, zd_proper) << "\n";
  os << "\naddition table:\n" << operation_table(r, '+', &Ring::add_index);
  os << "\nmultiplication table:\n"
     << operation_table(r, '*', &Ring::mul_index);
  return os.str();
}

std::string ideals_report(const Ring& r) {
  std::ostringstream os;
  os << "ring: " << r.label() << "\n";
  std::vector<Ideal> ideals = all_ideals(r);
  os << "ideals: " << ideals.size() << "\n";
  for (const Ideal& ideal : ideals) {
    os << "ideal " << ideal.display() << ": size " << ideal.elements.size();
    if (ideal.principal)
      os << ", principal <" << r.name(*ideal.generator) << ">";
    else
      os << ", not principal";
    os << ", maximal " << (ideal.maximal ? "yes" : "no") << "\n";
  }
  Ideal radical = jacobson_radical(r);
  os << "jacobson radical: " << radical.display() << "\n";
  os << "quotients:\n";
  for (const Ideal& ideal : ideals) {
    if (ideal.elements.size() == r.size()) {
      os << "R/" << ideal.display()
         << ": skipped (quotient by the whole ring is trivial)\n";
      continue;
    }
    QuotientRing q = quotient(r, ideal);
    os << "R/" << ideal.display() << ": size " << q.ring.size();
    auto cls = builtin_isomorphism_class(q.ring);
    if (cls)
      os << ", isomorphic to " << *cls;
    else
      os << ", no built-in isomorphism class";
    os << "\n";
  }
  return os.str();
}

std::string line_report(const Ring& r) {
  std::ostringstream os;
  ProjectiveLine line(r);
  const std::size_t m = line.point_count();
  const bool labelled = is_gf2_cubed(r);
  os << "ring: " << r.label() << "\n";
  os << "points: " << m << "\n";
  os << "distant-pairs: " << line.distant_edge_count() << "\n";
  for (std::size_t i = 0; i < m; ++i) {
    os << "point " << line.point_name(i);
    if (labelled) os << " [" << label_point(line, i).str() << "]";
    os << ": neighbours " << line.neighbourhood(i).size() << ", distant "
       << line.distant_degree(i) << "\n";
  }
  std::map<std::size_t, std::size_t> pair_hist;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!line.distant(i, j)) continue;
      const std::size_t pts[2] = {i, j};
      pair_hist[line.common_neighbourhood(pts).size()]++;
    }
  os << "common-neighbours over distant pairs: " << histogram(pair_hist)
     << "\n";
  std::map<std::size_t, std::size_t> triple_hist;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!line.distant(i, j)) continue;
      for (std::size_t k = j + 1; k < m; ++k) {
        if (!line.distant(i, k) || !line.distant(j, k)) continue;
        const std::size_t pts[3] = {i, j, k};
        triple_hist[line.common_neighbourhood(pts).size()]++;
      }
    }
  os << "common-neighbours over pairwise-distant triples: "
     << histogram(triple_hist) << "\n";
  return os.str();
}

std::optional<TableChoice> table_choice_from_string(std::string_view s) {
  if (s == "inner") return TableChoice::Inner;
  if (s == "outer") return TableChoice::Outer;
  if (s == "cross") return TableChoice::Cross;
  if (s == "nucleus") return TableChoice::Nucleus;
  return std::nullopt;
}

std::string render_table(const ShellTable& t) {
  std::size_t width = 1;
  for (const std::string& l : t.row_labels) width = std::max(width, l.size());
  for (const std::string& l : t.col_labels) width = std::max(width, l.size());
  std::ostringstream os;
  {
    std::string header = pad("", width) + " |";
    for (const std::string& l : t.col_labels) header += " " + pad(l, width);
    append_row(os, std::move(header));
  }
  os << std::string(width, '-') << "-+"
     << std::string((width + 1) * t.col_labels.size(), '-') << "\n";
  for (std::size_t r = 0; r < t.row_labels.size(); ++r) {
    std::string row = pad(t.row_labels[r], width) + " |";
    for (char c : t.cells[r]) row += " " + pad(std::string(1, c), width);
    append_row(os, std::move(row));
  }
  return os.str();
}

std::string tables_report(const Ring& r, TableChoice which) {
  if (!is_gf2_cubed(r))
    throw std::invalid_argument(
        "shell tables apply only to GF(2)xGF(2)xGF(2); got ring '" +
        r.label() + "'");
  ProjectiveLine line(r);
  auto inner = inner_shell_labels();
  auto outer = outer_shell_labels();
  auto nucleus = nucleus_labels();
  std::ostringstream os;
  os << "cells: '+' = distant, '-' = neighbour\n\n";
  switch (which) {
    case TableChoice::Inner:
      os << "inner shell vs inner shell:\n"
         << render_table(shell_table(line, inner, inner));
      break;
    case TableChoice::Outer:
      os << "outer shell vs outer shell:\n"
         << render_table(shell_table(line, outer, outer));
      break;
    case TableChoice::Cross:
      os << "outer shell vs inner shell:\n"
         << render_table(shell_table(line, outer, inner));
      break;
    case TableChoice::Nucleus:
      os << "nucleus vs inner shell:\n"
         << render_table(shell_table(line, nucleus, inner));
      os << "\nnucleus vs outer shell:\n"
         << render_table(shell_table(line, nucleus, outer));
      break;
  }
  return os.str();
}

std::optional<ExportFormat> export_format_from_string(std::string_view s) {
  if (s == "text") return ExportFormat::Text;
  if (s == "csv") return ExportFormat::Csv;
  if (s == "dot") return ExportFormat::Dot;
  return std::nullopt;
}

std::optional<GraphTarget> graph_target_from_string(std::string_view s) {
  if (s == "distant-graph") return GraphTarget::DistantGraph;
  if (s == "neighbour-graph") return GraphTarget::NeighbourGraph;
  if (s == "shell-subgraph") return GraphTarget::ShellSubgraph;
  return std::nullopt;
}

std::optional<ShellChoice> shell_choice_from_string(std::string_view s) {
  if (s == "inner") return ShellChoice::Inner;
  if (s == "outer") return ShellChoice::Outer;
  return std::nullopt;
}

std::string export_graph(const Ring& r, GraphTarget target,
                         ExportFormat format, ShellChoice shell) {
  ProjectiveLine line(r);
  const bool labelled = is_gf2_cubed(r);

  std::vector<std::size_t> nodes;
  if (target == GraphTarget::ShellSubgraph) {
    if (!labelled)
      throw std::invalid_argument(
          "shell subgraphs apply only to GF(2)xGF(2)xGF(2); got ring '" +
          r.label() + "'");
    Layer want = shell == ShellChoice::Inner ? Layer::InnerShell
                                             : Layer::OuterShell;
    auto order = shell == ShellChoice::Inner ? inner_shell_labels()
                                             : outer_shell_labels();
    for (const std::string& l : order) {
      std::size_t p = point_by_label(line, l);
      if (label_point(line, p).layer != want)
        throw std::logic_error("shell label resolves outside its layer");
      nodes.push_back(p);
    }
  } else {
    for (std::size_t i = 0; i < line.point_count(); ++i) nodes.push_back(i);
  }

  auto node_name = [&](std::size_t p) {
    return labelled ? label_point(line, p).str() : line.point_name(p);
  };
  auto connected = [&](std::size_t p, std::size_t q) {
    if (target == GraphTarget::NeighbourGraph)
      return p != q && line.neighbour(p, q);
    return line.distant(p, q);
  };

  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j)
      if (connected(nodes[i], nodes[j])) edges.emplace_back(i, j);

  std::ostringstream os;
  switch (format) {
    case ExportFormat::Text: {
      os << "nodes: " << nodes.size() << "\n";
      os << "edges: " << edges.size() << "\n";
      std::size_t width = 1;
      for (std::size_t i = 0; i < nodes.size(); ++i)
        width = std::max(width, node_name(nodes[i]).size());
      {
        std::string header = pad("", width);
        for (std::size_t j = 0; j < nodes.size(); ++j)
          header += " " + pad(node_name(nodes[j]), width);
        append_row(os, std::move(header));
      }
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        std::string row = pad(node_name(nodes[i]), width);
        for (std::size_t j = 0; j < nodes.size(); ++j)
          row += " " +
                 pad(i != j && connected(nodes[i], nodes[j]) ? "1" : "0",
                     width);
        append_row(os, std::move(row));
      }
      break;
    }
    case ExportFormat::Csv: {
      os << "source,target\n";
      for (auto [i, j] : edges)
        os << node_name(nodes[i]) << "," << node_name(nodes[j]) << "\n";
      break;
    }
    case ExportFormat::Dot: {
      const char* graph_name =
          target == GraphTarget::NeighbourGraph ? "neighbour" : "distant";
      os << "graph " << graph_name << " {\n";
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        os << "  \"" << node_name(nodes[i]) << "\"";
        if (labelled) {
          Layer layer = label_point(line, nodes[i]).layer;
          const char* color = layer == Layer::Nucleus      ? "#f2c14e"
                              : layer == Layer::InnerShell ? "#9ecae1"
                                                           : "#a1d99b";
          os << " [layer=\"" << to_string(layer)
             << "\" style=\"filled\" fillcolor=\"" << color << "\"]";
        }
        os << ";\n";
      }
      for (auto [i, j] : edges)
        os << "  \"" << node_name(nodes[i]) << "\" -- \""
           << node_name(nodes[j]) << "\";\n";
      os << "}\n";
      break;
    }
  }
  return os.str();
}

std::string render_check_report(const std::vector<CheckResult>& checks) {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const CheckResult& c : checks) {
    os << (c.passed ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << "\n";
    if (c.passed) ++passed;
  }
  os << "passed " << passed << " of " << checks.size() << " checks\n";
  return os.str();
}

}  // namespace ringline
