#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ringline/proj_line.hpp"
#include "ringline/ring.hpp"

namespace ringline {

/// True iff the ring was built as a direct product of exactly three
/// two-element fields — the only ring this taxonomy applies to.
bool is_gf2_cubed(const Ring& r);

/// Non-trivial zero-divisors of GF(2)^3 split by coordinate support.
enum class ZdWeight { Slim, Fat };

/// Slim = exactly one nonzero coordinate, fat = exactly two. Rejects
/// elements outside the non-trivial zero-divisor set and rings other
/// than GF(2)^3.
ZdWeight zero_divisor_weight(const Element& x);

enum class Layer { Nucleus, InnerShell, OuterShell };

std::string_view to_string(Layer layer);

/// Taxonomy label of a point on the line over GF(2)^3.
///   nucleus:      U, V, W
///   inner shell:  I/J series, index 1..3, tag 'S' (slim) or 'F' (fat)
///   outer shell:  S/F series, index 1..3, tag '+' or '-'
struct PointLabel {
  Layer layer;
  char series;  ///< 'U','V','W' | 'I','J' | 'S','F'
  int index;    ///< 1..3 for shells, 0 for the nucleus
  char tag;     ///< 'S'/'F' inner, '+'/'-' outer, '\0' nucleus

  std::string str() const;
  friend bool operator==(const PointLabel&, const PointLabel&) = default;
};

/// Label of a line point; total and injective on the 27 points.
/// Throws if the line is not over GF(2)^3.
PointLabel label_point(const ProjectiveLine& line, std::size_t point);

/// Point index for an ASCII label like "U", "I1S", "S2+", "F1-".
std::size_t point_by_label(const ProjectiveLine& line, std::string_view label);

/// Canonical row/column orders: the twelve inner labels I1S..J3F, the
/// twelve outer labels F1+..S3-, the nucleus U, V, W.
std::vector<std::string> inner_shell_labels();
std::vector<std::string> outer_shell_labels();
std::vector<std::string> nucleus_labels();

/// A rendered relation table: cells[r][c] is '+' (distant) or '-'
/// (neighbour) for the labelled row/column points.
struct ShellTable {
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<std::string> cells;  ///< one string of +/- per row
};

ShellTable shell_table(const ProjectiveLine& line,
                       std::span<const std::string> rows,
                       std::span<const std::string> cols);

/// Point counts per layer and sub-split, in a fixed key order:
/// nucleus, inner, inner.I, inner.I.slim, ... outer.F.minus.
std::vector<std::pair<std::string, int>> layer_census(
    const ProjectiveLine& line);

}  // namespace ringline
