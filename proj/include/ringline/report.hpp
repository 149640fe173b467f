#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ringline/classify.hpp"
#include "ringline/ring.hpp"
#include "ringline/verify.hpp"

namespace ringline {

/// All reports are deterministic: identical inputs give byte-identical text.

/// Element list, unit and zero-divisor sets (both conventions),
/// characteristic, and the full operation tables.
std::string ring_report(const Ring& r);

/// Every ideal with principal generator and maximality, the radical, and
/// each proper quotient with its isomorphism class among the built-ins.
std::string ideals_report(const Ring& r);

/// Point census, per-point neighbourhood sizes, and the distributions of
/// common-neighbourhood sizes over distant pairs and triples.
std::string line_report(const Ring& r);

enum class TableChoice { Inner, Outer, Cross, Nucleus };

std::optional<TableChoice> table_choice_from_string(std::string_view s);

/// The requested shell table(s) in the canonical label order.
/// Requires the GF(2)^3 ring.
std::string tables_report(const Ring& r, TableChoice which);

std::string render_table(const ShellTable& t);

enum class ExportFormat { Text, Csv, Dot };
enum class GraphTarget { DistantGraph, NeighbourGraph, ShellSubgraph };
enum class ShellChoice { Inner, Outer };

std::optional<ExportFormat> export_format_from_string(std::string_view s);
std::optional<GraphTarget> graph_target_from_string(std::string_view s);
std::optional<ShellChoice> shell_choice_from_string(std::string_view s);

/// Graph of the line: text adjacency matrix, csv edge list, or dot.
/// Shell subgraphs restrict to one shell's points (distant edges) and
/// require the GF(2)^3 ring.
std::string export_graph(const Ring& r, GraphTarget target,
                         ExportFormat format,
                         ShellChoice shell = ShellChoice::Inner);

/// One "[PASS]/[FAIL] name (detail)" line per check plus a summary line.
std::string render_check_report(const std::vector<CheckResult>& checks);

}  // namespace ringline
