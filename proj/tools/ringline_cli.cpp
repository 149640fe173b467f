// Command-line front end: build rings and projective ring lines, inspect
// their ideal and shell structure, run the verification suites, and export
// graphs.
//
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ringline/builtins.hpp"
#include "ringline/report.hpp"
#include "ringline/ring_spec.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

struct Options {
  std::string ring_arg;
  std::string which = "inner";
  std::string suite = "all";
  std::string format = "text";
  std::string target = "distant-graph";
  std::string shell = "inner";
};

int run(const std::string& verb, const Options& opt) {
  ringline::Ring ring = ringline::resolve_ring_argument(opt.ring_arg);
  if (verb == "ring") {
    std::cout << ringline::ring_report(ring);
    return kExitOk;
  }
  if (verb == "ideals") {
    std::cout << ringline::ideals_report(ring);
    return kExitOk;
  }
  if (verb == "line") {
    std::cout << ringline::line_report(ring);
    return kExitOk;
  }
  if (verb == "tables") {
    auto which = ringline::table_choice_from_string(opt.which);
    if (!which)
      throw std::invalid_argument("unknown table choice '" + opt.which + "'");
    std::cout << ringline::tables_report(ring, *which);
    return kExitOk;
  }
  if (verb == "verify") {
    auto suite = ringline::suite_from_string(opt.suite);
    if (!suite)
      throw std::invalid_argument("unknown suite '" + opt.suite + "'");
    auto checks = ringline::run_suite(ring, *suite);
    std::cout << ringline::render_check_report(checks);
    for (const auto& c : checks)
      if (!c.passed) return kExitVerifyFailed;
    return kExitOk;
  }
  if (verb == "export") {
    auto format = ringline::export_format_from_string(opt.format);
    if (!format)
      throw std::invalid_argument("unknown format '" + opt.format + "'");
    auto target = ringline::graph_target_from_string(opt.target);
    if (!target)
      throw std::invalid_argument("unknown target '" + opt.target + "'");
    auto shell = ringline::shell_choice_from_string(opt.shell);
    if (!shell)
      throw std::invalid_argument("unknown shell '" + opt.shell + "'");
    std::cout << ringline::export_graph(ring, *target, *format, *shell);
    return kExitOk;
  }
  throw std::invalid_argument("unknown command '" + verb + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "ringline: finite commutative rings and the projective lines over "
      "them"};
  app.require_subcommand(1);

  Options opt;
  const char* ring_help =
      "built-in ring name (R_triangle, GF2, GF3, GF2xGF2, GF<p>) or "
      "file:<path> to a ring-spec file";

  CLI::App* ring = app.add_subcommand(
      "ring", "print elements, classes, characteristic, and tables");
  ring->add_option("spec", opt.ring_arg, ring_help)->required();

  CLI::App* ideals = app.add_subcommand(
      "ideals", "print all ideals, the radical, and the quotients");
  ideals->add_option("spec", opt.ring_arg, ring_help)->required();

  CLI::App* line = app.add_subcommand(
      "line", "print the projective line census and statistics");
  line->add_option("spec", opt.ring_arg, ring_help)->required();

  CLI::App* tables = app.add_subcommand(
      "tables", "print a shell relation table (GF(2)^3 only)");
  tables->add_option("spec", opt.ring_arg, ring_help)->required();
  tables->add_option("--which", opt.which,
                     "one of inner, outer, cross, nucleus");

  CLI::App* verify =
      app.add_subcommand("verify", "run a verification suite");
  verify->add_option("spec", opt.ring_arg, ring_help)->required();
  verify->add_option("--suite", opt.suite,
                     "one of axioms, ideals, line, tables, all");

  CLI::App* exp = app.add_subcommand("export", "export a line graph");
  exp->add_option("spec", opt.ring_arg, ring_help)->required();
  exp->add_option("--format", opt.format, "one of text, csv, dot");
  exp->add_option("--target", opt.target,
                  "one of distant-graph, neighbour-graph, shell-subgraph");
  exp->add_option("--shell", opt.shell,
                  "shell for shell-subgraph: inner or outer");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  std::string verb;
  for (CLI::App* sub : {ring, ideals, line, tables, verify, exp})
    if (sub->parsed()) verb = sub->get_name();

  try {
    return run(verb, opt);
  } catch (const ringline::TableValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.violations().size() > 8) {
      std::cerr << "all violations:\n";
      for (const std::string& v : e.violations()) std::cerr << "  " << v << "\n";
    }
    return kExitInputError;
  } catch (const ringline::SpecParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
