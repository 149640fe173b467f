#include "ringline/ring_spec.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace ringline {

namespace {

/// Explicit-table specs stay within the exhaustive-validation budget.
constexpr std::size_t kMaxExplicitSpecSize = 256;

struct Token {
  std::string text;
  int line;
  int column;
};

// Lines of whitespace-separated tokens; '#' cuts a line short.
std::vector<std::vector<Token>> tokenize(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  std::vector<Token> current;
  int line = 1;
  int column = 1;
  std::size_t i = 0;
  auto flush_line = [&] {
    if (!current.empty()) lines.push_back(std::move(current));
    current.clear();
  };
  while (i < text.size()) {
    char ch = text[i];
    if (ch == '\n') {
      flush_line();
      ++line;
      column = 1;
      ++i;
      continue;
    }
    if (ch == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      ++column;
      continue;
    }
    Token tok;
    tok.line = line;
    tok.column = column;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
           text[i] != '#') {
      tok.text += text[i];
      ++i;
      ++column;
    }
    current.push_back(std::move(tok));
  }
  flush_line();
  return lines;
}

std::optional<unsigned> parse_gf_name(const std::string& name) {
  if (name.size() < 3 || name.compare(0, 2, "GF") != 0) return std::nullopt;
  unsigned value = 0;
  for (std::size_t i = 2; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
    value = value * 10 + static_cast<unsigned>(name[i] - '0');
    if (value > 100000) return std::nullopt;
  }
  return value;
}

Ring parse_product(const std::vector<Token>& tokens) {
  std::vector<Ring> factors;
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    auto p = parse_gf_name(tokens[i].text);
    if (!p)
      throw SpecParseError("unknown factor '" + tokens[i].text +
                               "' (expected GF<p> with p prime)",
                           tokens[i].line, tokens[i].column);
    try {
      factors.push_back(make_gf(*p));
    } catch (const std::invalid_argument& e) {
      throw SpecParseError(e.what(), tokens[i].line, tokens[i].column);
    }
  }
  if (factors.empty())
    throw SpecParseError("product needs at least one factor", tokens[0].line,
                         tokens[0].column);
  return direct_product(std::move(factors));
}

class ExplicitParser {
 public:
  explicit ExplicitParser(std::vector<std::vector<Token>> lines)
      : lines_(std::move(lines)) {}

  Ring parse() {
    while (pos_ < lines_.size()) {
      const Token& head = lines_[pos_][0];
      if (head.text == "elements:") {
        read_elements();
      } else if (head.text == "add:") {
        add_rows_ = read_table(head);
      } else if (head.text == "mul:") {
        mul_rows_ = read_table(head);
      } else if (head.text == "zero:") {
        zero_ = read_single(head);
      } else if (head.text == "one:") {
        one_ = read_single(head);
      } else {
        throw SpecParseError("unexpected directive '" + head.text + "'",
                             head.line, head.column);
      }
    }
    return build();
  }

 private:
  void read_elements() {
    const auto& line = lines_[pos_];
    if (!names_.empty())
      throw SpecParseError("duplicate 'elements:' block", line[0].line,
                           line[0].column);
    for (std::size_t i = 1; i < line.size(); ++i) {
      if (index_.count(line[i].text))
        throw SpecParseError("duplicate element name '" + line[i].text + "'",
                             line[i].line, line[i].column);
      index_[line[i].text] = static_cast<std::uint16_t>(names_.size());
      names_.push_back(line[i].text);
    }
    if (names_.empty())
      throw SpecParseError("'elements:' lists no elements", line[0].line,
                           line[0].column);
    if (names_.size() > kMaxExplicitSpecSize)
      throw SpecParseError("explicit-table specs are capped at " +
                               std::to_string(kMaxExplicitSpecSize) +
                               " elements",
                           line[0].line, line[0].column);
    ++pos_;
  }

  std::vector<std::uint16_t> read_table(const Token& head) {
    if (names_.empty())
      throw SpecParseError("'" + head.text +
                               "' must come after the 'elements:' line",
                           head.line, head.column);
    if (lines_[pos_].size() > 1) {
      const Token& extra = lines_[pos_][1];
      throw SpecParseError("table rows start on the next line", extra.line,
                           extra.column);
    }
    ++pos_;
    const std::size_t n = names_.size();
    std::vector<std::uint16_t> table;
    table.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
      if (pos_ >= lines_.size())
        throw SpecParseError("table '" + head.text + "' is missing row " +
                                 std::to_string(r + 1) + " of " +
                                 std::to_string(n),
                             head.line, head.column);
      const auto& row = lines_[pos_];
      if (row.size() != n)
        throw SpecParseError("table row has " + std::to_string(row.size()) +
                                 " entries, expected " + std::to_string(n),
                             row[0].line, row[0].column);
      for (const Token& cell : row) table.push_back(lookup(cell));
      ++pos_;
    }
    return table;
  }

  std::uint16_t read_single(const Token& head) {
    const auto& line = lines_[pos_];
    if (line.size() != 2)
      throw SpecParseError("'" + head.text + "' expects exactly one element name",
                           head.line, head.column);
    std::uint16_t v = lookup(line[1]);
    ++pos_;
    return v;
  }

  std::uint16_t lookup(const Token& tok) {
    auto it = index_.find(tok.text);
    if (it == index_.end())
      throw SpecParseError("unknown element name '" + tok.text + "'", tok.line,
                           tok.column);
    return it->second;
  }

  Ring build() {
    if (names_.empty()) throw SpecParseError("spec defines no elements", 1, 1);
    if (add_rows_.empty()) throw SpecParseError("spec is missing the 'add:' table", 1, 1);
    if (mul_rows_.empty()) throw SpecParseError("spec is missing the 'mul:' table", 1, 1);
    if (!zero_) throw SpecParseError("spec is missing the 'zero:' line", 1, 1);
    if (!one_) throw SpecParseError("spec is missing the 'one:' line", 1, 1);
    RingTables t;
    t.size = names_.size();
    t.add = std::move(add_rows_);
    t.mul = std::move(mul_rows_);
    t.zero = *zero_;
    t.one = *one_;
    t.names = names_;
    std::string label = "{";
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (i) label += ",";
      label += names_[i];
    }
    label += "}";
    t.label = std::move(label);
    return Ring(std::move(t), Ring::Validation::Exhaustive);
  }

  std::vector<std::vector<Token>> lines_;
  std::size_t pos_ = 0;
  std::vector<std::string> names_;
  std::map<std::string, std::uint16_t> index_;
  std::vector<std::uint16_t> add_rows_;
  std::vector<std::uint16_t> mul_rows_;
  std::optional<std::uint16_t> zero_;
  std::optional<std::uint16_t> one_;
};

}  // namespace

SpecParseError::SpecParseError(const std::string& message, int line, int column)
    : std::runtime_error("ring spec error at line " + std::to_string(line) +
                         ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

Ring ring_from_spec(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw SpecParseError("empty ring spec", 1, 1);
  if (lines[0][0].text == "product") {
    if (lines.size() > 1)
      throw SpecParseError("unexpected content after the product line",
                           lines[1][0].line, lines[1][0].column);
    return parse_product(lines[0]);
  }
  return ExplicitParser(std::move(lines)).parse();
}

}  // namespace ringline
