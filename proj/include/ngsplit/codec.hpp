#pragma once

#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ngsplit/graph.hpp"

namespace ngsplit {

/// Malformed textual input. `line` is 1-based, 0 when not applicable.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// graph6: N(n) followed by the upper triangle x(0,1), x(0,2), x(1,2), ...
// in 6-bit groups, each byte = 63 + group. N(n) is one byte for n <= 62,
// '~' + 3 bytes for n <= 258047 and "~~" + 6 bytes beyond.
Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);

/// "n m" header then m lines "u v" (0-indexed).
Graph parse_edge_list(std::string_view text, std::vector<std::string>* warnings = nullptr);
/// Edges sorted (u < v, lexicographic), one newline-terminated line each.
std::string emit_edge_list(const Graph& g);

struct Graph6Record {
  int line = 0;  // 1-based source line
  std::string text;
};

/// Yields graph6 records in input order, skipping blank and '#' lines and
/// an optional ">>graph6<<" header.
class Graph6Reader {
 public:
  explicit Graph6Reader(std::istream& in) : in_(in) {}
  std::optional<Graph6Record> next();

 private:
  std::istream& in_;
  int line_ = 0;
};

}  // namespace ngsplit
