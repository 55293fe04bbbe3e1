#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "unc/graph.hpp"

namespace unc {

// Malformed input text. Carries the 1-based line number when known.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Edge-list text format:
//   n m
//   u v        (m lines, 0-based, u < v)
//   colors b w (optional; blacks are 0..b-1)
// Lines starting with '#' are comments.
Graph read_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
Graph load_edge_list(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);
std::string format_edge_list(const Graph& g);

}  // namespace unc
