#pragma once

#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "unc/edge_list_io.hpp"

namespace unc::detail {

// Line-oriented tokenizer shared by the text formats. Blank lines and lines
// starting with '#' are skipped.
class TextReader {
 public:
  explicit TextReader(std::istream& in) : in_(in) {}

  // Next non-empty line split on whitespace, or nullopt at end of input.
  std::optional<std::vector<std::string>> next() {
    if (pending_) return std::exchange(pending_, std::nullopt);
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      auto hash = line.find_first_not_of(" \t\r");
      if (hash == std::string::npos || line[hash] == '#') continue;
      std::istringstream ss(line);
      std::vector<std::string> tokens;
      for (std::string t; ss >> t;) tokens.push_back(t);
      return tokens;
    }
    return std::nullopt;
  }

  std::vector<std::string> expect(const char* what) {
    auto t = next();
    if (!t) throw FormatError(std::string("unexpected end of input, expected ") + what, line_no_);
    return *t;
  }

  void push_back(std::vector<std::string> tokens) { pending_ = std::move(tokens); }
  int line() const { return line_no_; }

  [[noreturn]] void fail(const std::string& what) const { throw FormatError(what, line_no_); }

  long long to_int(const std::string& token) const {
    try {
      std::size_t used = 0;
      long long v = std::stoll(token, &used);
      if (used != token.size()) fail("not an integer: '" + token + "'");
      return v;
    } catch (const std::logic_error&) {
      fail("not an integer: '" + token + "'");
    }
  }

 private:
  std::istream& in_;
  int line_no_ = 0;
  std::optional<std::vector<std::string>> pending_;
};

// Reads an edge-list block; stops (without consuming) at a line whose first
// token is not numeric and not "colors".
Graph read_edge_list_block(TextReader& reader);

}  // namespace unc::detail
