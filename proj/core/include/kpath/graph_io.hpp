#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "kpath/directed.hpp"
#include "kpath/undirected.hpp"

namespace kpath {

struct ParseError : std::runtime_error {
  int line;

  ParseError(int line_, const std::string& what_)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

// Edge-list format: '#' starts a comment line, the first data line is
// "n m", then m lines "u v" with 1-indexed endpoints. Blank lines are
// skipped. Duplicate edges collapse; vertices come out 0-indexed.
Digraph parse_digraph(std::string_view text);
// Same format; rejects self-loops.
Ugraph parse_ugraph(std::string_view text);

}  // namespace kpath
