#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "cfc/types.hpp"

namespace cfc {

/// Malformed input text; `line()` is 1-based.
class ParseError : public InvalidInput {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InvalidInput("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Text formats:
//   hypergraph  `p cf <n> <m>` then m lines of vertex ids
//   graph       `p gr <n> <m>` then m lines `u v`
//   lists       `p la <n>` then n lines of color ids
//   coloring    n lines, a color id or `-`
// Blank lines and lines starting with `c` are skipped by the readers.

Hypergraph read_hypergraph(std::istream& in);
Graph read_graph(std::istream& in);
ListAssignment read_lists(std::istream& in);
/// `n` is the expected vertex count (0 = take whatever is there).
PartialColoring read_coloring(std::istream& in, std::size_t n = 0);

void write_hypergraph(std::ostream& out, const Hypergraph& h);
void write_graph(std::ostream& out, const Graph& g);
void write_lists(std::ostream& out, const ListAssignment& lists);
void write_coloring(std::ostream& out, const PartialColoring& c);

std::string to_text(const Hypergraph& h);
std::string to_text(const Graph& g);
std::string to_text(const ListAssignment& lists);
std::string to_text(const PartialColoring& c);

}  // namespace cfc
