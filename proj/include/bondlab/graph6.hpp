#pragma once

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bondlab/graph.hpp"

namespace bondlab {

/// Malformed graph6 text. `offset` is the byte position of the problem.
class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(std::size_t offset, const std::string& what)
      : std::runtime_error("graph6 byte " + std::to_string(offset) + ": " + what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Decodes one graph6 line. A leading ">>graph6<<" header and a trailing
/// newline are tolerated. Padding bits must be zero.
Graph parse_graph6(std::string_view text);

/// Canonical graph6 for g (no header, no newline). Orders above 62 use the
/// four-byte size prefix.
std::string emit_graph6(const Graph& g);

/// One entry per input line of a newline-delimited graph6 stream; blank
/// lines are skipped, malformed lines are kept with their error.
struct Graph6Line {
  std::size_t line_number = 0;
  std::string text;
  std::variant<Graph, std::string> parsed;  // graph, or the parse error message
};
std::vector<Graph6Line> read_graph6_stream(std::istream& in);

}  // namespace bondlab
