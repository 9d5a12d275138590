#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "kegraph/graph.hpp"

namespace kegraph {

/// Malformed input. Carries the 0-based byte offset (graph6) or the
/// 1-based line number (edge lists) of the offending token.
class ParseError : public std::runtime_error {
 public:
  enum class Where { ByteOffset, Line };

  ParseError(const std::string& what, Where where, std::size_t position);

  Where where() const { return where_; }
  std::size_t position() const { return position_; }

 private:
  Where where_;
  std::size_t position_;
};

/// Decodes one graph6 line. Short (n <= 62) and long (n <= 258047) headers
/// are accepted, as is an optional ">>graph6<<" prefix and a trailing
/// newline.
Graph parse_graph6(std::string_view text);

/// Encodes g in graph6. Uses the short header when n <= 62.
std::string encode_graph6(const Graph& g);

struct EdgeListParse {
  Graph graph;
  std::size_t duplicate_edges = 0;
  bool dimacs = false;
};

/// Parses either a plain edge list ("n m" header, 0-indexed "u v" lines) or a
/// DIMACS edge file ("p edge n m" header, 1-indexed "e u v" lines, "c"
/// comments). The format is chosen by sniffing the first non-blank line.
EdgeListParse parse_edge_list_detailed(std::string_view text);
Graph parse_edge_list(std::string_view text);

/// Plain 0-indexed edge list in the format accepted by parse_edge_list.
std::string encode_edge_list(const Graph& g);

}  // namespace kegraph
