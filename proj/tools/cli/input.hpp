#pragma once

#include <cstddef>
#include <fstream>
#include <istream>
#include <memory>
#include <optional>
#include <string>

#include "kegraph/graph.hpp"

namespace kegraph::cli {

enum class InputFormat { Graph6, EdgeList, Dimacs };

struct InputGraph {
  std::size_t index = 0;  // 0-based position in the stream
  std::size_t line = 0;   // 1-based line the graph starts on
  Graph graph;
};

/// Reads graphs from a file or "-" (stdin). The format is sniffed from the
/// first non-blank line: a "p edge" or "c ..." line starts a DIMACS file, two
/// integers an edge list, anything else is graph6 with one graph per line.
/// graph6 input is streamed; the edge-list formats hold a single graph.
///
/// Malformed input throws ParseError carrying the 1-based line number in the
/// file.
class GraphReader {
 public:
  explicit GraphReader(const std::string& path);

  std::optional<InputGraph> next();
  std::optional<InputFormat> format() const { return format_; }

 private:
  void sniff();

  std::unique_ptr<std::ifstream> file_;
  std::istream* in_ = nullptr;
  std::optional<InputFormat> format_;
  std::optional<std::string> pending_;  // first line, consumed by sniff
  std::size_t pending_line_ = 0;
  std::size_t line_ = 0;
  std::size_t index_ = 0;
  bool sniffed_ = false;
  bool done_ = false;
};

const char* to_string(InputFormat format);

}  // namespace kegraph::cli
