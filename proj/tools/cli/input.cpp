#include "input.hpp"

#include <iostream>
#include <sstream>

#include "kegraph/graph_io.hpp"

namespace kegraph::cli {

namespace {

bool blank(const std::string& s) { return s.find_first_not_of(" \t\r") == std::string::npos; }

bool looks_like_header(const std::string& s) {
  std::istringstream words(s);
  long long n = 0;
  long long m = 0;
  std::string extra;
  return static_cast<bool>(words >> n >> m) && !(words >> extra);
}

}  // namespace

GraphReader::GraphReader(const std::string& path) {
  if (path == "-") {
    in_ = &std::cin;
  } else {
    file_ = std::make_unique<std::ifstream>(path);
    if (!*file_) throw std::runtime_error("cannot open '" + path + "'");
    in_ = file_.get();
  }
}

void GraphReader::sniff() {
  sniffed_ = true;
  std::string line;
  while (std::getline(*in_, line)) {
    ++line_;
    if (blank(line)) continue;
    pending_ = line;
    pending_line_ = line_;
    if (line.rfind("p ", 0) == 0 || line == "c" || line.rfind("c ", 0) == 0) {
      format_ = InputFormat::Dimacs;
    } else if (looks_like_header(line)) {
      format_ = InputFormat::EdgeList;
    } else {
      format_ = InputFormat::Graph6;
    }
    return;
  }
  done_ = true;
}

std::optional<InputGraph> GraphReader::next() {
  if (!sniffed_) sniff();
  if (done_) return std::nullopt;

  if (format_ != InputFormat::Graph6) {
    // Whole-file formats: rebuild the text with its original line numbering.
    std::string text(pending_line_ - 1, '\n');
    text += *pending_ + '\n';
    std::string line;
    while (std::getline(*in_, line)) text += line + '\n';
    done_ = true;
    InputGraph out{index_++, pending_line_, parse_edge_list(text)};
    return out;
  }

  std::string line;
  std::size_t at = 0;
  if (pending_) {
    line = std::move(*pending_);
    at = pending_line_;
    pending_.reset();
  } else {
    for (;;) {
      if (!std::getline(*in_, line)) {
        done_ = true;
        return std::nullopt;
      }
      ++line_;
      if (!blank(line)) break;
    }
    at = line_;
  }
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
  try {
    return InputGraph{index_++, at, parse_graph6(line)};
  } catch (const ParseError& e) {
    throw ParseError(std::string("graph6: ") + e.what(), ParseError::Where::Line, at);
  }
}

const char* to_string(InputFormat format) {
  switch (format) {
    case InputFormat::Graph6: return "graph6";
    case InputFormat::EdgeList: return "edge list";
    case InputFormat::Dimacs: return "DIMACS";
  }
  return "?";
}

}  // namespace kegraph::cli
