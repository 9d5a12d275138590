#include "kegraph/graph_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace kegraph {

ParseError::ParseError(const std::string& what, Where where, std::size_t position)
    : std::runtime_error(what + (where == Where::ByteOffset ? " at byte " : " at line ") +
                         std::to_string(position)),
      where_(where),
      position_(position) {}

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr std::size_t kMaxLongN = 258047;

ParseError byte_error(const std::string& what, std::size_t offset) {
  return ParseError(what, ParseError::Where::ByteOffset, offset);
}

int graph6_value(std::string_view text, std::size_t offset) {
  if (offset >= text.size()) throw byte_error("truncated graph6 data", offset);
  const auto c = static_cast<unsigned char>(text[offset]);
  if (c < 63 || c > 126) throw byte_error("invalid graph6 byte", offset);
  return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.substr(0, kGraph6Header.size()) == kGraph6Header) pos = kGraph6Header.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (pos >= text.size()) throw byte_error("missing graph6 header byte", pos);

  std::size_t n = 0;
  if (text[pos] == '~') {
    if (pos + 1 < text.size() && text[pos + 1] == '~') {
      throw byte_error("graph6 orders above 258047 are not supported", pos);
    }
    for (int i = 1; i <= 3; ++i) {
      n = (n << 6) | static_cast<std::size_t>(graph6_value(text, pos + static_cast<std::size_t>(i)));
    }
    if (n < 63) throw byte_error("long graph6 header used for order below 63", pos);
    pos += 4;
  } else {
    n = static_cast<std::size_t>(graph6_value(text, pos));
    pos += 1;
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() < pos + bytes) throw byte_error("truncated graph6 bit vector", text.size());
  if (text.size() > pos + bytes) throw byte_error("trailing garbage after graph6 data", pos + bytes);

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const int value = graph6_value(text, pos + k / 6);
      if ((value >> (5 - k % 6)) & 1) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  if (bits % 6 != 0) {
    const int last = graph6_value(text, pos + bytes - 1);
    const int pad_mask = (1 << (6 - bits % 6)) - 1;
    if ((last & pad_mask) != 0) throw byte_error("nonzero graph6 padding bits", pos + bytes - 1);
  }
  return Graph(n, edges);
}

std::string encode_graph6(const Graph& g) {
  const std::size_t n = g.n();
  if (n > kMaxLongN) throw DomainError("graph too large for graph6 encoding");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
  }
  int acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

// ---------------------------------------------------------------- edge lists

namespace {

ParseError line_error(const std::string& what, std::size_t line) {
  return ParseError(what, ParseError::Where::Line, line);
}

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long parse_int(std::string_view token, std::size_t line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw line_error("non-integer token '" + std::string(token) + "'", line);
  }
  return value;
}

}  // namespace

EdgeListParse parse_edge_list_detailed(std::string_view text) {
  std::vector<std::pair<std::size_t, std::vector<std::string_view>>> lines;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    const std::string_view raw =
        text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    ++line_no;
    auto tokens = tokenize(raw);
    if (!tokens.empty() && tokens[0] != "c" && tokens[0][0] != '#') {
      lines.emplace_back(line_no, std::move(tokens));
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  if (lines.empty()) throw line_error("empty edge list", 1);

  EdgeListParse result;
  const auto& [header_line, header] = lines.front();
  long long n = 0;
  long long m = 0;
  if (header[0] == "p") {
    result.dimacs = true;
    if (header.size() != 4) throw line_error("expected 'p edge <n> <m>'", header_line);
    n = parse_int(header[2], header_line);
    m = parse_int(header[3], header_line);
  } else {
    if (header.size() != 2) throw line_error("expected header '<n> <m>'", header_line);
    n = parse_int(header[0], header_line);
    m = parse_int(header[1], header_line);
  }
  if (n < 0 || m < 0) throw line_error("negative count in header", header_line);

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  const long long offset = result.dimacs ? 1 : 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [ln, tokens] = lines[i];
    std::size_t first = 0;
    if (result.dimacs) {
      if (tokens[0] != "e") throw line_error("expected DIMACS 'e <u> <v>' line", ln);
      first = 1;
    }
    if (tokens.size() != first + 2) throw line_error("expected exactly two vertex ids", ln);
    const long long u = parse_int(tokens[first], ln) - offset;
    const long long v = parse_int(tokens[first + 1], ln) - offset;
    if (u < 0 || v < 0 || u >= n || v >= n) throw line_error("vertex index out of range", ln);
    if (u == v) throw line_error("loop edge", ln);
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (static_cast<long long>(edges.size()) != m) {
    throw line_error("header announces " + std::to_string(m) + " edges but " +
                         std::to_string(edges.size()) + " were given",
                     lines.back().first);
  }
  result.graph = Graph(static_cast<std::size_t>(n), edges);
  result.duplicate_edges = result.graph.collapsed_duplicates();
  return result;
}

Graph parse_edge_list(std::string_view text) { return parse_edge_list_detailed(text).graph; }

std::string encode_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.m() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace kegraph
