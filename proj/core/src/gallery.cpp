#include "kegraph/gallery.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <tuple>

#include "kegraph/critical.hpp"
#include "kegraph/generators.hpp"
#include "kegraph/graph_io.hpp"
#include "kegraph/ke_analysis.hpp"
#include "kegraph/matching.hpp"

namespace kegraph {

namespace detail {
extern const char* const kGallerySource;
}

namespace {

[[noreturn]] void fail(const std::string& what, std::size_t line) {
  throw ParseError(what, ParseError::Where::Line, line);
}

int to_int(const std::string& token, std::size_t line) {
  int value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || end != token.data() + token.size()) fail("expected integer, got '" + token + "'", line);
  return value;
}

Graph generated(const std::vector<std::string>& args, std::size_t line) {
  if (args.empty()) fail("generate needs a family", line);
  std::vector<int> p;
  for (std::size_t i = 1; i < args.size(); ++i) p.push_back(to_int(args[i], line));
  const auto need = [&](std::size_t k) {
    if (p.size() != k) fail("generate " + args[0] + " takes " + std::to_string(k) + " arguments", line);
  };
  try {
    if (args[0] == "gpq") { need(2); return gen_gpq(p[0], p[1]); }
    if (args[0] == "hk") { need(1); return gen_hk(p[0]); }
    if (args[0] == "cycle") { need(1); return cycle(p[0]); }
    if (args[0] == "path") { need(1); return path(p[0]); }
    if (args[0] == "complete") { need(1); return complete(p[0]); }
  } catch (const DomainError& e) {
    fail(e.what(), line);
  }
  fail("unknown generator family '" + args[0] + "'", line);
}

struct Pending {
  std::string name;
  std::size_t n = 0;
  std::size_t start_line = 0;
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  std::vector<std::tuple<std::string, Vertex, Vertex>> named;
  std::optional<Graph> generated;
  GalleryFixture fixture;
};

Vertex vertex_token(const Pending& p, const std::string& token, std::size_t line) {
  const int v = to_int(token, line);
  if (v < 0 || static_cast<std::size_t>(v) >= p.n) fail("vertex " + token + " out of range", line);
  return v;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::vector<GalleryFixture> parse_gallery(std::string_view text) {
  std::vector<GalleryFixture> out;
  std::optional<Pending> cur;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string body = raw.substr(0, raw.find('#'));
    std::istringstream words(body);
    std::vector<std::string> tok;
    for (std::string w; words >> w;) tok.push_back(w);
    if (tok.empty()) continue;
    const std::string& cmd = tok[0];

    if (cmd == "graph") {
      if (cur) fail("graph '" + cur->name + "' is missing 'end'", line);
      if (tok.size() != 3) fail("usage: graph <name> <n>", line);
      cur.emplace();
      cur->name = tok[1];
      cur->n = static_cast<std::size_t>(to_int(tok[2], line));
      cur->start_line = line;
      cur->labels.assign(cur->n, "");
      cur->fixture.name = tok[1];
      continue;
    }
    if (!cur) fail("'" + cmd + "' outside a graph block", line);

    if (cmd == "label") {
      if (tok.size() != 3) fail("usage: label <v> <name>", line);
      cur->labels[static_cast<std::size_t>(vertex_token(*cur, tok[1], line))] = tok[2];
    } else if (cmd == "edge") {
      if (tok.size() != 3) fail("usage: edge <u> <v>", line);
      const Vertex u = vertex_token(*cur, tok[1], line);
      const Vertex v = vertex_token(*cur, tok[2], line);
      if (u == v) fail("loop at vertex " + tok[1], line);
      cur->edges.emplace_back(u, v);
    } else if (cmd == "name") {
      if (tok.size() != 4) fail("usage: name <edge-name> <u> <v>", line);
      cur->named.emplace_back(tok[1], vertex_token(*cur, tok[2], line), vertex_token(*cur, tok[3], line));
    } else if (cmd == "generate") {
      cur->generated = generated(std::vector<std::string>(tok.begin() + 1, tok.end()), line);
      if (cur->generated->n() != cur->n) fail("generated graph has a different order", line);
    } else if (cmd == "expect" || cmd == "derived" || cmd == "discrepancy") {
      if (tok.size() != 3 && tok.size() != 4) fail("usage: " + cmd + " <key> [arg] <value>", line);
      GalleryExpectation e;
      e.kind = cmd == "expect"    ? ExpectationKind::Stated
               : cmd == "derived" ? ExpectationKind::Derived
                                  : ExpectationKind::Discrepancy;
      e.key = tok[1];
      if (tok.size() == 4) e.argument = tok[2];
      e.value = tok.back();
      cur->fixture.expectations.push_back(std::move(e));
    } else if (cmd == "note") {
      const std::size_t at = body.find("note") + 4;
      const std::size_t first = body.find_first_not_of(" \t", at);
      cur->fixture.notes.push_back(first == std::string::npos ? "" : body.substr(first));
    } else if (cmd == "end") {
      Graph g;
      if (cur->generated) {
        if (!cur->edges.empty()) fail("graph '" + cur->name + "' has both edges and a generator", line);
        g = *cur->generated;
      } else {
        g = Graph(cur->n, cur->edges);
        if (std::any_of(cur->labels.begin(), cur->labels.end(), [](const auto& s) { return !s.empty(); })) {
          g = g.with_labels(cur->labels);
        }
      }
      for (const auto& [name, u, v] : cur->named) {
        if (!g.has_edge(u, v)) fail("named edge '" + name + "' is not an edge", line);
        cur->fixture.named_edges.emplace_back(name, Edge(u, v));
      }
      cur->fixture.graph = std::move(g);
      out.push_back(std::move(cur->fixture));
      cur.reset();
    } else {
      fail("unknown directive '" + cmd + "'", line);
    }
  }
  if (cur) fail("graph '" + cur->name + "' is missing 'end'", cur->start_line);
  return out;
}

std::string_view gallery_source() { return detail::kGallerySource; }

const std::vector<GalleryFixture>& figure_gallery() {
  static const std::vector<GalleryFixture> fixtures = parse_gallery(gallery_source());
  return fixtures;
}

const GalleryFixture& gallery_fixture(std::string_view name) {
  for (const auto& f : figure_gallery()) {
    if (f.name == name) return f;
  }
  throw DomainError("no gallery fixture named '" + std::string(name) + "'");
}

std::string format_vertex_set(const Graph& g, const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Vertex v) {
    if (!first) out += ',';
    out += g.label(v);
    first = false;
  });
  return out + "}";
}

VertexSet parse_vertex_set(const Graph& g, std::string_view text) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
    throw DomainError("vertex set must be written {a,b,...}: '" + std::string(text) + "'");
  }
  VertexSet out(g.n());
  std::string_view rest = text.substr(1, text.size() - 2);
  while (!rest.empty()) {
    const std::size_t comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    std::optional<Vertex> v = g.find_label(item);
    if (!v) {
      int index = -1;
      const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), index);
      if (ec == std::errc{} && end == item.data() + item.size() && g.has_vertex(index)) v = index;
    }
    if (!v) throw DomainError("unknown vertex '" + std::string(item) + "'");
    out.insert(*v);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
  }
  return out;
}

namespace {

// Lazily computed quantities shared by every expectation of one fixture.
class Evaluator {
 public:
  Evaluator(const GalleryFixture& f, Budget budget) : f_(f), g_(f.graph), budget_(budget) {}

  // Returns the computed value, and whether it equals the expected one.
  std::pair<std::string, bool> eval(const GalleryExpectation& e) {
    const auto number = [&](int v) { return std::pair{std::to_string(v), std::to_string(v) == e.value}; };
    const auto flag = [&](bool v) { return std::pair{yes_no(v), yes_no(v) == e.value}; };
    const auto set = [&](const VertexSet& s) {
      return std::pair{format_vertex_set(g_, s), s == parse_vertex_set(g_, e.value)};
    };
    const KEReport& r = report();
    const std::string& k = e.key;
    if (k == "class") return {to_string(r.ke_class.kind), e.value == to_string(r.ke_class.kind)};
    if (k == "ke") return flag(r.ke_class.is_ke());
    if (k == "n") return number(r.n);
    if (k == "m") return number(r.m);
    if (k == "alpha") return number(r.alpha);
    if (k == "mu") return number(r.mu);
    if (k == "d") return number(r.d);
    if (k == "xi") return number(r.xi);
    if (k == "epsilon") return number(r.epsilon);
    if (k == "eta") return number(r.eta);
    if (k == "xi_minus_epsilon") return number(r.xi - r.epsilon);
    if (k == "rho_v") return number(r.rho_v);
    if (k == "rho_e") return number(r.rho_e);
    if (k == "rho_e_bound") return number(r.m - r.xi + r.epsilon);
    if (k == "core") return set(r.core);
    if (k == "ker") return set(r.ker);
    if (k == "core_equals_ker") return flag(r.core == r.ker);
    if (k == "perfect_matching") return flag(2 * r.mu == r.n);
    if (k == "mu_critical_core_edges") {
      return number(static_cast<int>(std::count_if(r.edges.begin(), r.edges.end(), [](const EdgeVerdict& v) {
        return v.mu_critical && v.location != EdgeLocation::OutsideCorePocket;
      })));
    }
    if (k == "deletion_ke") return flag(deletion_ke(e.argument));
    if (k == "critical") return flag(is_critical_independent(g_, parse_vertex_set(g_, e.argument)));
    if (k == "largest_critical") {
      const VertexSet a = parse_vertex_set(g_, e.argument);
      const auto largest = max_critical_independent_set_bruteforce(g_, budget_).size();
      return flag(is_critical_independent(g_, a) && a.size() == largest);
    }
    if (k == "closed_nbhd_d_exceeds") {
      const VertexSet a = parse_vertex_set(g_, e.argument);
      const Subgraph inside = induced_subgraph(g_, closed_neighborhood(g_, a));
      return flag(critical_difference(inside.graph) > r.d);
    }
    if (k == "perfect_matching_outside_closed_ker") {
      const Subgraph rest = delete_vertices(g_, closed_neighborhood(g_, r.ker));
      return flag(2 * matching_number(rest.graph) == static_cast<int>(rest.graph.n()));
    }
    throw DomainError("unknown gallery key '" + k + "'");
  }

 private:
  const KEReport& report() {
    if (!report_) report_ = analyze(g_, budget_);
    return *report_;
  }

  bool deletion_ke(const std::string& name) {
    for (const auto& [edge_name, e] : f_.named_edges) {
      if (edge_name != name) continue;
      for (const EdgeVerdict& v : report().edges) {
        if (v.edge == e) return v.deletion_is_ke;
      }
    }
    if (const auto v = g_.find_label(name)) {
      return report().vertices[static_cast<std::size_t>(*v)].deletion_class.is_ke();
    }
    throw DomainError("fixture " + f_.name + " has no vertex or edge named '" + name + "'");
  }

  const GalleryFixture& f_;
  const Graph& g_;
  Budget budget_;
  std::optional<KEReport> report_;
};

}  // namespace

std::vector<std::string_view> gallery_keys() {
  return {"class", "ke", "n", "m", "alpha", "mu", "d", "xi", "epsilon", "eta", "xi_minus_epsilon",
          "rho_v", "rho_e", "rho_e_bound", "core", "ker", "core_equals_ker", "perfect_matching",
          "mu_critical_core_edges", "deletion_ke", "critical", "largest_critical",
          "closed_nbhd_d_exceeds", "perfect_matching_outside_closed_ker"};
}

std::vector<GalleryCell> evaluate_fixture(const GalleryFixture& fixture, Budget budget) {
  Evaluator ev(fixture, budget);
  std::vector<GalleryCell> cells;
  for (const GalleryExpectation& e : fixture.expectations) {
    auto [computed, match] = ev.eval(e);
    cells.push_back({fixture.name, e.kind, e.key, e.argument, e.value, std::move(computed), match});
  }
  return cells;
}

const char* to_string(ExpectationKind kind) {
  switch (kind) {
    case ExpectationKind::Stated: return "stated";
    case ExpectationKind::Derived: return "derived";
    case ExpectationKind::Discrepancy: return "discrepancy";
  }
  return "?";
}

}  // namespace kegraph
