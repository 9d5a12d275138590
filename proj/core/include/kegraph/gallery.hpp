#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kegraph/budget.hpp"
#include "kegraph/graph.hpp"

namespace kegraph {

enum class ExpectationKind {
  Stated,       // value given alongside the drawing; must match
  Derived,      // value fixed by exhaustive search; must match
  Discrepancy   // stated value known to disagree with computation; reported only
};

struct GalleryExpectation {
  ExpectationKind kind = ExpectationKind::Stated;
  std::string key;
  std::string argument;  // vertex/edge name or a "{a,b}" set; may be empty
  std::string value;
};

struct GalleryFixture {
  std::string name;
  Graph graph;  // carries the drawing's vertex names as labels
  std::vector<std::pair<std::string, Edge>> named_edges;
  std::vector<GalleryExpectation> expectations;
  std::vector<std::string> notes;
};

/// Parses the fixture bundle format (see core/data/gallery.txt). Throws
/// ParseError with a 1-based line number on malformed input.
std::vector<GalleryFixture> parse_gallery(std::string_view text);

/// The bundled fixture file, compiled into the library.
std::string_view gallery_source();

/// Parsed bundled fixtures, in file order.
const std::vector<GalleryFixture>& figure_gallery();

/// Throws DomainError for an unknown name.
const GalleryFixture& gallery_fixture(std::string_view name);

/// Every key understood by evaluate_fixture.
std::vector<std::string_view> gallery_keys();

struct GalleryCell {
  std::string fixture;
  ExpectationKind kind = ExpectationKind::Stated;
  std::string key;
  std::string argument;
  std::string expected;
  std::string computed;
  bool match = false;

  /// A mismatch that should fail a run. Discrepancy rows never do.
  bool fatal() const { return !match && kind != ExpectationKind::Discrepancy; }
};

/// Recomputes every expectation of the fixture. Unknown keys or names throw
/// DomainError.
std::vector<GalleryCell> evaluate_fixture(const GalleryFixture& fixture, Budget budget = {});

/// "{a,b,c}" using vertex labels (falling back to indices), in vertex order.
std::string format_vertex_set(const Graph& g, const VertexSet& s);
/// Inverse of format_vertex_set; names may come in any order.
VertexSet parse_vertex_set(const Graph& g, std::string_view text);

const char* to_string(ExpectationKind kind);

}  // namespace kegraph
