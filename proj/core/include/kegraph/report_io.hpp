#pragma once

#include <string>
#include <string_view>

#include "kegraph/gallery.hpp"
#include "kegraph/graph.hpp"
#include "kegraph/ke_analysis.hpp"
#include "kegraph/theorem_suite.hpp"

namespace kegraph {

/// Version stamped into every JSON record. Bumped on any field change.
inline constexpr int kReportSchemaVersion = 1;

/// One JSON object on a single line (no trailing newline). Field order is
/// fixed, so equal inputs give byte-identical text. `index` is the 0-based
/// position of the graph in its input stream.
std::string ke_report_json(const Graph& g, const KEReport& r, std::size_t index);
std::string theorem_report_json(const TheoremReport& r, std::size_t index);
/// Record emitted in place of a report when a graph could not be analyzed.
/// `error` is a short machine-readable tag, e.g. "budget_exceeded".
std::string error_json(std::size_t index, std::string_view error, std::string_view message);
std::string gallery_cell_json(const GalleryCell& cell);

/// CSV header and rows (RFC 4180 quoting, no trailing newline).
std::string ke_report_csv_header();
std::string ke_report_csv_row(const Graph& g, const KEReport& r, std::size_t index);
std::string theorem_report_csv_header();
/// One row per entry, joined by newlines.
std::string theorem_report_csv_rows(const TheoremReport& r, std::size_t index);

/// Multi-line human-readable summary, ending in a newline.
std::string ke_report_text(const Graph& g, const KEReport& r, std::size_t index);

}  // namespace kegraph
