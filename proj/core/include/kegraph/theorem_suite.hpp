#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kegraph/budget.hpp"
#include "kegraph/graph.hpp"

namespace kegraph {

enum class TheoremStatus { Pass, Fail, NotApplicable };

struct TheoremEntry {
  std::string id;
  TheoremStatus status = TheoremStatus::Pass;
  std::string detail;    // failing witness, or the unmet precondition
  bool sampled = false;  // a "for every maximum matching" clause was sampled
};

struct TheoremReport {
  std::string graph6;
  std::vector<TheoremEntry> entries;

  std::size_t count(TheoremStatus status) const;
  bool any_fail() const { return count(TheoremStatus::Fail) > 0; }
  const TheoremEntry* find(std::string_view id) const;
};

struct TheoremSuiteOptions {
  Budget budget;
  /// Largest order for which all maximum matchings are enumerated; larger
  /// graphs use `matching_samples` randomized maximum matchings instead.
  int enumerate_matchings_up_to = 12;
  int matching_samples = 50;
  /// Largest order for which independent-set enumerations are run.
  int enumerate_sets_up_to = 20;
  /// Largest order for the odd-cycle count behind almost-bipartite checks.
  int cycle_count_up_to = 16;
  std::uint64_t seed = 0;
};

/// Every suite entry id, in report order.
std::span<const std::string_view> theorem_ids();

/// Checks every structural identity on g and reports Pass, Fail (with a
/// witness) or NotApplicable for each entry.
TheoremReport theorem_suite(const Graph& g, const TheoremSuiteOptions& options = {});

const char* to_string(TheoremStatus status);

}  // namespace kegraph
