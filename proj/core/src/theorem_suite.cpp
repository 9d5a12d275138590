#include "kegraph/theorem_suite.hpp"

#include <algorithm>
#include <array>
#include <optional>

#include "kegraph/critical.hpp"
#include "kegraph/graph_io.hpp"
#include "kegraph/independence.hpp"
#include "kegraph/ke_analysis.hpp"
#include "kegraph/matching.hpp"

namespace kegraph {

namespace {

constexpr std::array<std::string_view, 39> kIds = {
    "critical_difference_bound",
    "ke_core_structure",
    "critical_set_containment",
    "critical_set_lattice",
    "ker_equals_core_special_classes",
    "ke_characterizations",
    "single_core_vertex_leaf",
    "induced_non_ke_subgraph",
    "critical_decomposition",
    "ker_deletion",
    "ker_matching_characterization",
    "ker_neighborhood_redundancy",
    "critical_neighborhood_subgraph",
    "critical_extension_matching",
    "perfect_matching_between_critical_sets",
    "almost_bipartite_bounds",
    "core_vs_mu_critical_after_deletion",
    "ker_characterization_ke",
    "alpha_critical_edge_bound",
    "alpha_mu_core_bound",
    "vertex_heredity_bounds",
    "maximum_matching_layers",
    "ker_matchings_extend",
    "mu_critical_edge_bound",
    "outside_core_edge_deletion",
    "no_alpha_critical_near_core",
    "ker_edge_matchings",
    "edge_heredity",
    "edge_count_bound",
    "core_equals_ker_edge_heredity",
    "bound_tightness_unique_matching",
    "single_gap_edge_heredity",
    "gap_spectrum",
    "vertex_vs_edge_heredity",
    "vertex_heredity",
    "ke_vertex_heredity_positive",
    "full_vertex_heredity_iff_core_equals_ker",
    "core_minus_ker_deletion",
    "maximum_critical_closure",
};

std::string set_str(const Graph& g, const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Vertex v) {
    if (!first) out += ",";
    out += g.label(v);
    first = false;
  });
  return out + "}";
}

std::string edge_str(const Graph& g, const Edge& e) { return g.label(e.u) + "-" + g.label(e.v); }

// Collects the first failure of a multi-clause check.
class Outcome {
 public:
  explicit Outcome(std::string_view id) : id_(id) {}

  void fail(std::string why) {
    if (!why_) why_ = std::move(why);
  }
  void require(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
  bool failed() const { return why_.has_value(); }
  void mark_sampled() { sampled_ = true; }

  TheoremEntry done() const {
    TheoremEntry e;
    e.id = std::string(id_);
    e.sampled = sampled_;
    if (why_) {
      e.status = TheoremStatus::Fail;
      e.detail = *why_;
    }
    return e;
  }

 private:
  std::string_view id_;
  std::optional<std::string> why_;
  bool sampled_ = false;
};

TheoremEntry not_applicable(std::string_view id, std::string reason) {
  TheoremEntry e;
  e.id = std::string(id);
  e.status = TheoremStatus::NotApplicable;
  e.detail = std::move(reason);
  return e;
}

struct NamedSet {
  std::string name;
  VertexSet set;
};

struct Context {
  const Graph& g;
  const TheoremSuiteOptions& options;
  int n = 0;
  int m = 0;
  KEReport report;
  bool ke = false;
  VertexSet all;
  VertexSet core_nbrs;
  VertexSet ker_nbrs;
  VertexSet greedy;
  bool enumerable = false;
  std::vector<VertexSet> omega;
  std::vector<VertexSet> critical_sets;
  std::vector<VertexSet> max_critical;
  std::vector<Matching> matchings;
  bool matchings_sampled = false;
  std::vector<NamedSet> pool;  // critical independent sets used as test subjects

  Context(const Graph& graph, const TheoremSuiteOptions& opts) : g(graph), options(opts) {
    n = static_cast<int>(g.n());
    m = static_cast<int>(g.m());
    report = analyze(g, options.budget);
    ke = report.ke_class.is_ke();
    all = VertexSet::full(g.n());
    core_nbrs = neighborhood(g, report.core);
    ker_nbrs = neighborhood(g, report.ker);
    greedy = find_critical_independent_set(g);
    enumerable = n <= options.enumerate_sets_up_to;
    if (enumerable) {
      omega = enumerate_maximum_independent_sets(g, options.budget);
      critical_sets = critical_independent_sets(g, options.budget);
      max_critical = maximum_critical_independent_sets(g, options.budget);
    }
    if (n <= options.enumerate_matchings_up_to) {
      matchings = enumerate_maximum_matchings(g, options.budget);
    } else {
      matchings_sampled = true;
      for (int i = 0; i < options.matching_samples; ++i) {
        matchings.push_back(random_maximum_matching(g, options.seed + static_cast<std::uint64_t>(i)));
      }
    }

    add_to_pool("ker", report.ker);
    add_to_pool("greedy", greedy);
    if (!max_critical.empty()) add_to_pool("max-critical", max_critical.front());
    if (ke) {
      add_to_pool("core", report.core);
      for (std::size_t i = 0; i < omega.size() && i < 4; ++i) add_to_pool("omega[" + std::to_string(i) + "]", omega[i]);
    }
  }

  void add_to_pool(std::string name, const VertexSet& s) {
    if (!is_independent(g, s) || difference(g, s) != report.d) return;
    for (const NamedSet& p : pool) {
      if (p.set == s) return;
    }
    pool.push_back({std::move(name), s});
  }

  bool is_critical(const VertexSet& s) const { return is_independent(g, s) && difference(g, s) == report.d; }

  // Matching from `from` into `into` saturating `from`.
  bool matches_into(const VertexSet& from, const VertexSet& into) const {
    return max_matching_bipartite(g, from, into).size() == from.size();
  }

  // M restricted to (x, y) is a perfect matching between x and y.
  static bool perfect_between(const Matching& mm, const VertexSet& x, const VertexSet& y) {
    if (x.size() != y.size()) return false;
    bool ok = true;
    x.for_each([&](Vertex v) {
      const auto w = mm.mate(v);
      if (!w || !y.contains(*w)) ok = false;
    });
    return ok;
  }
};

TheoremEntry critical_difference_bound(const Context& c) {
  Outcome o(kIds[0]);
  o.require(c.report.d >= c.report.alpha - c.report.mu,
            "d=" + std::to_string(c.report.d) + " < alpha-mu=" + std::to_string(c.report.alpha - c.report.mu));
  return o.done();
}

TheoremEntry ke_core_structure(const Context& c) {
  if (!c.ke) return not_applicable(kIds[1], "not König-Egerváry");
  Outcome o(kIds[1]);
  if (c.matchings_sampled) o.mark_sampled();
  for (const Matching& mm : c.matchings) {
    c.core_nbrs.for_each([&](Vertex x) {
      const auto w = mm.mate(x);
      if (!w || !c.report.core.contains(*w)) {
        o.fail("N(core) vertex " + c.g.label(x) + " not matched into core by a maximum matching");
      }
    });
  }
  const Subgraph rest = delete_vertices(c.g, closed_neighborhood(c.g, c.report.core));
  const KEClass rc = ke_class(rest.graph, c.options.budget);
  o.require(rc.is_ke() && 2 * rc.mu == rc.n, "G - N[core] is not KE with a perfect matching");
  const int gap = static_cast<int>(c.report.core.size()) - static_cast<int>(c.core_nbrs.size());
  o.require(gap == c.report.alpha - c.report.mu && gap == c.report.d,
            "|core|-|N(core)|=" + std::to_string(gap) + ", alpha-mu=" +
                std::to_string(c.report.alpha - c.report.mu) + ", d=" + std::to_string(c.report.d));
  return o.done();
}

TheoremEntry critical_set_containment(const Context& c) {
  Outcome o(kIds[2]);
  o.require(c.is_critical(c.greedy), "greedy set " + set_str(c.g, c.greedy) + " is not critical");
  const int alpha = c.report.alpha;
  for (const NamedSet& a : c.pool) {
    const Subgraph rest = delete_vertices(c.g, closed_neighborhood(c.g, a.set));
    o.require(static_cast<int>(a.set.size()) + independence_number(rest.graph, c.options.budget) == alpha,
              a.name + " " + set_str(c.g, a.set) + " lies in no maximum independent set");
    if (c.enumerable) {
      const bool inside = std::any_of(c.max_critical.begin(), c.max_critical.end(),
                                      [&](const VertexSet& s) { return a.set.is_subset_of(s); });
      o.require(inside, a.name + " lies in no maximum critical independent set");
    }
    o.require(c.matches_into(neighborhood(c.g, a.set), a.set),
              "no matching from N(" + a.name + ") into " + a.name);
  }
  return o.done();
}

TheoremEntry critical_set_lattice(const Context& c) {
  Outcome o(kIds[3]);
  o.require(c.report.ker.is_subset_of(c.report.core),
            "ker " + set_str(c.g, c.report.ker) + " not inside core " + set_str(c.g, c.report.core));
  for (const NamedSet& a : c.pool) {
    for (const NamedSet& b : c.pool) {
      o.require(difference(c.g, a.set | b.set) == c.report.d, a.name + " u " + b.name + " is not critical");
      o.require(difference(c.g, a.set & b.set) == c.report.d, a.name + " n " + b.name + " is not critical");
    }
  }
  o.require(c.is_critical(c.report.ker), "ker is not a critical independent set");
  if (c.enumerable) {
    for (const VertexSet& s : c.critical_sets) {
      o.require(c.report.ker.is_subset_of(s), "critical set " + set_str(c.g, s) + " misses part of ker");
    }
  }
  return o.done();
}

TheoremEntry ker_equals_core_special_classes(const Context& c) {
  const bool bipartite = c.report.ke_class.kind == KEKind::Bipartite;
  bool almost_non_ke = false;
  if (!bipartite && !c.ke && c.n <= c.options.cycle_count_up_to) {
    almost_non_ke = is_almost_bipartite(c.g, c.options.budget);
  }
  if (!bipartite && !almost_non_ke) {
    return not_applicable(kIds[4], "neither bipartite nor almost bipartite non-KE");
  }
  Outcome o(kIds[4]);
  o.require(c.report.ker == c.report.core,
            "ker " + set_str(c.g, c.report.ker) + " != core " + set_str(c.g, c.report.core));
  return o.done();
}

TheoremEntry ke_characterizations(const Context& c) {
  if (!c.enumerable || c.omega.empty()) return not_applicable(kIds[5], "maximum independent sets not enumerated");
  Outcome o(kIds[5]);
  const bool every = std::all_of(c.omega.begin(), c.omega.end(), [&](const VertexSet& s) { return c.is_critical(s); });
  const bool some = std::any_of(c.omega.begin(), c.omega.end(), [&](const VertexSet& s) { return c.is_critical(s); });
  o.require(c.ke == every, "KE status differs from 'every maximum independent set is critical'");
  o.require(c.ke == some, "KE status differs from 'some maximum independent set is critical'");
  const VertexSet& s0 = c.omega.front();
  const VertexSet rest = c.all - s0;
  const bool split = s0.size() >= rest.size() && max_matching_bipartite(c.g, s0, rest).size() == rest.size();
  o.require(c.ke == split, "KE status differs from the S*A matching criterion");
  if (c.ke) {
    if (c.matchings_sampled) o.mark_sampled();
    for (const VertexSet& s : c.omega) {
      const VertexSet outside = c.all - s;
      for (const Matching& mm : c.matchings) {
        bool ok = true;
        outside.for_each([&](Vertex v) {
          const auto w = mm.mate(v);
          if (!w || !s.contains(*w)) ok = false;
        });
        o.require(ok, "a maximum matching does not match V-S into S for S=" + set_str(c.g, s));
      }
    }
  }
  return o.done();
}

TheoremEntry single_core_vertex_leaf(const Context& c) {
  bool isolated = false;
  for (Vertex v = 0; v < c.n; ++v) isolated = isolated || c.g.degree(v) == 0;
  if (!c.ke || isolated || c.report.xi != 1) {
    return not_applicable(kIds[6], "needs KE, no isolated vertices and |core| = 1");
  }
  Outcome o(kIds[6]);
  const Vertex v = c.report.core.members().front();
  o.require(2 * c.report.mu == c.n, "no perfect matching");
  o.require(c.g.degree(v) == 1, "core vertex " + c.g.label(v) + " is not a leaf");
  return o.done();
}

TheoremEntry induced_non_ke_subgraph(const Context& c) {
  if (!c.ke || c.report.ke_class.kind == KEKind::Bipartite) {
    return not_applicable(kIds[7], "needs a non-bipartite KE graph");
  }
  Outcome o(kIds[7]);
  const auto cyc = shortest_odd_cycle(c.g);
  if (!cyc) {
    o.fail("no odd cycle found in a non-bipartite graph");
    return o.done();
  }
  const VertexSet on(c.g.n(), std::span<const Vertex>(*cyc));
  const Subgraph h = induced_subgraph(c.g, on);
  o.require(h.graph.m() == cyc->size(), "shortest odd cycle is not induced");
  o.require(!is_ke(h.graph, c.options.budget), "induced odd cycle " + set_str(c.g, on) + " is KE");
  return o.done();
}

TheoremEntry critical_decomposition_entry(const Context& c) {
  Outcome o(kIds[8]);
  for (const NamedSet& a : c.pool) {
    const CriticalDecomposition dec = critical_decomposition(c.g, a.set, c.options.budget);
    o.require(dec.all_hold(), "decomposition along " + a.name + " " + set_str(c.g, a.set) + " fails");
  }
  return o.done();
}

TheoremEntry ker_deletion(const Context& c) {
  Outcome o(kIds[9]);
  if (c.enumerable) {
    VertexSet meet = c.all;
    for (const VertexSet& s : c.critical_sets) meet &= s;
    o.require(meet == c.report.ker,
              "deletion ker " + set_str(c.g, c.report.ker) + " != intersection " + set_str(c.g, meet));
  }
  c.report.ker.for_each([&](Vertex v) {
    const Subgraph sub = delete_vertex(c.g, v);
    VertexSet expected = c.report.ker;
    expected.erase(v);
    const VertexSet lifted = sub.lift(ker(sub.graph), c.g.n());
    o.require(lifted.is_subset_of(expected), "ker(G-" + c.g.label(v) + ") " + set_str(c.g, lifted) +
                                                 " not inside ker - v");
  });
  return o.done();
}

TheoremEntry ker_matching_characterization(const Context& c) {
  Outcome o(kIds[10]);
  for (const NamedSet& a : c.pool) {
    const VertexSet nbrs = neighborhood(c.g, a.set);
    bool every = true;
    a.set.for_each([&](Vertex v) {
      VertexSet smaller = a.set;
      smaller.erase(v);
      if (!c.matches_into(nbrs, smaller)) every = false;
    });
    o.require(every == (a.set == c.report.ker),
              a.name + " " + set_str(c.g, a.set) + ": matching criterion disagrees with equality to ker");
  }
  return o.done();
}

TheoremEntry ker_neighborhood_redundancy(const Context& c) {
  if (c.report.ker.empty()) return not_applicable(kIds[11], "ker is empty");
  Outcome o(kIds[11]);
  std::vector<NamedSet> supersets = {{"ker", c.report.ker}, {"core", c.report.core}, {"V", c.all}};
  for (const NamedSet& a : c.pool) supersets.push_back(a);
  for (const NamedSet& a : supersets) {
    if (!c.report.ker.is_subset_of(a.set)) continue;
    const VertexSet full = neighborhood(c.g, a.set);
    c.report.ker.for_each([&](Vertex v) {
      VertexSet smaller = a.set;
      smaller.erase(v);
      o.require(neighborhood(c.g, smaller) == full,
                "N(" + a.name + ") changes when " + c.g.label(v) + " is removed");
    });
  }
  return o.done();
}

TheoremEntry critical_neighborhood_subgraph(const Context& c) {
  Outcome o(kIds[12]);
  std::vector<NamedSet> supersets = {{"ker", c.report.ker}, {"core", c.report.core}, {"V", c.all}};
  for (const NamedSet& a : c.pool) supersets.push_back(a);
  for (const NamedSet& a : supersets) {
    if (!c.report.ker.is_subset_of(a.set)) continue;
    const Subgraph h = induced_subgraph(c.g, closed_neighborhood(c.g, a.set));
    o.require(critical_difference(h.graph) >= c.report.d, "d(G[N[" + a.name + "]]) < d(G)");
  }
  for (const NamedSet& a : c.pool) {
    const Subgraph h = induced_subgraph(c.g, closed_neighborhood(c.g, a.set));
    o.require(critical_difference(h.graph) == c.report.d, "d(G[N[" + a.name + "]]) != d(G)");
    o.require(h.lift(ker(h.graph), c.g.n()) == c.report.ker, "ker(G[N[" + a.name + "]]) != ker(G)");
  }
  return o.done();
}

TheoremEntry critical_extension_matching(const Context& c) {
  Outcome o(kIds[13]);
  std::vector<VertexSet> hosts = c.max_critical;
  for (std::size_t i = 0; i < c.omega.size() && i < 64; ++i) hosts.push_back(c.omega[i]);
  for (const NamedSet& p : c.pool) hosts.push_back(p.set);
  for (const NamedSet& a : c.pool) {
    const VertexSet blocked = neighborhood(c.g, a.set);
    for (const VertexSet& s : hosts) {
      if (!a.set.is_subset_of(s) || !is_independent(c.g, s)) continue;
      o.require(c.matches_into(s - a.set, c.all - s - blocked),
                "no matching from S-" + a.name + " into V-S-N(" + a.name + ") for S=" + set_str(c.g, s));
    }
  }
  return o.done();
}

TheoremEntry perfect_matching_between_critical_sets(const Context& c) {
  Outcome o(kIds[14]);
  for (const NamedSet& a : c.pool) {
    for (const NamedSet& b : c.pool) {
      if (!b.set.is_subset_of(a.set)) continue;
      const VertexSet top = a.set - b.set;
      const VertexSet bottom = neighborhood(c.g, a.set) - neighborhood(c.g, b.set);
      const bool perfect =
          top.size() == bottom.size() && max_matching_bipartite(c.g, top, bottom).size() == top.size();
      o.require(perfect, "no perfect matching between " + a.name + "-" + b.name + " and N(" + a.name +
                             ")-N(" + b.name + ")");
      // The matched pair (A-B) u (N(A)-N(B)), not the closed neighbourhood of
      // A-B, which can reach into N(B) and need not be KE.
      const Subgraph h = induced_subgraph(c.g, top | bottom);
      o.require(is_ke(h.graph, c.options.budget),
                "G[(" + a.name + "-" + b.name + ") u (N(" + a.name + ")-N(" + b.name + "))] is not KE");
    }
  }
  return o.done();
}

TheoremEntry almost_bipartite_bounds(const Context& c) {
  if (c.n > c.options.cycle_count_up_to) return not_applicable(kIds[15], "too many vertices for cycle counting");
  if (!is_almost_bipartite(c.g, c.options.budget)) return not_applicable(kIds[15], "not almost bipartite");
  Outcome o(kIds[15]);
  const int sum = c.report.alpha + c.report.mu;
  o.require(c.n - 1 <= sum && sum <= c.n, "alpha+mu=" + std::to_string(sum));
  return o.done();
}

TheoremEntry core_vs_mu_critical_after_deletion(const Context& c) {
  if (!c.ke) return not_applicable(kIds[16], "not König-Egerváry");
  Outcome o(kIds[16]);
  for (const VertexVerdict& v : c.report.vertices) {
    if (!v.deletion_class.is_ke()) continue;
    const bool in_core = c.report.core.contains(v.vertex);
    const bool mu_crit = c.report.mu_critical_vertices.contains(v.vertex);
    o.require(in_core == !mu_crit, "vertex " + c.g.label(v.vertex) + " breaks core <=> not mu-critical");
  }
  return o.done();
}

TheoremEntry ker_characterization_ke(const Context& c) {
  if (!c.ke) return not_applicable(kIds[17], "not König-Egerváry");
  Outcome o(kIds[17]);
  for (Vertex v = 0; v < c.n; ++v) {
    const bool expected = c.report.core.contains(v) && !c.report.mu_critical_vertices.contains(v);
    o.require(c.report.ker.contains(v) == expected, "vertex " + c.g.label(v));
  }
  return o.done();
}

TheoremEntry alpha_critical_edge_bound(const Context& c) {
  if (!c.ke) return not_applicable(kIds[18], "not König-Egerváry");
  Outcome o(kIds[18]);
  o.require(c.report.eta <= c.report.alpha - c.report.xi,
            "eta=" + std::to_string(c.report.eta) + " > alpha-xi=" + std::to_string(c.report.alpha - c.report.xi));
  return o.done();
}

TheoremEntry alpha_mu_core_bound(const Context& c) {
  for (Vertex v = 0; v < c.n; ++v) {
    if (c.g.degree(v) == 0) return not_applicable(kIds[19], "has isolated vertices");
  }
  Outcome o(kIds[19]);
  o.require(c.report.alpha - c.report.mu <= c.report.xi, "alpha-mu > xi");
  return o.done();
}

TheoremEntry vertex_heredity_bounds(const Context& c) {
  if (!c.ke) return not_applicable(kIds[20], "not König-Egerváry");
  Outcome o(kIds[20]);
  const KEReport& r = c.report;
  const int low = r.eta + r.mu + r.epsilon;
  const int high = 2 * r.mu + r.epsilon;
  o.require(low <= r.rho_v && r.rho_v <= high, "rho_v=" + std::to_string(r.rho_v) + " outside [" +
                                                  std::to_string(low) + "," + std::to_string(high) + "]");
  o.require((r.eta == r.mu) == (low == r.rho_v && r.rho_v == high), "equality case disagrees with eta == mu");
  return o.done();
}

TheoremEntry maximum_matching_layers(const Context& c) {
  if (!c.ke) return not_applicable(kIds[21], "not König-Egerváry");
  if (c.omega.empty()) return not_applicable(kIds[21], "maximum independent sets not enumerated");
  Outcome o(kIds[21]);
  if (c.matchings_sampled) o.mark_sampled();
  const VertexSet& core_set = c.report.core;
  const VertexSet& ker_set = c.report.ker;
  const VertexSet x2 = c.core_nbrs - c.ker_nbrs;
  const VertexSet y2 = core_set - ker_set;
  for (std::size_t i = 0; i < c.omega.size() && i < 64; ++i) {
    const VertexSet& s = c.omega[i];
    const VertexSet s_nbrs = neighborhood(c.g, s);
    const VertexSet x1 = s_nbrs - c.core_nbrs;
    const VertexSet x3 = s_nbrs - c.ker_nbrs;
    o.require(x1 == c.all - s - c.core_nbrs, "N(S)-N(core) != V-S-N(core) for S=" + set_str(c.g, s));
    o.require(x3 == c.all - s - c.ker_nbrs, "N(S)-N(ker) != V-S-N(ker) for S=" + set_str(c.g, s));
    for (const Matching& mm : c.matchings) {
      o.require(Context::perfect_between(mm, x1, s - core_set),
                "maximum matching not perfect on (N(S)-N(core), S-core) for S=" + set_str(c.g, s));
      o.require(Context::perfect_between(mm, x3, s - ker_set),
                "maximum matching not perfect on (N(S)-N(ker), S-ker) for S=" + set_str(c.g, s));
    }
  }
  for (const Matching& mm : c.matchings) {
    o.require(Context::perfect_between(mm, x2, y2), "maximum matching not perfect on (N(core)-N(ker), core-ker)");
  }
  return o.done();
}

TheoremEntry ker_matchings_extend(const Context& c) {
  if (!c.ke) return not_applicable(kIds[22], "not König-Egerváry");
  Outcome o(kIds[22]);
  const VertexSet closed = closed_neighborhood(c.g, c.report.ker);
  const Subgraph h = induced_subgraph(c.g, closed);
  const int mu_h = matching_number(h.graph);
  std::vector<Matching> local;
  if (static_cast<int>(h.graph.n()) <= c.options.enumerate_matchings_up_to) {
    local = enumerate_maximum_matchings(h.graph, c.options.budget);
  } else {
    o.mark_sampled();
    for (int i = 0; i < c.options.matching_samples; ++i) {
      local.push_back(random_maximum_matching(h.graph, c.options.seed + static_cast<std::uint64_t>(i)));
    }
  }
  for (const Matching& mh : local) {
    VertexSet used(c.g.n());
    mh.saturated().for_each([&](Vertex v) { used.insert(h.to_parent[static_cast<std::size_t>(v)]); });
    const int rest = matching_number(delete_vertices(c.g, used).graph);
    o.require(static_cast<int>(mh.size()) + rest == c.report.mu,
              "a maximum matching of G[N[ker]] does not extend to a maximum matching of G");
  }
  if (c.matchings_sampled) o.mark_sampled();
  for (const Matching& mm : c.matchings) {
    int trace = 0;
    for (const Edge& e : mm.edges()) {
      if (closed.contains(e.u) && closed.contains(e.v)) ++trace;
    }
    o.require(trace == mu_h, "trace of a maximum matching on N[ker] is not maximum there");
  }
  return o.done();
}

TheoremEntry mu_critical_edge_bound(const Context& c) {
  Outcome o(kIds[23]);
  if (c.matchings_sampled) o.mark_sampled();
  int count = 0;
  for (const EdgeVerdict& e : c.report.edges) {
    if (!e.mu_critical) continue;
    ++count;
    for (const Matching& mm : c.matchings) {
      o.require(mm.contains(e.edge), "mu-critical edge " + edge_str(c.g, e.edge) + " missing from a maximum matching");
    }
  }
  o.require(count <= c.report.mu, std::to_string(count) + " mu-critical edges exceed mu");
  return o.done();
}

TheoremEntry outside_core_edge_deletion(const Context& c) {
  if (!c.ke) return not_applicable(kIds[24], "not König-Egerváry");
  Outcome o(kIds[24]);
  for (const EdgeVerdict& e : c.report.edges) {
    if (e.location == EdgeLocation::OutsideCorePocket) {
      o.require(e.deletion_is_ke, "G-" + edge_str(c.g, e.edge) + " is not KE");
    }
  }
  return o.done();
}

TheoremEntry no_alpha_critical_near_core(const Context& c) {
  Outcome o(kIds[25]);
  for (const EdgeVerdict& e : c.report.edges) {
    if (c.core_nbrs.contains(e.edge.u) || c.core_nbrs.contains(e.edge.v)) {
      o.require(!e.alpha_critical, "alpha-critical edge " + edge_str(c.g, e.edge) + " touches N(core)");
    }
  }
  return o.done();
}

TheoremEntry ker_edge_matchings(const Context& c) {
  if (c.report.ker.empty()) return not_applicable(kIds[26], "ker is empty");
  Outcome o(kIds[26]);
  for (const EdgeVerdict& ev : c.report.edges) {
    if (ev.location != EdgeLocation::KerPocket) continue;
    const Edge e = ev.edge;
    const Vertex x = c.report.ker.contains(e.u) ? e.u : e.v;
    const Vertex y = e.other(x);
    VertexSet from = c.ker_nbrs;
    from.erase(y);
    VertexSet into = c.report.ker;
    into.erase(x);
    o.require(c.matches_into(from, into), "no matching N(ker)->ker through " + edge_str(c.g, e));
    const Graph without = delete_edge(c.g, e);
    o.require(max_matching_bipartite(without, c.ker_nbrs, c.report.ker).size() == c.ker_nbrs.size(),
              "no matching N(ker)->ker avoiding " + edge_str(c.g, e));
  }
  return o.done();
}

TheoremEntry edge_heredity(const Context& c) {
  if (!c.ke) return not_applicable(kIds[27], "not König-Egerváry");
  Outcome o(kIds[27]);
  int cross = 0;
  for (const EdgeVerdict& e : c.report.edges) {
    if (!e.mu_critical) continue;
    o.require(e.location != EdgeLocation::KerPocket, "mu-critical edge " + edge_str(c.g, e.edge) + " in (ker,N(ker))");
    o.require(e.location != EdgeLocation::CoreMinusKerToKerN,
              "mu-critical edge " + edge_str(c.g, e.edge) + " in (core-ker,N(ker))");
    if (e.location == EdgeLocation::CrossPocket) ++cross;
  }
  const KEReport& r = c.report;
  o.require(cross <= r.xi - r.epsilon, std::to_string(cross) + " mu-critical edges exceed xi-epsilon");
  o.require(r.gap_matching == PerfectMatchingKind::UniquePerfect || r.gap_matching == PerfectMatchingKind::MultiplePerfect,
            "(core-ker, N(core)-N(ker)) has no perfect matching");
  o.require(r.rho_e >= r.m - r.xi + r.epsilon, "rho_e below m-xi+epsilon");
  return o.done();
}

TheoremEntry edge_count_bound(const Context& c) {
  if (!c.ke) return not_applicable(kIds[28], "not König-Egerváry");
  Outcome o(kIds[28]);
  o.require(c.m - c.report.xi + c.report.epsilon >= c.report.eta, "m-xi+epsilon < eta");
  return o.done();
}

TheoremEntry core_equals_ker_edge_heredity(const Context& c) {
  if (!c.ke) return not_applicable(kIds[29], "not König-Egerváry");
  if (c.report.core != c.report.ker) return not_applicable(kIds[29], "core != ker");
  Outcome o(kIds[29]);
  o.require(c.report.rho_e == c.m, "rho_e=" + std::to_string(c.report.rho_e) + " != m");
  return o.done();
}

TheoremEntry bound_tightness_unique_matching(const Context& c) {
  if (!c.ke) return not_applicable(kIds[30], "not König-Egerváry");
  Outcome o(kIds[30]);
  const bool tight = c.report.rho_e == *c.report.rho_e_bound;
  const bool unique = c.report.gap_matching == PerfectMatchingKind::UniquePerfect;
  o.require(tight == unique, std::string("bound ") + (tight ? "tight" : "strict") + " but gap matching is " +
                                 to_string(*c.report.gap_matching));
  return o.done();
}

TheoremEntry single_gap_edge_heredity(const Context& c) {
  if (!c.ke || c.report.epsilon != c.report.xi - 1) return not_applicable(kIds[31], "needs KE with epsilon = xi-1");
  Outcome o(kIds[31]);
  o.require(c.report.rho_e == c.m - 1, "rho_e=" + std::to_string(c.report.rho_e) + " != m-1");
  return o.done();
}

TheoremEntry gap_spectrum(const Context& c) {
  if (!c.ke) return not_applicable(kIds[32], "not König-Egerváry");
  Outcome o(kIds[32]);
  int inside = 0;
  for (const EdgeVerdict& e : c.report.edges) {
    if (e.mu_critical && e.location != EdgeLocation::OutsideCorePocket) ++inside;
  }
  const int gap = c.m - c.report.rho_e;
  o.require(gap == inside, "m-rho_e=" + std::to_string(gap) + " but " + std::to_string(inside) +
                               " mu-critical edges in (core,N(core))");
  const int width = c.report.xi - c.report.epsilon;
  if (width >= 2) o.require(gap != width - 1, "m-rho_e = xi-epsilon-1");
  return o.done();
}

TheoremEntry vertex_vs_edge_heredity(const Context& c) {
  if (!c.ke) return not_applicable(kIds[33], "not König-Egerváry");
  Outcome o(kIds[33]);
  const int vgap = c.n - c.report.rho_v;
  const int egap = c.m - c.report.rho_e;
  o.require(vgap >= egap, "n-rho_v < m-rho_e");
  if (c.report.xi - c.report.epsilon <= 1) o.require(vgap == egap, "n-rho_v != m-rho_e with xi-epsilon <= 1");
  return o.done();
}

TheoremEntry vertex_heredity(const Context& c) {
  if (!c.ke) return not_applicable(kIds[34], "not König-Egerváry");
  Outcome o(kIds[34]);
  for (const VertexVerdict& v : c.report.vertices) {
    const bool ok = v.zone == VertexZone::CoreMinusKer ? v.deletion_class.is_one_ke() : v.deletion_class.is_ke();
    o.require(ok, "vertex " + c.g.label(v.vertex) + " in zone " + to_string(v.zone) + " deletes to " +
                      to_string(v.deletion_class.kind));
  }
  o.require(*c.report.rho_v_equality, "rho_v=" + std::to_string(c.report.rho_v) + " != n-xi+epsilon=" +
                                          std::to_string(*c.report.rho_v_formula));
  return o.done();
}

TheoremEntry ke_vertex_heredity_positive(const Context& c) {
  if (!c.ke || c.n == 0) return not_applicable(kIds[35], "needs a nonempty KE graph");
  Outcome o(kIds[35]);
  o.require(c.report.rho_v > 0, "rho_v = 0");
  return o.done();
}

TheoremEntry full_vertex_heredity_iff_core_equals_ker(const Context& c) {
  if (!c.ke) return not_applicable(kIds[36], "not König-Egerváry");
  Outcome o(kIds[36]);
  o.require((c.report.rho_v == c.n) == (c.report.core == c.report.ker), "rho_v = n disagrees with core = ker");
  return o.done();
}

TheoremEntry core_minus_ker_deletion(const Context& c) {
  const VertexSet zone = c.report.core - c.report.ker;
  if (zone.empty()) return not_applicable(kIds[37], "core = ker");
  Outcome o(kIds[37]);
  zone.for_each([&](Vertex v) {
    const Subgraph sub = delete_vertex(c.g, v);
    const int dv = critical_difference(sub.graph);
    VertexSet ker_nbrs = c.ker_nbrs;
    ker_nbrs.erase(v);
    const int ker_diff = static_cast<int>(c.report.ker.size()) - static_cast<int>(ker_nbrs.size());
    o.require(ker_diff == dv, "ker is not critical in G-" + c.g.label(v));
    o.require(dv == c.report.d, "d(G-" + c.g.label(v) + ") != d(G)");
    if (c.ke) o.require(dv == c.report.alpha - c.report.mu, "d(G-" + c.g.label(v) + ") != alpha-mu");
  });
  return o.done();
}

TheoremEntry maximum_critical_closure(const Context& c) {
  if (!c.enumerable || c.max_critical.empty()) return not_applicable(kIds[38], "critical sets not enumerated");
  Outcome o(kIds[38]);
  const VertexSet x = closed_neighborhood(c.g, c.max_critical.front());
  for (const VertexSet& a : c.max_critical) {
    o.require(closed_neighborhood(c.g, a) == x, "N[A] differs across maximum critical sets");
  }
  const Subgraph inside = induced_subgraph(c.g, x);
  const Subgraph outside = delete_vertices(c.g, x);
  o.require(independence_number(inside.graph, c.options.budget) + independence_number(outside.graph, c.options.budget) ==
                c.report.alpha,
            "alpha is not additive over X");
  o.require(is_ke(inside.graph, c.options.budget), "G[X] is not KE");
  o.require(has_only_empty_critical(outside.graph), "G-X has a nonempty critical independent set");
  return o.done();
}

}  // namespace

std::size_t TheoremReport::count(TheoremStatus status) const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [&](const TheoremEntry& e) { return e.status == status; }));
}

const TheoremEntry* TheoremReport::find(std::string_view id) const {
  for (const TheoremEntry& e : entries) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

std::span<const std::string_view> theorem_ids() { return kIds; }

TheoremReport theorem_suite(const Graph& g, const TheoremSuiteOptions& options) {
  const Context c(g, options);
  TheoremReport rep;
  rep.graph6 = encode_graph6(g);
  using Check = TheoremEntry (*)(const Context&);
  static constexpr std::array<Check, kIds.size()> kChecks = {
      critical_difference_bound,
      ke_core_structure,
      critical_set_containment,
      critical_set_lattice,
      ker_equals_core_special_classes,
      ke_characterizations,
      single_core_vertex_leaf,
      induced_non_ke_subgraph,
      critical_decomposition_entry,
      ker_deletion,
      ker_matching_characterization,
      ker_neighborhood_redundancy,
      critical_neighborhood_subgraph,
      critical_extension_matching,
      perfect_matching_between_critical_sets,
      almost_bipartite_bounds,
      core_vs_mu_critical_after_deletion,
      ker_characterization_ke,
      alpha_critical_edge_bound,
      alpha_mu_core_bound,
      vertex_heredity_bounds,
      maximum_matching_layers,
      ker_matchings_extend,
      mu_critical_edge_bound,
      outside_core_edge_deletion,
      no_alpha_critical_near_core,
      ker_edge_matchings,
      edge_heredity,
      edge_count_bound,
      core_equals_ker_edge_heredity,
      bound_tightness_unique_matching,
      single_gap_edge_heredity,
      gap_spectrum,
      vertex_vs_edge_heredity,
      vertex_heredity,
      ke_vertex_heredity_positive,
      full_vertex_heredity_iff_core_equals_ker,
      core_minus_ker_deletion,
      maximum_critical_closure,
  };
  for (Check check : kChecks) rep.entries.push_back(check(c));
  return rep;
}

const char* to_string(TheoremStatus status) {
  switch (status) {
    case TheoremStatus::Pass: return "Pass";
    case TheoremStatus::Fail: return "Fail";
    case TheoremStatus::NotApplicable: return "NotApplicable";
  }
  return "?";
}

}  // namespace kegraph
