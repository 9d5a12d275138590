#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <map>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

#include "input.hpp"
#include "kegraph/census.hpp"
#include "kegraph/gallery.hpp"
#include "kegraph/generators.hpp"
#include "kegraph/graph_io.hpp"
#include "kegraph/ke_analysis.hpp"
#include "kegraph/report_io.hpp"
#include "kegraph/theorem_suite.hpp"
#include "ordered_map.hpp"

namespace kegraph::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t kWindow = 512;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int parse_int(const std::string& s, const char* what) {
  int v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size()) throw UsageError(std::string(what) + ": not an integer: '" + s + "'");
  return v;
}

double parse_probability(const std::string& s) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || !(v >= 0.0 && v <= 1.0)) throw UsageError("edge probability must be in [0,1]: '" + s + "'");
  return v;
}

struct Job {
  std::size_t index = 0;
  std::string name;  // fixture name, or empty
  Graph graph;
};

// Feeds jobs through ordered_map in bounded windows; works for both pull
// (file) and push (census generator) sources.
template <typename Out>
class Pipeline {
 public:
  Pipeline(int jobs, std::function<Out(const Job&)> work, std::function<bool(Out&&)> emit)
      : jobs_(jobs), work_(std::move(work)), emit_(std::move(emit)) {}

  // Returns false once emit has asked to stop.
  bool push(Job job) {
    if (stopped_) return false;
    pending_.push_back(std::move(job));
    if (pending_.size() >= kWindow * static_cast<std::size_t>(std::max(jobs_, 1))) flush();
    return !stopped_;
  }

  void finish() { flush(); }

 private:
  void flush() {
    if (stopped_ || pending_.empty()) {
      pending_.clear();
      return;
    }
    std::size_t at = 0;
    ordered_map<Job, Out>(
        jobs_, pending_.size(),
        [&]() -> std::optional<Job> {
          if (at == pending_.size()) return std::nullopt;
          return std::move(pending_[at++]);
        },
        work_,
        [&](Out&& o) {
          if (!emit_(std::move(o))) stopped_ = true;
          return !stopped_;
        });
    pending_.clear();
  }

  int jobs_;
  std::function<Out(const Job&)> work_;
  std::function<bool(Out&&)> emit_;
  std::vector<Job> pending_;
  bool stopped_ = false;
};

std::string csv_error_row(const Graph& g, std::size_t index, const std::string& error) {
  // index, graph6, n, m, class, then the remaining 13 columns empty
  return std::to_string(index) + ',' + encode_graph6(g) + ',' + std::to_string(g.n()) + ',' +
         std::to_string(g.m()) + ',' + error + std::string(13, ',');
}

// ---------------------------------------------------------------- analyze

struct AnalyzeOut {
  std::string text;
  bool budget_exhausted = false;
};

}  // namespace

int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    GraphReader reader(config.input);
    if (config.format == OutputFormat::Csv) out << ke_report_csv_header() << '\n';
    int status = kExitOk;
    const auto work = [&](const InputGraph& in) {
      AnalyzeOut o;
      const Graph& g = in.graph;
      std::string error;
      std::string message;
      try {
        const KEReport r = analyze(g, config.budget);
        switch (config.format) {
          case OutputFormat::Text: o.text = ke_report_text(g, r, in.index); break;
          case OutputFormat::Json: o.text = ke_report_json(g, r, in.index) + '\n'; break;
          case OutputFormat::Csv: o.text = ke_report_csv_row(g, r, in.index) + '\n'; break;
        }
        return o;
      } catch (const BudgetExceeded& e) {
        error = "budget_exceeded";
        message = e.what();
        o.budget_exhausted = true;
      } catch (const DomainError& e) {
        error = "unsupported";
        message = e.what();
      }
      switch (config.format) {
        case OutputFormat::Text:
          o.text = "graph " + std::to_string(in.index) + "  " + encode_graph6(g) + "\n  error " + error + ": " +
                   message + "\n";
          break;
        case OutputFormat::Json: o.text = error_json(in.index, error, message) + '\n'; break;
        case OutputFormat::Csv: o.text = csv_error_row(g, in.index, error) + '\n'; break;
      }
      return o;
    };
    const auto emit = [&](AnalyzeOut&& o) {
      out << o.text;
      if (o.budget_exhausted && config.strict) {
        status = kExitBudget;
        return false;
      }
      return true;
    };
    ordered_map<InputGraph, AnalyzeOut>(
        config.jobs, kWindow * static_cast<std::size_t>(std::max(config.jobs, 1)), [&] { return reader.next(); }, work,
        emit);
    out.flush();
    return status;
  } catch (const ParseError& e) {
    out.flush();
    err << "kegraph: " << config.input << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    err << "kegraph: " << e.what() << '\n';
    return kExitUsage;
  }
}

// ----------------------------------------------------------------- verify

namespace {

struct VerifyOut {
  std::size_t index = 0;
  std::string name;
  std::string graph6;
  std::optional<TheoremReport> report;
  std::string error;
  bool candidate = false;  // non-KE, yet both vertex and edge formulas hold
};

struct Tally {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t not_applicable = 0;
  std::size_t sampled = 0;
  std::string first_failure;  // graph6
  std::string first_failure_name;
  std::string first_detail;
};

std::string source_text(const VerifySource& s, const RunConfig& c) {
  switch (s.kind) {
    case VerifySource::Kind::Gallery: return "gallery";
    case VerifySource::Kind::CensusFile: return "census file " + s.path;
    case VerifySource::Kind::CensusOrder: return "census n<=" + std::to_string(s.max_order);
    case VerifySource::Kind::RandomKE: {
      std::ostringstream o;
      o << "random ke s=" << s.s << " a=" << s.a << " p=" << s.p << " count=" << c.count << " seed=" << c.seed;
      return o.str();
    }
  }
  return "?";
}

}  // namespace

int cmd_verify(const RunConfig& config, const VerifySource& source, std::ostream& out, std::ostream& err) {
  const bool census = source.kind == VerifySource::Kind::CensusFile || source.kind == VerifySource::Kind::CensusOrder;
  TheoremSuiteOptions options;
  options.budget = config.budget;
  options.seed = config.seed;

  std::vector<std::string_view> ids(theorem_ids().begin(), theorem_ids().end());
  std::map<std::string_view, Tally> tallies;
  std::size_t graphs = 0;
  std::size_t errors = 0;
  std::size_t candidates = 0;
  std::vector<std::string> candidate_examples;
  bool budget_stop = false;

  const auto work = [&](const Job& job) {
    VerifyOut o;
    o.index = job.index;
    o.name = job.name;
    o.graph6 = encode_graph6(job.graph);
    try {
      o.report = theorem_suite(job.graph, options);
      if (census) {
        const KEReport r = analyze(job.graph, config.budget);
        o.candidate = !r.ke_class.is_ke() && r.rho_v == r.n - r.xi + r.epsilon && r.rho_e >= r.m - r.xi + r.epsilon;
      }
    } catch (const BudgetExceeded& e) {
      o.error = e.what();
    } catch (const DomainError& e) {
      o.error = e.what();
    }
    return o;
  };
  const auto emit = [&](VerifyOut&& o) {
    ++graphs;
    if (!o.report) {
      ++errors;
      err << "kegraph: graph " << o.index << " (" << o.graph6 << "): " << o.error << '\n';
      if (config.strict) {
        budget_stop = true;
        return false;
      }
      return true;
    }
    if (o.candidate) {
      ++candidates;
      if (candidate_examples.size() < 20) candidate_examples.push_back(o.graph6);
    }
    for (const TheoremEntry& e : o.report->entries) {
      Tally& t = tallies[*std::find(ids.begin(), ids.end(), e.id)];
      switch (e.status) {
        case TheoremStatus::Pass: ++t.pass; break;
        case TheoremStatus::NotApplicable: ++t.not_applicable; break;
        case TheoremStatus::Fail:
          if (t.fail++ == 0) {
            t.first_failure = o.graph6;
            t.first_failure_name = o.name;
            t.first_detail = e.detail;
          }
          break;
      }
      if (e.sampled) ++t.sampled;
    }
    return true;
  };

  try {
    Pipeline<VerifyOut> pipeline(config.jobs, work, emit);
    std::size_t index = 0;
    switch (source.kind) {
      case VerifySource::Kind::Gallery:
        for (const GalleryFixture& f : figure_gallery()) pipeline.push({index++, f.name, f.graph});
        break;
      case VerifySource::Kind::CensusFile: {
        GraphReader reader(source.path);
        while (auto g = reader.next()) {
          if (!pipeline.push({index++, "", std::move(g->graph)})) break;
        }
        break;
      }
      case VerifySource::Kind::CensusOrder:
        if (source.max_order < 0 || source.max_order > kCensusMaxOrder) {
          throw UsageError("census order must lie in [0, " + std::to_string(kCensusMaxOrder) + "]");
        }
        for (int n = 0; n <= source.max_order; ++n) {
          for_each_census_graph(n, [&](const Graph& g) { pipeline.push({index++, "", g}); });
        }
        break;
      case VerifySource::Kind::RandomKE:
        for (std::uint64_t i = 0; i < config.count; ++i) {
          if (!pipeline.push({index++, "", gen_random_ke(source.s, source.a, source.p, config.seed + i)})) break;
        }
        break;
    }
    pipeline.finish();
  } catch (const ParseError& e) {
    err << "kegraph: " << source.path << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "kegraph: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "kegraph: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    err << "kegraph: " << e.what() << '\n';
    return kExitUsage;
  }

  std::size_t failing = 0;
  for (const auto& [id, t] : tallies) failing += t.fail > 0;

  if (config.format == OutputFormat::Json) {
    Json j;
    j["schema_version"] = kReportSchemaVersion;
    j["record"] = "verify_summary";
    j["source"] = source_text(source, config);
    j["graphs"] = graphs;
    j["errors"] = errors;
    Json entries = Json::array();
    for (std::string_view id : ids) {
      const Tally& t = tallies[id];
      Json item;
      item["id"] = id;
      item["pass"] = t.pass;
      item["fail"] = t.fail;
      item["not_applicable"] = t.not_applicable;
      item["sampled"] = t.sampled;
      item["first_failure"] = t.fail ? Json(t.first_failure) : Json(nullptr);
      item["first_failure_detail"] = t.fail ? Json(t.first_detail) : Json(nullptr);
      entries.push_back(std::move(item));
    }
    j["entries"] = std::move(entries);
    if (census) {
      j["non_ke_formula_candidates"] = candidates;
      j["candidate_examples"] = candidate_examples;
    }
    j["ok"] = failing == 0;
    out << j.dump() << '\n';
  } else if (config.format == OutputFormat::Csv) {
    out << "id,pass,fail,not_applicable,sampled,first_failure\n";
    for (std::string_view id : ids) {
      const Tally& t = tallies[id];
      out << id << ',' << t.pass << ',' << t.fail << ',' << t.not_applicable << ',' << t.sampled << ','
          << t.first_failure << '\n';
    }
  } else {
    out << "source: " << source_text(source, config) << "\n";
    out << "graphs: " << graphs << "  errors: " << errors << "\n\n";
    out << std::left << std::setw(44) << "entry" << std::right << std::setw(9) << "pass" << std::setw(7) << "fail"
        << std::setw(9) << "n/a" << std::setw(9) << "sampled" << "\n";
    for (std::string_view id : ids) {
      const Tally& t = tallies[id];
      out << std::left << std::setw(44) << id << std::right << std::setw(9) << t.pass << std::setw(7) << t.fail
          << std::setw(9) << t.not_applicable << std::setw(9) << t.sampled << "\n";
    }
    for (std::string_view id : ids) {
      const Tally& t = tallies[id];
      if (t.fail == 0) continue;
      out << "\nFAIL " << id << " on " << (t.first_failure_name.empty() ? "" : t.first_failure_name + " ")
          << t.first_failure << ": " << t.first_detail;
    }
    if (failing) out << "\n";
    if (census) {
      out << "\nnon-KE graphs meeting rho_v = n-xi+epsilon and rho_e >= m-xi+epsilon: " << candidates << "\n";
      for (const std::string& g6 : candidate_examples) out << "  " << g6 << "\n";
    }
    out << "\n" << (failing ? "FAIL" : "PASS") << "\n";
  }
  out.flush();
  if (budget_stop) return kExitBudget;
  return failing ? kExitVerificationFailed : kExitOk;
}

// -------------------------------------------------------------------- gen

int cmd_gen(const RunConfig& config, const std::string& family, const std::vector<std::string>& params,
            std::ostream& out, std::ostream& err) {
  try {
    const auto need = [&](std::size_t k, const char* usage) {
      if (params.size() != k) throw UsageError(std::string("usage: gen ") + usage);
    };
    if (family.rfind("gallery:", 0) == 0) {
      need(0, "gallery:<name>");
      out << encode_graph6(gallery_fixture(family.substr(8)).graph) << '\n';
    } else if (family == "cycle") {
      need(1, "cycle <k>");
      out << encode_graph6(cycle(parse_int(params[0], "k"))) << '\n';
    } else if (family == "path") {
      need(1, "path <k>");
      out << encode_graph6(path(parse_int(params[0], "k"))) << '\n';
    } else if (family == "complete") {
      need(1, "complete <k>");
      out << encode_graph6(complete(parse_int(params[0], "k"))) << '\n';
    } else if (family == "hk") {
      need(1, "hk <k>");
      out << encode_graph6(gen_hk(parse_int(params[0], "k"))) << '\n';
    } else if (family == "gpq") {
      need(2, "gpq <p> <q>");
      out << encode_graph6(gen_gpq(parse_int(params[0], "p"), parse_int(params[1], "q"))) << '\n';
    } else if (family == "ke") {
      need(3, "ke <s> <a> <p> [--count N --seed S]");
      const int s = parse_int(params[0], "s");
      const int a = parse_int(params[1], "a");
      const double p = parse_probability(params[2]);
      for (std::uint64_t i = 0; i < config.count; ++i) out << encode_graph6(gen_random_ke(s, a, p, config.seed + i)) << '\n';
    } else if (family == "census") {
      need(1, "census <n>");
      const int n = parse_int(params[0], "n");
      for_each_census_graph(n, [&](const Graph& g) { out << encode_graph6(g) << '\n'; });
    } else {
      throw UsageError("unknown family '" + family + "' (cycle, path, complete, ke, gpq, hk, census, gallery:<name>)");
    }
  } catch (const UsageError& e) {
    err << "kegraph: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "kegraph: " << e.what() << '\n';
    return kExitUsage;
  }
  out.flush();
  return kExitOk;
}

// ---------------------------------------------------------------- gallery

namespace {

const char* cell_status(const GalleryCell& c) {
  if (c.kind == ExpectationKind::Discrepancy) return c.match ? "flag-resolved" : "flagged";
  return c.match ? "match" : "MISMATCH";
}

}  // namespace

int cmd_gallery(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<GalleryCell> cells;
  try {
    for (const GalleryFixture& f : figure_gallery()) {
      auto part = evaluate_fixture(f, config.budget);
      cells.insert(cells.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
  } catch (const std::exception& e) {
    err << "kegraph: " << e.what() << '\n';
    return kExitUsage;
  }
  const auto fatal = static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [](const auto& c) { return c.fatal(); }));
  const auto flagged = static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [](const GalleryCell& c) {
    return c.kind == ExpectationKind::Discrepancy && !c.match;
  }));

  if (config.format == OutputFormat::Json) {
    for (const GalleryCell& c : cells) out << gallery_cell_json(c) << '\n';
    Json j;
    j["schema_version"] = kReportSchemaVersion;
    j["record"] = "gallery_summary";
    j["fixtures"] = figure_gallery().size();
    j["checks"] = cells.size();
    j["mismatches"] = fatal;
    j["flagged_discrepancies"] = flagged;
    out << j.dump() << '\n';
  } else if (config.format == OutputFormat::Csv) {
    out << "fixture,kind,key,argument,expected,computed,status\n";
    for (const GalleryCell& c : cells) {
      out << c.fixture << ',' << to_string(c.kind) << ',' << c.key << ',' << '"' << c.argument << '"' << ',' << '"'
          << c.expected << '"' << ',' << '"' << c.computed << '"' << ',' << cell_status(c) << '\n';
    }
  } else {
    std::size_t w_fixture = 7;
    std::size_t w_check = 5;
    std::size_t w_expected = 8;
    std::size_t w_computed = 8;
    const auto check = [](const GalleryCell& c) { return c.argument.empty() ? c.key : c.key + " " + c.argument; };
    for (const GalleryCell& c : cells) {
      w_fixture = std::max(w_fixture, c.fixture.size());
      w_check = std::max(w_check, check(c).size());
      w_expected = std::max(w_expected, c.expected.size());
      w_computed = std::max(w_computed, c.computed.size());
    }
    const auto row = [&](const std::string& a, const std::string& b, const std::string& k, const std::string& e,
                         const std::string& v, const std::string& s) {
      out << std::left << std::setw(static_cast<int>(w_fixture + 2)) << a << std::setw(13) << b
          << std::setw(static_cast<int>(w_check + 2)) << k << std::setw(static_cast<int>(w_expected + 2)) << e
          << std::setw(static_cast<int>(w_computed + 2)) << v << s << "\n";
    };
    row("fixture", "source", "check", "expected", "computed", "status");
    for (const GalleryCell& c : cells) row(c.fixture, to_string(c.kind), check(c), c.expected, c.computed, cell_status(c));
    bool first = true;
    for (const GalleryFixture& f : figure_gallery()) {
      for (const std::string& note : f.notes) {
        if (first) out << "\n";
        first = false;
        out << "note " << f.name << ": " << note << "\n";
      }
    }
    out << "\n" << figure_gallery().size() << " fixtures, " << cells.size() << " checks, " << fatal << " mismatches, "
        << flagged << " flagged discrepancies\n";
  }
  out.flush();
  return fatal ? kExitVerificationFailed : kExitOk;
}

}  // namespace kegraph::cli
