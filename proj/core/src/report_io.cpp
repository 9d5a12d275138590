#include "kegraph/report_io.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

#include "kegraph/graph_io.hpp"
#include "kegraph/matching.hpp"

namespace kegraph {

namespace {

using Json = nlohmann::ordered_json;

Json members(const VertexSet& s) { return Json(s.members()); }

Json optional_or_null(const auto& value) {
  if (value) return Json(*value);
  return Json(nullptr);
}

std::string dump(const Json& j) { return j.dump(-1, ' ', false, Json::error_handler_t::replace); }

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_optional(const std::optional<int>& v) { return v ? std::to_string(*v) : ""; }
std::string csv_optional(const std::optional<bool>& v) { return v ? (*v ? "true" : "false") : ""; }

std::string set_text(const Graph& g, const VertexSet& s) { return format_vertex_set(g, s); }

}  // namespace

std::string ke_report_json(const Graph& g, const KEReport& r, std::size_t index) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["record"] = "ke_report";
  j["index"] = index;
  j["graph6"] = encode_graph6(g);
  j["n"] = r.n;
  j["m"] = r.m;
  j["class"] = to_string(r.ke_class.kind);
  j["alpha"] = r.alpha;
  j["mu"] = r.mu;
  j["d"] = r.d;
  j["core"] = members(r.core);
  j["xi"] = r.xi;
  j["ker"] = members(r.ker);
  j["epsilon"] = r.epsilon;
  j["eta"] = r.eta;
  j["rho_v"] = r.rho_v;
  j["rho_e"] = r.rho_e;
  j["rho_v_formula"] = optional_or_null(r.rho_v_formula);
  j["rho_e_bound"] = optional_or_null(r.rho_e_bound);
  j["rho_v_equality"] = optional_or_null(r.rho_v_equality);
  j["rho_e_lower_bound"] = optional_or_null(r.rho_e_lower_bound);
  j["gap_matching"] = r.gap_matching ? Json(to_string(*r.gap_matching)) : Json(nullptr);
  j["mu_critical_vertices"] = members(r.mu_critical_vertices);
  Json matching = Json::array();
  for (const Edge& e : max_matching(g).edges()) matching.push_back({e.u, e.v});
  j["maximum_matching"] = std::move(matching);
  Json vertices = Json::array();
  for (const VertexVerdict& v : r.vertices) {
    Json item;
    item["vertex"] = v.vertex;
    if (!g.labels().empty()) item["label"] = g.label(v.vertex);
    item["zone"] = to_string(v.zone);
    item["deletion_class"] = to_string(v.deletion_class.kind);
    vertices.push_back(std::move(item));
  }
  j["vertices"] = std::move(vertices);
  Json edges = Json::array();
  for (const EdgeVerdict& e : r.edges) {
    Json item;
    item["u"] = e.edge.u;
    item["v"] = e.edge.v;
    item["location"] = to_string(e.location);
    item["mu_critical"] = e.mu_critical;
    item["alpha_critical"] = e.alpha_critical;
    item["deletion_is_ke"] = e.deletion_is_ke;
    edges.push_back(std::move(item));
  }
  j["edges"] = std::move(edges);
  return dump(j);
}

std::string theorem_report_json(const TheoremReport& r, std::size_t index) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["record"] = "theorem_report";
  j["index"] = index;
  j["graph6"] = r.graph6;
  j["pass"] = r.count(TheoremStatus::Pass);
  j["fail"] = r.count(TheoremStatus::Fail);
  j["not_applicable"] = r.count(TheoremStatus::NotApplicable);
  Json entries = Json::array();
  for (const TheoremEntry& e : r.entries) {
    Json item;
    item["id"] = e.id;
    item["status"] = to_string(e.status);
    item["sampled"] = e.sampled;
    item["detail"] = e.detail;
    entries.push_back(std::move(item));
  }
  j["entries"] = std::move(entries);
  return dump(j);
}

std::string error_json(std::size_t index, std::string_view error, std::string_view message) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["record"] = "error";
  j["index"] = index;
  j["error"] = error;
  j["message"] = message;
  return dump(j);
}

std::string gallery_cell_json(const GalleryCell& c) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["record"] = "gallery_cell";
  j["fixture"] = c.fixture;
  j["kind"] = to_string(c.kind);
  j["key"] = c.key;
  j["argument"] = c.argument;
  j["expected"] = c.expected;
  j["computed"] = c.computed;
  j["match"] = c.match;
  return dump(j);
}

std::string ke_report_csv_header() {
  return "index,graph6,n,m,class,alpha,mu,d,xi,epsilon,eta,rho_v,rho_e,rho_v_formula,rho_e_bound,"
         "rho_v_equality,rho_e_lower_bound,gap_matching";
}

std::string ke_report_csv_row(const Graph& g, const KEReport& r, std::size_t index) {
  std::ostringstream out;
  out << index << ',' << csv_field(encode_graph6(g)) << ',' << r.n << ',' << r.m << ','
      << to_string(r.ke_class.kind) << ',' << r.alpha << ',' << r.mu << ',' << r.d << ',' << r.xi << ','
      << r.epsilon << ',' << r.eta << ',' << r.rho_v << ',' << r.rho_e << ',' << csv_optional(r.rho_v_formula)
      << ',' << csv_optional(r.rho_e_bound) << ',' << csv_optional(r.rho_v_equality) << ','
      << csv_optional(r.rho_e_lower_bound) << ',' << (r.gap_matching ? to_string(*r.gap_matching) : "");
  return out.str();
}

std::string theorem_report_csv_header() { return "index,graph6,id,status,sampled,detail"; }

std::string theorem_report_csv_rows(const TheoremReport& r, std::size_t index) {
  std::string out;
  for (const TheoremEntry& e : r.entries) {
    if (!out.empty()) out += '\n';
    out += std::to_string(index) + ',' + csv_field(r.graph6) + ',' + e.id + ',' + to_string(e.status) + ',' +
           (e.sampled ? "true" : "false") + ',' + csv_field(e.detail);
  }
  return out;
}

std::string ke_report_text(const Graph& g, const KEReport& r, std::size_t index) {
  std::ostringstream out;
  out << "graph " << index << "  " << encode_graph6(g) << "\n";
  out << "  n=" << r.n << " m=" << r.m << " alpha=" << r.alpha << " mu=" << r.mu << " d=" << r.d
      << "  class " << to_string(r.ke_class.kind) << "\n";
  out << "  core " << set_text(g, r.core) << " (xi=" << r.xi << ")  ker " << set_text(g, r.ker)
      << " (epsilon=" << r.epsilon << ")  eta=" << r.eta << "\n";
  out << "  rho_v=" << r.rho_v << " rho_e=" << r.rho_e;
  if (r.rho_v_formula) {
    out << "  n-xi+epsilon=" << *r.rho_v_formula << (*r.rho_v_equality ? " (equal)" : " (DIFFERS)")
        << "  m-xi+epsilon=" << *r.rho_e_bound << (*r.rho_e_lower_bound ? " (bound holds)" : " (BOUND FAILS)")
        << "  gap matching " << to_string(*r.gap_matching);
  }
  out << "\n  mu-critical vertices " << set_text(g, r.mu_critical_vertices) << "\n";
  return out.str();
}

}  // namespace kegraph
