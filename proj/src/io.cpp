#include "vflame/io.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace vflame::io {

namespace {

[[noreturn]] void parse_error(const std::string& what) { fail(ErrorCode::kParseError, what); }

std::string trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return std::string(s.substr(begin, end - begin + 1));
}

RootedDigraph parse_edgelist(std::string_view text) {
  std::optional<std::string> root;
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    std::istringstream tokens(line);
    std::vector<std::string> parts;
    for (std::string t; tokens >> t;) parts.push_back(t);
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (!root) {
      if (parts.size() != 2 || parts[0] != "root") parse_error(where + "expected 'root <id>'");
      root = parts[1];
      vertices.push_back(parts[1]);
      continue;
    }
    if (parts.size() == 1) {
      vertices.push_back(parts[0]);
    } else if (parts.size() == 2) {
      vertices.push_back(parts[0]);
      vertices.push_back(parts[1]);
      edges.emplace_back(parts[0], parts[1]);
    } else {
      parse_error(where + "expected '<tail> <head>' or a single vertex id");
    }
  }
  if (!root) parse_error("line " + std::to_string(line_no) + ": missing 'root <id>' line");
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return build_digraph(std::move(vertices), edges, *root);
}

std::vector<std::string> names_of(const RootedDigraph& d, const Path& p) {
  std::vector<std::string> out;
  for (Vertex v : p.vertices) out.push_back(d.name(v));
  return out;
}

std::vector<std::string> names_of(const RootedDigraph& d, const VertexSet& s) {
  std::vector<std::string> out;
  for (Vertex v : s) out.push_back(d.name(v));
  return out;
}

Vertex lookup(const RootedDigraph& d, const Json& j) {
  if (!j.is_string()) parse_error("vertex ids must be strings");
  auto v = d.find(j.get<std::string>());
  if (!v) parse_error("unknown vertex '" + j.get<std::string>() + "'");
  return *v;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

RootedDigraph digraph_from_json(const Json& j) {
  const Json& root = field(j, "root");
  if (!root.is_string()) parse_error("'root' must be a string");
  std::vector<std::string> vertices;
  if (j.contains("vertices")) {
    if (!j["vertices"].is_array()) parse_error("'vertices' must be an array");
    for (const Json& v : j["vertices"]) {
      if (!v.is_string()) parse_error("vertex ids must be strings");
      vertices.push_back(v.get<std::string>());
    }
  }
  std::vector<std::pair<std::string, std::string>> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) parse_error("'edges' must be an array");
    for (const Json& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
        parse_error("each edge must be a [tail, head] pair of strings");
      edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
  }
  if (!j.contains("vertices")) {
    vertices.push_back(root.get<std::string>());
    for (const auto& [t, h] : edges) {
      vertices.push_back(t);
      vertices.push_back(h);
    }
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  }
  return build_digraph(std::move(vertices), edges, root.get<std::string>());
}

RootedDigraph parse(std::string_view text, Format format) {
  if (format == Format::kEdgeList) return parse_edgelist(text);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    parse_error("offset " + std::to_string(e.byte) + ": " + e.what());
  }
  return digraph_from_json(j);
}

Format detect_format(std::string_view path, std::string_view text) {
  if (path.ends_with(".json")) return Format::kJson;
  if (path.ends_with(".txt") || path.ends_with(".edges") || path.ends_with(".el"))
    return Format::kEdgeList;
  const auto first = text.find_first_not_of(" \t\r\n");
  return first != std::string_view::npos && text[first] == '{' ? Format::kJson : Format::kEdgeList;
}

Json to_json(const RootedDigraph& d) {
  Json j;
  j["root"] = d.name(d.root());
  j["vertices"] = d.names();
  Json edges = Json::array();
  for (const Edge& e : d.edges()) edges.push_back({d.name(e.tail), d.name(e.head)});
  j["edges"] = std::move(edges);
  return j;
}

std::string serialize(const RootedDigraph& d, Format format) {
  if (format == Format::kJson) return to_json(d).dump(2) + "\n";
  std::ostringstream out;
  out << "root " << d.name(d.root()) << "\n";
  for (Vertex v = 0; v < d.vertex_count(); ++v)
    if (v != d.root() && d.in_degree(v) == 0 && d.out_degree(v) == 0) out << d.name(v) << "\n";
  for (const Edge& e : d.edges()) out << d.name(e.tail) << " " << d.name(e.head) << "\n";
  return out.str();
}

Json to_json(const FlameCertificate& cert) {
  const RootedDigraph& d = cert.base;
  Json j;
  Json edges = Json::array();
  for (const Edge& e : cert.flame.edges()) edges.push_back({d.name(e.tail), d.name(e.head)});
  j["flame_edges"] = std::move(edges);
  Json entries = Json::array();
  for (const CertificateEntry& entry : cert.entries) {
    Json e;
    e["vertex"] = d.name(entry.vertex);
    e["separator"] = names_of(d, entry.separator);
    e["rv"] = entry.rv_present;
    Json paths = Json::array();
    for (const Path& p : entry.paths) paths.push_back(names_of(d, p));
    e["paths"] = std::move(paths);
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j;
}

FlameCertificate certificate_from_json(const Json& j, const RootedDigraph& base) {
  FlameCertificate cert;
  cert.base = base;
  std::vector<Edge> edges;
  const Json& flame_edges = field(j, "flame_edges");
  if (!flame_edges.is_array()) parse_error("'flame_edges' must be an array");
  for (const Json& e : flame_edges) {
    if (!e.is_array() || e.size() != 2) parse_error("each flame edge must be a pair");
    edges.push_back({lookup(base, e[0]), lookup(base, e[1])});
  }
  cert.flame = RootedDigraph::from_indices(base.name_table(), base.root(), std::move(edges));
  const Json& entries = field(j, "entries");
  if (!entries.is_array()) parse_error("'entries' must be an array");
  for (const Json& e : entries) {
    CertificateEntry entry;
    entry.vertex = lookup(base, field(e, "vertex"));
    const Json& separator = field(e, "separator");
    if (!separator.is_array()) parse_error("'separator' must be an array");
    for (const Json& v : separator) entry.separator.insert(lookup(base, v));
    const Json& rv = field(e, "rv");
    if (!rv.is_boolean()) parse_error("'rv' must be a boolean");
    entry.rv_present = rv.get<bool>();
    const Json& paths = field(e, "paths");
    if (!paths.is_array()) parse_error("'paths' must be an array");
    for (const Json& p : paths) {
      if (!p.is_array() || p.empty()) parse_error("each path must be a non-empty array");
      Path path;
      for (const Json& v : p) path.vertices.push_back(lookup(base, v));
      entry.paths.push_back(std::move(path));
    }
    cert.entries.push_back(std::move(entry));
  }
  return cert;
}

Json to_json(const CertificateReport& report, const RootedDigraph& d) {
  Json j;
  j["ok"] = report.ok();
  j["global"] = report.global_reasons;
  Json vertices = Json::array();
  for (const VertexVerdict& v : report.vertices) {
    Json entry;
    entry["vertex"] = d.name(v.vertex);
    entry["ok"] = v.ok();
    entry["reasons"] = v.reasons;
    if (v.evidence) entry["evidence"] = names_of(d, *v.evidence);
    vertices.push_back(std::move(entry));
  }
  j["vertices"] = std::move(vertices);
  return j;
}

std::string to_dot(const RootedDigraph& d, const RootedDigraph* flame, const FlameCertificate* cert) {
  static constexpr std::array<const char*, 10> kPalette = {
      "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
      "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
  std::map<Edge, const char*> color;
  if (cert)
    for (std::size_t i = 0; i < cert->entries.size(); ++i)
      for (const Path& p : cert->entries[i].paths)
        for (const Edge& e : p.edges()) color.emplace(e, kPalette[i % kPalette.size()]);

  std::ostringstream out;
  out << "digraph G {\n";
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    out << "  " << quoted(d.name(v));
    if (v == d.root()) out << " [shape=doublecircle]";
    out << ";\n";
  }
  for (const Edge& e : d.edges()) {
    std::vector<std::string> attrs;
    if (flame && !flame->has_edge(e)) attrs.push_back("style=dashed");
    if (auto it = color.find(e); it != color.end()) {
      attrs.push_back(std::string("color=\"") + it->second + "\"");
      attrs.push_back("penwidth=2");
    }
    out << "  " << quoted(d.name(e.tail)) << " -> " << quoted(d.name(e.head));
    if (!attrs.empty()) {
      out << " [";
      for (std::size_t i = 0; i < attrs.size(); ++i) out << (i ? ", " : "") << attrs[i];
      out << "]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

Json to_json(const RunReport& report) {
  Json j;
  j["input"] = {{"vertices", report.vertices}, {"edges", report.edges}, {"kappa", report.kappa}};
  j["output"] = {{"edges_kept", report.edges_kept},
                 {"edges_deleted", report.edges_deleted},
                 {"kappa_sum", report.kappa_sum}};
  j["certificate"] = report.certificate;
  j["timing_ms"] = report.timing_ms;
  return j;
}

Json counterexample_json(const oracle::LemmaInstance& instance, const oracle::LemmaOutcome& outcome) {
  Json j;
  j["lemma"] = std::string(oracle::to_string(instance.id()));
  j["passed"] = outcome.passed;
  j["digraph"] = to_json(instance.digraph);
  j["note"] = outcome.counterexample;
  return j;
}

}  // namespace vflame::io
