#include "vflame/flame.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "vflame/bubbles.hpp"
#include "vflame/linkage.hpp"

namespace vflame {

namespace {

void require_non_root(const RootedDigraph& d, Vertex v) {
  if (v >= d.vertex_count()) fail(ErrorCode::kUnknownVertex, "vertex index out of range");
  if (v == d.root()) fail(ErrorCode::kPreconditionViolated, "the vertex must differ from the root");
}

std::vector<std::size_t> kappa_vector(const RootedDigraph& d) {
  std::vector<std::size_t> k(d.vertex_count(), 0);
  for (Vertex v = 0; v < d.vertex_count(); ++v)
    if (v != d.root()) k[v] = kappa(d, v);
  return k;
}

// Shortest r->v path of D avoiding `blocked`, optionally without the edge rv.
std::optional<Path> uncut_path(const RootedDigraph& d, Vertex v, const VertexSet& blocked,
                               bool skip_root_edge) {
  const Vertex r = d.root();
  std::vector<std::optional<Vertex>> parent(d.vertex_count());
  std::vector<char> seen(d.vertex_count(), 0);
  std::deque<Vertex> queue{r};
  seen[r] = 1;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : d.out_neighbors(u)) {
      if (seen[w] || blocked.contains(w)) continue;
      if (skip_root_edge && u == r && w == v) continue;
      seen[w] = 1;
      parent[w] = u;
      queue.push_back(w);
    }
  }
  if (!seen[v]) return std::nullopt;
  std::vector<Vertex> rev{v};
  while (rev.back() != r) rev.push_back(*parent[rev.back()]);
  return Path(std::vector<Vertex>(rev.rbegin(), rev.rend()));
}

}  // namespace

GMembership g_membership(const RootedDigraph& d, Vertex v, const EdgeSet& i) {
  require_non_root(d, v);
  for (const Edge& e : i)
    if (e.head != v || !d.has_edge(e))
      fail(ErrorCode::kEdgeNotIngoing, format_edge(d, e) + " is not an in-edge of " + d.name(v));
  const Edge rv{d.root(), v};
  EdgeSet rest = i;
  rest.erase(rv);
  const RootedDigraph restricted = without_root_edge(restrict_in(d, v, rest), v);
  MengerResult m = kappa_and_system(restricted, v);
  GMembership result;
  result.deficiency = {rest.size(), m.kappa, {}};
  if (m.kappa != rest.size()) {
    result.deficiency.separator = m.near_root_cut;
    return result;
  }
  std::vector<Path> paths = m.system.paths();
  if (i.contains(rv)) paths.push_back(Path({d.root(), v}));
  result.witness = PathSystem(std::move(paths), PathMode::kInternallyDisjoint);
  return result;
}

const FlameVertexReport& FlameReport::at(Vertex v) const {
  auto it = std::find_if(vertices.begin(), vertices.end(),
                         [&](const FlameVertexReport& r) { return r.vertex == v; });
  if (it == vertices.end()) fail(ErrorCode::kUnknownVertex, "no report for the requested vertex");
  return *it;
}

FlameReport flame_check(const RootedDigraph& d) {
  FlameReport report;
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    if (v == d.root()) continue;
    FlameVertexReport entry{v, g_membership(d, v, d.in_edges(v))};
    if (!entry.membership.member()) report.flame = false;
    report.vertices.push_back(std::move(entry));
  }
  report.quasi_flame = report.flame;
  return report;
}

LargenessReport largeness_check(const RootedDigraph& d, const RootedDigraph& l) {
  if (!l.is_subdigraph_of(d))
    fail(ErrorCode::kNotSpanning, "L is not a spanning subdigraph of D");
  LargenessReport report;
  report.root_edges_kept = true;
  for (Vertex w : d.out_neighbors(d.root()))
    if (!l.has_edge(d.root(), w)) report.root_edges_kept = false;
  for (Vertex v = 0; v < d.vertex_count(); ++v)
    if (v != d.root() && kappa(l, v) < kappa(d, v)) report.kappa_drops.push_back(v);
  report.large = report.root_edges_kept && report.kappa_drops.empty();

  std::unordered_map<Vertex, VertexSet> bubble_of;
  for (const Edge& e : d.edges()) {
    if (l.has_edge(e)) continue;
    auto it = bubble_of.find(e.head);
    if (it == bubble_of.end()) it = bubble_of.emplace(e.head, largest_bubble(l, e.head).set).first;
    if (!it->second.contains(e.tail)) report.bubble_violations.push_back(e);
  }
  report.bubble_criterion = report.bubble_violations.empty();
  if (report.large != report.bubble_criterion)
    fail(ErrorCode::kInternal, "connectivity and bubble criteria for largeness disagree");
  return report;
}

RootedDigraph lovasz_reduce(const RootedDigraph& d) {
  RootedDigraph l = d;
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    if (v == d.root()) continue;
    const MengerResult m = kappa_and_system(l, v);
    l = restrict_in(l, v, m.system.last_edges());
  }
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    if (v == d.root()) continue;
    const std::size_t k = kappa(d, v);
    if (l.in_degree(v) != k || kappa(l, v) != k)
      fail(ErrorCode::kInternal, "reduction lost the degree identity at " + d.name(v));
  }
  return l;
}

RootedDigraph lovasz_reduce_greedy(const RootedDigraph& d) {
  const std::vector<std::size_t> target = kappa_vector(d);
  RootedDigraph l = d;
  while (true) {
    bool deleted = false;
    bool surplus = false;
    for (Vertex v = 0; v < l.vertex_count() && !deleted; ++v) {
      if (v == l.root() || l.in_degree(v) <= target[v]) continue;
      surplus = true;
      for (const Edge& e : l.in_edges(v)) {
        if (e.tail == l.root()) continue;
        RootedDigraph candidate = delete_edges(l, {e});
        if (kappa_vector(candidate) == target) {
          l = std::move(candidate);
          deleted = true;
          break;
        }
      }
    }
    if (deleted) continue;
    if (surplus) fail(ErrorCode::kInternal, "surplus in-degree without a deletable edge");
    return l;
  }
}

std::map<Vertex, VertexSet> smallest_separation_map(const RootedDigraph& d) {
  std::map<Vertex, VertexSet> map;
  for (Vertex v = 0; v < d.vertex_count(); ++v)
    if (v != d.root()) map[v] = extreme_separations(d, v).near_root.set;
  return map;
}

NoCollapseResult no_collapse_step(const RootedDigraph& l, Vertex v) {
  require_non_root(l, v);
  // L is trivially large with respect to itself, so only v is checked.
  const ExtremeSeparations ext = extreme_separations(l, v);
  NoCollapseResult result{restrict_in(l, v, ext.near_root.witness->last_edges()),
                          *ext.near_root.witness};
  if (!is_orthogonal_system(l, v, ext.near_root.set, result.witness))
    fail(ErrorCode::kInternal, "witness is not orthogonal to the smallest separation");
  if (!largeness_check(l, result.reduced).large)
    fail(ErrorCode::kInternal, "restriction at " + l.name(v) + " is not large");
  if (smallest_separation_map(l) != smallest_separation_map(result.reduced))
    fail(ErrorCode::kInternal, "restriction at " + l.name(v) + " moved a smallest separation");
  return result;
}

OmegaResult omega_construct(const RootedDigraph& d, const std::vector<Vertex>& order) {
  std::vector<Vertex> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Vertex> expected;
  for (Vertex v = 0; v < d.vertex_count(); ++v)
    if (v != d.root()) expected.push_back(v);
  if (sorted != expected)
    fail(ErrorCode::kPreconditionViolated, "the order must list every non-root vertex once");
  const FlameReport flame = flame_check(d);
  if (!flame.flame) fail(ErrorCode::kNotAFlame, "omega construction needs a vertex-flame");

  OmegaRecursionState state;
  state.current = d;
  state.layers.push_back(d);
  for (Vertex v : order) {
    const RootedDigraph& l = state.current;
    OmegaStep step;
    step.vertex = v;
    step.separator = extreme_separations(l, v).near_root.set;
    step.protected_edges = state.ledger[v];
    GMembership g = g_membership(l, v, step.protected_edges);
    if (!g.member())
      fail(ErrorCode::kLedgerNotInG,
           "protected edges at " + l.name(v) + " are not realisable in the current digraph");
    step.witness = cover_extension(l, v, step.separator, step.protected_edges, g.witness);

    RootedDigraph next = restrict_in(l, v, step.witness.last_edges());
    for (const Path& p : step.witness)
      for (const Edge& e : p.edges()) state.ledger[e.head].insert(e);
    for (const auto& [u, edges] : state.ledger)
      for (const Edge& e : edges)
        if (!next.has_edge(e))
          fail(ErrorCode::kInternal, "a protected edge at " + l.name(u) + " was dropped");
    state.committed.push_back(std::move(step));
    state.current = std::move(next);
    state.layers.push_back(state.current);
    ++state.step;
  }
  return {state.current, std::move(state)};
}

FlameCertificate certify(const RootedDigraph& d, const RootedDigraph& l) {
  if (!largeness_check(d, l).large) fail(ErrorCode::kNotLarge, "L is not large in D");
  const FlameReport flame = flame_check(l);
  if (!flame.flame) fail(ErrorCode::kNotAFlame, "L is not a vertex-flame");
  FlameCertificate cert{d, l, {}};
  for (Vertex v = 0; v < l.vertex_count(); ++v) {
    if (v == l.root()) continue;
    CertificateEntry entry;
    entry.vertex = v;
    entry.separator = extreme_separations(l, v).near_root.set;
    entry.paths = cover_extension(l, v, entry.separator, l.in_edges(v), flame.at(v).membership.witness)
                      .paths();
    entry.rv_present = l.has_edge(l.root(), v);
    if (!is_em_separation(d, v, entry.separator))
      fail(ErrorCode::kInternal, "separator at " + d.name(v) + " does not separate in D");
    cert.entries.push_back(std::move(entry));
  }
  return cert;
}

bool CertificateReport::ok() const {
  return global_reasons.empty() &&
         std::all_of(vertices.begin(), vertices.end(), [](const VertexVerdict& v) { return v.ok(); });
}

const VertexVerdict* CertificateReport::find(Vertex v) const {
  for (const VertexVerdict& verdict : vertices)
    if (verdict.vertex == v) return &verdict;
  return nullptr;
}

CertificateReport verify_certificate(const FlameCertificate& cert) {
  const RootedDigraph& d = cert.base;
  const RootedDigraph& l = cert.flame;
  const Vertex r = d.root();
  CertificateReport report;
  if (!l.is_subdigraph_of(d)) report.global_reasons.push_back("flame is not a spanning subdigraph");

  std::map<Vertex, const CertificateEntry*> by_vertex;
  for (const CertificateEntry& entry : cert.entries) {
    if (entry.vertex >= d.vertex_count() || entry.vertex == r) {
      report.global_reasons.push_back("entry for a root or unknown vertex");
      continue;
    }
    if (!by_vertex.emplace(entry.vertex, &entry).second)
      report.global_reasons.push_back("duplicate entry for " + d.name(entry.vertex));
  }

  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    if (v == r) continue;
    VertexVerdict verdict;
    verdict.vertex = v;
    auto add = [&](const std::string& reason, const std::optional<Path>& evidence) {
      verdict.reasons.push_back(reason);
      if (!verdict.evidence && evidence) verdict.evidence = evidence;
    };
    auto it = by_vertex.find(v);
    if (it == by_vertex.end()) {
      add("missing entry", std::nullopt);
      report.vertices.push_back(std::move(verdict));
      continue;
    }
    const CertificateEntry& entry = *it->second;
    const VertexSet& s = entry.separator;

    for (const Path& p : entry.paths)
      if (p.size() < 3 || p.first() != r || p.last() != v || !is_path_in(l, p)) {
        add("path validity", p);
        break;
      }
    if (!is_internally_disjoint(entry.paths)) add("internal disjointness", std::nullopt);

    EdgeSet last;
    for (const Path& p : entry.paths)
      if (p.size() >= 2) last.insert(p.last_edge());
    EdgeSet expected = l.in_edges(v);
    expected.erase(Edge{r, v});
    if (last != expected || last.size() != entry.paths.size()) add("E+ coverage", std::nullopt);

    VertexSet hit;
    bool bijective = entry.paths.size() == s.size();
    for (const Path& p : entry.paths) {
      std::size_t count = 0;
      for (std::size_t k = 1; k + 1 < p.size(); ++k)
        if (s.contains(p.vertices[k])) {
          ++count;
          hit.insert(p.vertices[k]);
        }
      if (count != 1) {
        bijective = false;
        if (!verdict.evidence) verdict.evidence = p;
      }
    }
    if (!bijective || hit != s) add("orthogonality", std::nullopt);

    if (entry.rv_present != l.has_edge(r, v)) add("rv flag", std::nullopt);

    if (s.contains(r) || s.contains(v)) {
      add("separation", std::nullopt);
    } else if (auto uncut = uncut_path(d, v, s, entry.rv_present)) {
      add("separation", uncut);
      verdict.evidence = uncut;
    }
    report.vertices.push_back(std::move(verdict));
  }
  return report;
}

}  // namespace vflame
