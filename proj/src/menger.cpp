#include "vflame/menger.hpp"

#include <algorithm>

#include "flow.hpp"

namespace vflame {

using detail::NetworkSpec;
using detail::SplitFlow;

namespace {

void require_non_root(const RootedDigraph& d, Vertex v) {
  if (v >= d.vertex_count())
    fail(ErrorCode::kUnknownVertex, "vertex index out of range");
  if (v == d.root())
    fail(ErrorCode::kPreconditionViolated, "the target must differ from the root");
}

// Flow network for internally disjoint r->v paths.
SplitFlow root_to_vertex_flow(const RootedDigraph& d, Vertex v) {
  NetworkSpec net;
  net.sources = {d.root()};
  net.sinks = {v};
  net.unlimited.assign(d.vertex_count(), 0);
  net.unlimited[d.root()] = 1;
  net.unlimited[v] = 1;
  return SplitFlow(d, net);
}

}  // namespace

VertexSet AugmentResult::selected() const {
  VertexSet s;
  for (const auto& [path, vertex] : selection) s.insert(vertex);
  return s;
}

MengerResult kappa_and_system(const RootedDigraph& d, Vertex v) {
  require_non_root(d, v);
  const RootedDigraph reduced = without_root_edge(d, v);
  SplitFlow flow = root_to_vertex_flow(reduced, v);
  flow.maximize();
  std::vector<Path> paths = flow.paths();
  if (d.has_edge(d.root(), v)) paths.push_back(Path({d.root(), v}));
  MengerResult result;
  result.kappa = paths.size();
  result.system = PathSystem(std::move(paths), PathMode::kInternallyDisjoint);
  result.near_root_cut = flow.near_source_cut();
  result.near_sink_cut = flow.near_sink_cut();
  return result;
}

std::size_t kappa(const RootedDigraph& d, Vertex v) {
  require_non_root(d, v);
  SplitFlow flow = root_to_vertex_flow(without_root_edge(d, v), v);
  return static_cast<std::size_t>(flow.maximize()) + (d.has_edge(d.root(), v) ? 1 : 0);
}

AugmentResult augmenting_step(const RootedDigraph& d, const VertexSet& x, Vertex v,
                              const PathSystem& infan) {
  if (x.contains(v)) fail(ErrorCode::kPreconditionViolated, "the target lies in X");
  if (!is_infan(infan.paths(), v))
    fail(ErrorCode::kPreconditionViolated, "the given system is not a v-infan");
  for (const Path& p : infan) {
    if (!is_path_in(d, p))
      fail(ErrorCode::kPreconditionViolated, format_path(d, p) + " is not a path of D");
    for (std::size_t i = 0; i < p.size(); ++i)
      if ((i == 0) != x.contains(p.vertices[i]))
        fail(ErrorCode::kPreconditionViolated,
             "the infan must meet X exactly in its first vertices");
  }

  NetworkSpec net;
  net.sources.assign(x.begin(), x.end());
  net.sinks = {v};
  net.unlimited.assign(d.vertex_count(), 0);
  net.unlimited[v] = 1;
  SplitFlow flow(d, net);
  flow.seed(infan.paths());

  AugmentResult result;
  if (flow.augment_once()) {
    result.successful = true;
    result.infan = PathSystem(flow.paths(), PathMode::kInternallyDisjoint);
    return result;
  }
  const VertexSet cut = flow.near_source_cut();
  for (const Path& p : infan) {
    auto it = std::find_if(p.vertices.begin(), p.vertices.end(),
                           [&](Vertex w) { return cut.contains(w); });
    if (it == p.vertices.end())
      fail(ErrorCode::kInternal, "minimum cut misses an infan path");
    result.selection.emplace_back(p, *it);
  }
  return result;
}

ExtremeSeparations extreme_separations(const RootedDigraph& d, Vertex v) {
  require_non_root(d, v);
  SplitFlow flow = root_to_vertex_flow(without_root_edge(d, v), v);
  flow.maximize();
  PathSystem witness(flow.paths(), PathMode::kInternallyDisjoint);
  ExtremeSeparations result;
  result.near_root = {v, flow.near_source_cut(), witness};
  result.near_sink = {v, flow.near_sink_cut(), witness};
  return result;
}

bool separates(const RootedDigraph& d, const VertexSet& s, const VertexSet& targets) {
  if (s.contains(d.root())) return true;
  auto seen = reachable_from(d, d.root(), s);
  return std::none_of(targets.begin(), targets.end(),
                      [&](Vertex t) { return !s.contains(t) && seen[t]; });
}

bool is_em_separation(const RootedDigraph& d, Vertex v, const VertexSet& s) {
  require_non_root(d, v);
  if (s.contains(d.root()) || s.contains(v)) return false;
  for (Vertex w : s)
    if (w >= d.vertex_count()) return false;
  const RootedDigraph reduced = without_root_edge(d, v);
  if (!separates(reduced, s, {v})) return false;
  SplitFlow flow = root_to_vertex_flow(reduced, v);
  return static_cast<std::size_t>(flow.maximize()) == s.size();
}

PathSystem orthogonal_system(const RootedDigraph& d, Vertex v, const VertexSet& s) {
  if (!is_em_separation(d, v, s))
    fail(ErrorCode::kNotAnEMSeparation,
         format_set(d, s) + " is not an Erdos-Menger separation for " + d.name(v));
  SplitFlow flow = root_to_vertex_flow(without_root_edge(d, v), v);
  flow.maximize();
  return PathSystem(flow.paths(), PathMode::kInternallyDisjoint);
}

SeparationOrder classify_separation(const RootedDigraph& d, Vertex v, const VertexSet& s,
                                    const VertexSet& t) {
  for (const VertexSet* set : {&s, &t})
    if (!is_em_separation(d, v, *set))
      fail(ErrorCode::kNotAnEMSeparation,
           format_set(d, *set) + " is not an Erdos-Menger separation for " + d.name(v));
  const RootedDigraph reduced = without_root_edge(d, v);
  const bool s_le_t = separates(reduced, s, t);
  const bool t_le_s = separates(reduced, t, s);
  if (s_le_t && t_le_s) return SeparationOrder::kEqual;
  if (s_le_t) return SeparationOrder::kLess;
  if (t_le_s) return SeparationOrder::kGreater;
  return SeparationOrder::kIncomparable;
}

LinkResult linked_from_root(const RootedDigraph& d, const VertexSet& u) {
  if (u.contains(d.root())) fail(ErrorCode::kRootInSet, "the root cannot be a fan end");
  NetworkSpec net;
  net.sources = {d.root()};
  net.sinks.assign(u.begin(), u.end());
  net.unlimited.assign(d.vertex_count(), 0);
  net.unlimited[d.root()] = 1;
  SplitFlow flow(d, net);
  const auto value = static_cast<std::size_t>(flow.maximize());
  LinkResult result;
  result.deficiency = {u.size(), value, {}};
  if (value == u.size()) {
    result.system = PathSystem(flow.paths(), PathMode::kInternallyDisjoint);
  } else {
    // Every vertex of U sits on the sink side of the cut or in it, so the
    // whole of U is cut off by fewer than |U| vertices.
    result.deficiency.separator = flow.near_source_cut();
    result.violating = u;
  }
  return result;
}

LinkResult link_set_to_vertex(const RootedDigraph& d, const VertexSet& x, Vertex v,
                              const std::vector<char>& allowed) {
  if (x.contains(v)) fail(ErrorCode::kPreconditionViolated, "the target lies in X");
  NetworkSpec net;
  net.sources.assign(x.begin(), x.end());
  net.sinks = {v};
  net.allowed = allowed;
  net.unlimited.assign(d.vertex_count(), 0);
  net.unlimited[v] = 1;
  SplitFlow flow(d, net);
  const auto value = static_cast<std::size_t>(flow.maximize());
  LinkResult result;
  result.deficiency = {x.size(), value, {}};
  if (value == x.size()) {
    result.system = PathSystem(flow.paths(), PathMode::kInternallyDisjoint);
  } else {
    result.deficiency.separator = flow.near_source_cut();
    result.violating = x;
  }
  return result;
}

std::string_view to_string(SeparationOrder order) {
  switch (order) {
    case SeparationOrder::kLess: return "S<=T";
    case SeparationOrder::kGreater: return "T<=S";
    case SeparationOrder::kEqual: return "equal";
    case SeparationOrder::kIncomparable: return "incomparable";
  }
  return "?";
}

}  // namespace vflame
