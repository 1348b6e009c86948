#include "vflame/digraph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace vflame {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicateVertex: return "DuplicateVertex";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kLoopEdge: return "LoopEdge";
    case ErrorCode::kRootHasInEdge: return "RootHasInEdge";
    case ErrorCode::kUnknownEndpoint: return "UnknownEndpoint";
    case ErrorCode::kUnknownVertex: return "UnknownVertex";
    case ErrorCode::kEdgeNotIngoing: return "EdgeNotIngoing";
    case ErrorCode::kRootInSet: return "RootInSet";
    case ErrorCode::kNotAPath: return "NotAPath";
    case ErrorCode::kModeViolation: return "ModeViolation";
    case ErrorCode::kTrivialPathInEdgeView: return "TrivialPathInEdgeView";
    case ErrorCode::kNotAnEMSeparation: return "NotAnEMSeparation";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kChainConditionViolated: return "ChainConditionViolated";
    case ErrorCode::kNotDisjoint: return "NotDisjoint";
    case ErrorCode::kNotXYPaths: return "NotXYPaths";
    case ErrorCode::kNotInG: return "NotInG";
    case ErrorCode::kNotSpanning: return "NotSpanning";
    case ErrorCode::kNotLarge: return "NotLarge";
    case ErrorCode::kNotAFlame: return "NotAFlame";
    case ErrorCode::kLedgerNotInG: return "LedgerNotInG";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kHypothesisViolated: return "HypothesisViolated";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

std::optional<Vertex> RootedDigraph::find(std::string_view id) const {
  if (!names_) return std::nullopt;
  auto it = std::lower_bound(names_->begin(), names_->end(), id);
  if (it == names_->end() || *it != id) return std::nullopt;
  return static_cast<Vertex>(it - names_->begin());
}

Vertex RootedDigraph::id(std::string_view name) const {
  auto v = find(name);
  if (!v) fail(ErrorCode::kUnknownVertex, "no vertex '" + std::string(name) + "'");
  return *v;
}

bool RootedDigraph::has_edge(Vertex tail, Vertex head) const {
  if (tail >= out_.size()) return false;
  const auto& out = out_[tail];
  return std::binary_search(out.begin(), out.end(), head);
}

VertexSet RootedDigraph::vertices() const {
  VertexSet all;
  for (Vertex v = 0; v < vertex_count(); ++v) all.insert(all.end(), v);
  return all;
}

std::vector<Edge> RootedDigraph::edges() const {
  std::vector<Edge> result;
  result.reserve(edge_count_);
  for (Vertex u = 0; u < out_.size(); ++u)
    for (Vertex w : out_[u]) result.push_back({u, w});
  return result;
}

EdgeSet RootedDigraph::edge_set() const {
  auto list = edges();
  return EdgeSet(list.begin(), list.end());
}

EdgeSet RootedDigraph::in_edges(Vertex v) const {
  EdgeSet result;
  for (Vertex u : in_[v]) result.insert(result.end(), Edge{u, v});
  return result;
}

EdgeSet RootedDigraph::out_edges(Vertex v) const {
  EdgeSet result;
  for (Vertex w : out_[v]) result.insert(result.end(), Edge{v, w});
  return result;
}

VertexSet RootedDigraph::set(std::initializer_list<std::string_view> ids) const {
  VertexSet result;
  for (auto s : ids) result.insert(id(s));
  return result;
}

Edge RootedDigraph::edge(std::string_view tail, std::string_view head) const {
  return {id(tail), id(head)};
}

EdgeSet RootedDigraph::edges_of(
    std::initializer_list<std::pair<std::string_view, std::string_view>> pairs)
    const {
  EdgeSet result;
  for (const auto& [t, h] : pairs) result.insert(edge(t, h));
  return result;
}

bool RootedDigraph::same_vertices(const RootedDigraph& other) const {
  if (names_ == other.names_) return root_ == other.root_;
  if (!names_ || !other.names_) return names_ == other.names_;
  return *names_ == *other.names_ && root_ == other.root_;
}

bool RootedDigraph::is_subdigraph_of(const RootedDigraph& other) const {
  if (!same_vertices(other)) return false;
  for (Vertex u = 0; u < out_.size(); ++u)
    for (Vertex w : out_[u])
      if (!other.has_edge(u, w)) return false;
  return true;
}

bool operator==(const RootedDigraph& a, const RootedDigraph& b) {
  return a.same_vertices(b) && a.out_ == b.out_;
}

RootedDigraph RootedDigraph::from_indices(
    std::shared_ptr<const std::vector<std::string>> names, Vertex root,
    std::vector<Edge> edges) {
  const std::size_t n = names->size();
  if (root >= n) fail(ErrorCode::kUnknownEndpoint, "root is not a vertex");
  std::sort(edges.begin(), edges.end());
  RootedDigraph d;
  d.out_.assign(n, {});
  d.in_.assign(n, {});
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.tail >= n || e.head >= n)
      fail(ErrorCode::kUnknownEndpoint, "edge endpoint out of range");
    const auto label = "(" + (*names)[e.tail] + "," + (*names)[e.head] + ")";
    if (i > 0 && edges[i - 1] == e)
      fail(ErrorCode::kDuplicateEdge, "edge " + label + " listed twice");
    if (e.tail == e.head) fail(ErrorCode::kLoopEdge, "loop " + label);
    if (e.head == root)
      fail(ErrorCode::kRootHasInEdge, "edge " + label + " enters the root");
    d.out_[e.tail].push_back(e.head);
    d.in_[e.head].push_back(e.tail);
  }
  for (auto& list : d.in_) std::sort(list.begin(), list.end());
  d.names_ = std::move(names);
  d.root_ = root;
  d.edge_count_ = edges.size();
  return d;
}

RootedDigraph build_digraph(
    std::vector<std::string> vertices,
    const std::vector<std::pair<std::string, std::string>>& edges,
    const std::string& root) {
  std::sort(vertices.begin(), vertices.end());
  for (std::size_t i = 1; i < vertices.size(); ++i)
    if (vertices[i] == vertices[i - 1])
      fail(ErrorCode::kDuplicateVertex, "vertex '" + vertices[i] + "' listed twice");
  auto names = std::make_shared<const std::vector<std::string>>(std::move(vertices));
  auto lookup = [&](const std::string& id) -> Vertex {
    auto it = std::lower_bound(names->begin(), names->end(), id);
    if (it == names->end() || *it != id)
      fail(ErrorCode::kUnknownEndpoint, "'" + id + "' is not a vertex");
    return static_cast<Vertex>(it - names->begin());
  };
  const Vertex r = lookup(root);
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (const auto& [t, h] : edges) list.push_back({lookup(t), lookup(h)});
  return RootedDigraph::from_indices(std::move(names), r, std::move(list));
}

RootedDigraph restrict_in(const RootedDigraph& d, Vertex v, const EdgeSet& kept) {
  if (v == d.root())
    fail(ErrorCode::kPreconditionViolated, "cannot restrict the root");
  for (const Edge& e : kept)
    if (e.head != v || !d.has_edge(e))
      fail(ErrorCode::kEdgeNotIngoing, format_edge(d, e) + " is not an in-edge of " + d.name(v));
  std::vector<Edge> edges;
  edges.reserve(d.edge_count());
  for (const Edge& e : d.edges()) {
    if (e.head == v && e.tail != d.root() && !kept.contains(e)) continue;
    edges.push_back(e);
  }
  return RootedDigraph::from_indices(d.name_table(), d.root(), std::move(edges));
}

RootedDigraph delete_edges(const RootedDigraph& d, const EdgeSet& removed) {
  std::vector<Edge> edges;
  edges.reserve(d.edge_count());
  for (const Edge& e : d.edges())
    if (!removed.contains(e)) edges.push_back(e);
  return RootedDigraph::from_indices(d.name_table(), d.root(), std::move(edges));
}

RootedDigraph without_root_edge(const RootedDigraph& d, Vertex v) {
  if (!d.has_edge(d.root(), v)) return d;
  return delete_edges(d, {Edge{d.root(), v}});
}

RootedDigraph with_edges(const RootedDigraph& d, const EdgeSet& edges) {
  for (const Edge& e : edges)
    if (!d.has_edge(e))
      fail(ErrorCode::kNotSpanning, format_edge(d, e) + " is not an edge of the host");
  return RootedDigraph::from_indices(d.name_table(), d.root(),
                                     std::vector<Edge>(edges.begin(), edges.end()));
}

Boundary boundary(const RootedDigraph& d, const VertexSet& x) {
  if (x.contains(d.root()))
    fail(ErrorCode::kRootInSet, "the root cannot belong to the set");
  Boundary b;
  for (Vertex v : x) {
    bool entered = false;
    for (Vertex u : d.in_neighbors(v))
      if (!x.contains(u)) {
        entered = true;
        break;
      }
    (entered ? b.entrance : b.interior).insert(v);
  }
  return b;
}

std::vector<char> reachable_from(const RootedDigraph& d, Vertex from,
                                 const VertexSet& blocked) {
  std::vector<char> seen(d.vertex_count(), 0);
  std::deque<Vertex> queue{from};
  seen[from] = 1;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    if (u != from && blocked.contains(u)) continue;
    for (Vertex w : d.out_neighbors(u)) {
      if (seen[w]) continue;
      seen[w] = 1;
      queue.push_back(w);
    }
  }
  return seen;
}

std::vector<char> reaching(const RootedDigraph& d, Vertex to) {
  std::vector<char> seen(d.vertex_count(), 0);
  std::deque<Vertex> queue{to};
  seen[to] = 1;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : d.in_neighbors(u)) {
      if (seen[w]) continue;
      seen[w] = 1;
      queue.push_back(w);
    }
  }
  return seen;
}

VertexSet in_neighbors_without_root(const RootedDigraph& d, Vertex v) {
  VertexSet result;
  for (Vertex u : d.in_neighbors(v))
    if (u != d.root()) result.insert(u);
  return result;
}

std::string format_set(const RootedDigraph& d, const VertexSet& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (Vertex v : s) {
    if (!first) out << ',';
    out << d.name(v);
    first = false;
  }
  out << '}';
  return out.str();
}

std::string format_edge(const RootedDigraph& d, const Edge& e) {
  auto label = [&](Vertex v) {
    return v < d.vertex_count() ? d.name(v) : "#" + std::to_string(v);
  };
  return label(e.tail) + "->" + label(e.head);
}

}  // namespace vflame
