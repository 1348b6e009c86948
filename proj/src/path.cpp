#include "vflame/path.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace vflame {

bool Path::contains(Vertex v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

std::optional<std::size_t> Path::index_of(Vertex v) const {
  auto it = std::find(vertices.begin(), vertices.end(), v);
  if (it == vertices.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

std::vector<Edge> Path::edges() const {
  std::vector<Edge> result;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
    result.push_back({vertices[i], vertices[i + 1]});
  return result;
}

Path Path::prefix_to(Vertex v) const {
  auto i = index_of(v);
  if (!i) fail(ErrorCode::kNotAPath, "vertex not on path");
  return Path({vertices.begin(), vertices.begin() + static_cast<std::ptrdiff_t>(*i) + 1});
}

Path Path::suffix_from(Vertex v) const {
  auto i = index_of(v);
  if (!i) fail(ErrorCode::kNotAPath, "vertex not on path");
  return Path({vertices.begin() + static_cast<std::ptrdiff_t>(*i), vertices.end()});
}

Path make_path(const RootedDigraph& d, std::initializer_list<std::string_view> ids) {
  Path p;
  for (auto id : ids) p.vertices.push_back(d.id(id));
  return p;
}

bool is_path_in(const RootedDigraph& d, const Path& p) {
  if (p.empty()) return false;
  std::vector<char> seen(d.vertex_count(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    Vertex v = p.vertices[i];
    if (v >= d.vertex_count() || seen[v]) return false;
    seen[v] = 1;
    if (i > 0 && !d.has_edge(p.vertices[i - 1], v)) return false;
  }
  return true;
}

void require_path_in(const RootedDigraph& d, const Path& p) {
  if (!is_path_in(d, p))
    fail(ErrorCode::kNotAPath, format_path(d, p) + " is not a path of the digraph");
}

Path concat_paths(const Path& p, const Path& q, Vertex v) {
  auto ip = p.index_of(v);
  auto iq = q.index_of(v);
  if (!ip || !iq) fail(ErrorCode::kNotAPath, "splice vertex is not on both paths");
  Path result({p.vertices.begin(), p.vertices.begin() + static_cast<std::ptrdiff_t>(*ip)});
  for (std::size_t i = *iq; i < q.size(); ++i) {
    Vertex w = q.vertices[i];
    if (std::find(result.vertices.begin(), result.vertices.end(), w) != result.vertices.end())
      fail(ErrorCode::kNotAPath, "segments of the splice share a vertex besides the splice point");
    result.vertices.push_back(w);
  }
  return result;
}

namespace {

bool endpoint_of(const Path& p, Vertex v) { return p.first() == v || p.last() == v; }

template <typename Allowed>
bool pairwise_ok(const std::vector<Path>& paths, Allowed allowed) {
  // A vertex on three or more paths is only compared against its first
  // owner; each predicate below depends on the paths individually.
  std::map<Vertex, std::size_t> owner;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (paths[i].empty()) return false;
    for (Vertex v : paths[i].vertices) {
      auto [it, fresh] = owner.emplace(v, i);
      if (fresh) continue;
      if (!allowed(paths[it->second], paths[i], v)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_disjoint(const std::vector<Path>& paths) {
  return pairwise_ok(paths, [](const Path&, const Path&, Vertex) { return false; });
}

bool is_internally_disjoint(const std::vector<Path>& paths) {
  return pairwise_ok(paths, [](const Path& a, const Path& b, Vertex v) {
    return endpoint_of(a, v) && endpoint_of(b, v);
  });
}

bool is_root_shared(const std::vector<Path>& paths, Vertex root) {
  if (paths.empty()) return true;
  Vertex last = paths.front().empty() ? 0 : paths.front().last();
  for (const Path& p : paths)
    if (p.empty() || p.last() != last) return false;
  return pairwise_ok(paths, [&](const Path&, const Path&, Vertex v) {
    return v == root || v == last;
  });
}

bool is_fan(const std::vector<Path>& paths, Vertex center) {
  for (const Path& p : paths)
    if (p.empty() || p.first() != center) return false;
  return pairwise_ok(paths, [&](const Path&, const Path&, Vertex v) { return v == center; });
}

bool is_infan(const std::vector<Path>& paths, Vertex center) {
  for (const Path& p : paths)
    if (p.empty() || p.last() != center) return false;
  return pairwise_ok(paths, [&](const Path&, const Path&, Vertex v) { return v == center; });
}

PathSystem::PathSystem(std::vector<Path> paths, PathMode mode, Vertex root)
    : paths_(std::move(paths)), mode_(mode) {
  std::sort(paths_.begin(), paths_.end());
  bool ok = false;
  switch (mode) {
    case PathMode::kDisjoint: ok = is_disjoint(paths_); break;
    case PathMode::kInternallyDisjoint: ok = is_internally_disjoint(paths_); break;
    case PathMode::kRootShared: ok = is_root_shared(paths_, root); break;
  }
  if (!ok) fail(ErrorCode::kModeViolation, "paths violate the declared disjointness mode");
}

bool PathSystem::has_trivial_path() const {
  return std::any_of(paths_.begin(), paths_.end(), [](const Path& p) { return p.is_trivial(); });
}

VertexSet PathSystem::starts() const {
  VertexSet s;
  for (const Path& p : paths_) s.insert(p.first());
  return s;
}

VertexSet PathSystem::ends() const {
  VertexSet s;
  for (const Path& p : paths_) s.insert(p.last());
  return s;
}

VertexSet PathSystem::vertices() const {
  VertexSet s;
  for (const Path& p : paths_) s.insert(p.vertices.begin(), p.vertices.end());
  return s;
}

EdgeSet PathSystem::edges() const {
  EdgeSet s;
  for (const Path& p : paths_)
    for (const Edge& e : p.edges()) s.insert(e);
  return s;
}

EdgeSet PathSystem::first_edges() const {
  if (has_trivial_path())
    fail(ErrorCode::kTrivialPathInEdgeView, "E- is undefined for systems with trivial paths");
  EdgeSet s;
  for (const Path& p : paths_) s.insert(p.first_edge());
  return s;
}

EdgeSet PathSystem::last_edges() const {
  if (has_trivial_path())
    fail(ErrorCode::kTrivialPathInEdgeView, "E+ is undefined for systems with trivial paths");
  EdgeSet s;
  for (const Path& p : paths_) s.insert(p.last_edge());
  return s;
}

EdgeSet PathSystem::in_edges_at(Vertex v) const {
  EdgeSet s;
  for (const Path& p : paths_)
    for (const Edge& e : p.edges())
      if (e.head == v) s.insert(e);
  return s;
}

bool PathSystem::lies_in(const RootedDigraph& d) const {
  return std::all_of(paths_.begin(), paths_.end(), [&](const Path& p) { return is_path_in(d, p); });
}

std::string format_path(const RootedDigraph& d, const Path& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += "->";
    out += p.vertices[i] < d.vertex_count() ? d.name(p.vertices[i]) : "#" + std::to_string(p.vertices[i]);
  }
  return out;
}

std::string format_system(const RootedDigraph& d, const PathSystem& s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out << ", ";
    out << format_path(d, s.paths()[i]);
  }
  out << '}';
  return out.str();
}

}  // namespace vflame
