#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vflame/digraph.hpp"

namespace vflame {

// A finite directed path given by its vertex sequence. May be trivial.
struct Path {
  std::vector<Vertex> vertices;

  Path() = default;
  explicit Path(std::vector<Vertex> vs) : vertices(std::move(vs)) {}

  Vertex first() const { return vertices.front(); }
  Vertex last() const { return vertices.back(); }
  std::size_t size() const { return vertices.size(); }
  bool empty() const { return vertices.empty(); }
  bool is_trivial() const { return vertices.size() == 1; }
  bool contains(Vertex v) const;
  std::optional<std::size_t> index_of(Vertex v) const;
  std::vector<Edge> edges() const;
  Edge first_edge() const { return {vertices[0], vertices[1]}; }
  Edge last_edge() const {
    return {vertices[vertices.size() - 2], vertices.back()};
  }
  // Segment up to and including v / from v to the end.
  Path prefix_to(Vertex v) const;
  Path suffix_from(Vertex v) const;

  friend auto operator<=>(const Path&, const Path&) = default;
};

// Path over ids, e.g. make_path(d, {"r", "a", "t"}). Does not validate edges.
Path make_path(const RootedDigraph& d, std::initializer_list<std::string_view> ids);

// True when the path is non-empty, has distinct vertices and every
// consecutive pair is an edge of D.
bool is_path_in(const RootedDigraph& d, const Path& p);
void require_path_in(const RootedDigraph& d, const Path& p);

// PvQ: initial segment of P up to v followed by the terminal segment of Q
// from v. Errors: kNotAPath when v misses a path or the segments overlap.
Path concat_paths(const Path& p, const Path& q, Vertex v);

enum class PathMode {
  kDisjoint,            // pairwise vertex-disjoint
  kInternallyDisjoint,  // shared vertices are endpoints of both paths
  kRootShared,          // pairwise intersections minus the common last vertex lie in {r}
};

// An unordered set of paths, stored in lexicographic order, together with the
// disjointness mode it was validated against.
class PathSystem {
 public:
  PathSystem() = default;
  // Validates the mode; kModeViolation on failure. `root` is only consulted
  // in kRootShared mode.
  PathSystem(std::vector<Path> paths, PathMode mode, Vertex root = 0);

  const std::vector<Path>& paths() const { return paths_; }
  PathMode mode() const { return mode_; }
  std::size_t size() const { return paths_.size(); }
  bool empty() const { return paths_.empty(); }
  auto begin() const { return paths_.begin(); }
  auto end() const { return paths_.end(); }
  bool has_trivial_path() const;

  VertexSet starts() const;    // V^-
  VertexSet ends() const;      // V^+
  VertexSet vertices() const;  // V(P)
  EdgeSet edges() const;       // E(P)
  // E^- and E^+; kTrivialPathInEdgeView when a trivial path is present.
  EdgeSet first_edges() const;
  EdgeSet last_edges() const;
  // in_P(v): in-edges of v in the union of the paths.
  EdgeSet in_edges_at(Vertex v) const;

  bool lies_in(const RootedDigraph& d) const;

  friend bool operator==(const PathSystem& a, const PathSystem& b) {
    return a.paths_ == b.paths_;
  }

 private:
  std::vector<Path> paths_;
  PathMode mode_ = PathMode::kInternallyDisjoint;
};

// Mode checks without constructing a system.
bool is_disjoint(const std::vector<Path>& paths);
bool is_internally_disjoint(const std::vector<Path>& paths);
bool is_root_shared(const std::vector<Path>& paths, Vertex root);
// Paths pairwise meeting only in `center`, which is the first (fan) or last
// (infan) vertex of every path.
bool is_fan(const std::vector<Path>& paths, Vertex center);
bool is_infan(const std::vector<Path>& paths, Vertex center);

std::string format_path(const RootedDigraph& d, const Path& p);
std::string format_system(const RootedDigraph& d, const PathSystem& s);

}  // namespace vflame
