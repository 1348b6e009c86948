#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vflame/error.hpp"

namespace vflame {

// Vertices are indices into the digraph's sorted id table, so comparing two
// Vertex values compares their ids in the global (lexicographic) order.
using Vertex = std::uint32_t;

struct Edge {
  Vertex tail = 0;
  Vertex head = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using VertexSet = std::set<Vertex>;
using EdgeSet = std::set<Edge>;

// Simple digraph with a distinguished root that has no in-edges. Immutable
// once built; every derived digraph shares the id table of its parent.
class RootedDigraph {
 public:
  RootedDigraph() = default;

  std::size_t vertex_count() const { return names_ ? names_->size() : 0; }
  std::size_t edge_count() const { return edge_count_; }
  Vertex root() const { return root_; }

  const std::string& name(Vertex v) const { return (*names_)[v]; }
  const std::vector<std::string>& names() const { return *names_; }
  std::optional<Vertex> find(std::string_view id) const;
  // Throws kUnknownVertex.
  Vertex id(std::string_view name) const;

  std::span<const Vertex> out_neighbors(Vertex v) const { return out_[v]; }
  std::span<const Vertex> in_neighbors(Vertex v) const { return in_[v]; }
  std::size_t in_degree(Vertex v) const { return in_[v].size(); }
  std::size_t out_degree(Vertex v) const { return out_[v].size(); }
  bool has_edge(Vertex tail, Vertex head) const;
  bool has_edge(const Edge& e) const { return has_edge(e.tail, e.head); }

  VertexSet vertices() const;
  std::vector<Edge> edges() const;  // sorted
  EdgeSet edge_set() const;
  EdgeSet in_edges(Vertex v) const;
  EdgeSet out_edges(Vertex v) const;

  // Convenience lookups by id, mostly for fixtures and tests.
  VertexSet set(std::initializer_list<std::string_view> ids) const;
  Edge edge(std::string_view tail, std::string_view head) const;
  EdgeSet edges_of(
      std::initializer_list<std::pair<std::string_view, std::string_view>>
          pairs) const;

  bool same_vertices(const RootedDigraph& other) const;
  bool is_subdigraph_of(const RootedDigraph& other) const;

  friend bool operator==(const RootedDigraph& a, const RootedDigraph& b);

  // Builds from an index-level description; validates every invariant.
  static RootedDigraph from_indices(
      std::shared_ptr<const std::vector<std::string>> names, Vertex root,
      std::vector<Edge> edges);

  const std::shared_ptr<const std::vector<std::string>>& name_table() const {
    return names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
  Vertex root_ = 0;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::size_t edge_count_ = 0;
};

// Validating constructor. Errors: kDuplicateVertex, kDuplicateEdge,
// kLoopEdge, kRootHasInEdge, kUnknownEndpoint.
RootedDigraph build_digraph(
    std::vector<std::string> vertices,
    const std::vector<std::pair<std::string, std::string>>& edges,
    const std::string& root);

// D restricted at v to in-edges I: every in-edge of v outside I + rv is
// dropped. Errors: kPreconditionViolated (v is the root), kEdgeNotIngoing.
RootedDigraph restrict_in(const RootedDigraph& d, Vertex v, const EdgeSet& kept);

// Removes the given edges; edges absent from D are ignored.
RootedDigraph delete_edges(const RootedDigraph& d, const EdgeSet& removed);

// D - rv (identity when rv is not an edge).
RootedDigraph without_root_edge(const RootedDigraph& d, Vertex v);

// Spanning subdigraph with the given edge set (all must be edges of D).
RootedDigraph with_edges(const RootedDigraph& d, const EdgeSet& edges);

struct Boundary {
  VertexSet entrance;
  VertexSet interior;
};

// ent_D(X): vertices of X entered from outside X; int_D(X) the rest.
// Errors: kRootInSet.
Boundary boundary(const RootedDigraph& d, const VertexSet& x);

// All vertices reachable from `from` without entering `blocked` (a blocked
// start is still reported as reached).
std::vector<char> reachable_from(const RootedDigraph& d, Vertex from,
                                 const VertexSet& blocked = {});

// Vertices from which `to` is reachable.
std::vector<char> reaching(const RootedDigraph& d, Vertex to);

// In-neighbourhood of v in D - rv.
VertexSet in_neighbors_without_root(const RootedDigraph& d, Vertex v);

std::string format_set(const RootedDigraph& d, const VertexSet& s);
std::string format_edge(const RootedDigraph& d, const Edge& e);

}  // namespace vflame
