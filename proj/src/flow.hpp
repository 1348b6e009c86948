#pragma once

#include <vector>

#include "vflame/digraph.hpp"
#include "vflame/path.hpp"

// Unit vertex-capacity flow on the split network of a rooted digraph. Every
// allowed vertex v becomes in(v) -> out(v) with capacity 1 (or unbounded for
// terminals marked unlimited); every edge uv becomes out(u) -> in(v). A
// super source feeds the sources and the sinks drain into a super sink.
// Sources are never re-entered and sinks are never left, so every flow path
// meets the source set exactly at its start and the sink set at its end.
namespace vflame::detail {

struct NetworkSpec {
  std::vector<Vertex> sources;
  std::vector<Vertex> sinks;
  std::vector<char> allowed;    // empty: every vertex
  std::vector<char> unlimited;  // empty: none
};

class SplitFlow {
 public:
  SplitFlow(const RootedDigraph& d, const NetworkSpec& net);

  // Runs Dinic to a maximum flow and returns its value.
  int maximize();
  // Pushes one unit along each given source-to-sink path. The paths must be
  // jointly feasible.
  void seed(const std::vector<Path>& paths);
  // One BFS augmentation; false when the current flow is maximum.
  bool augment_once();

  int value() const { return value_; }
  std::vector<Path> paths() const;
  // Minimum vertex cut closest to the sources / to the sinks. Only
  // meaningful once the flow is maximum.
  VertexSet near_source_cut() const;
  VertexSet near_sink_cut() const;

 private:
  struct Arc {
    int to;
    int cap;
  };

  int in_node(Vertex v) const { return 2 * static_cast<int>(v); }
  int out_node(Vertex v) const { return 2 * static_cast<int>(v) + 1; }
  void add_arc(int from, int to, int cap);
  int find_arc(int from, int to) const;
  bool build_levels();
  int push(int node, int limit);
  std::vector<char> residual_reach_from_source() const;
  std::vector<char> residual_reach_to_sink() const;

  std::size_t n_;
  int source_;
  int sink_;
  std::vector<char> allowed_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> iter_;
  int value_ = 0;
};

}  // namespace vflame::detail
