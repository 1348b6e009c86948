#include "flow.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace vflame::detail {

namespace {
constexpr int kInfinite = std::numeric_limits<int>::max() / 4;
}

SplitFlow::SplitFlow(const RootedDigraph& d, const NetworkSpec& net)
    : n_(d.vertex_count()),
      source_(static_cast<int>(2 * n_)),
      sink_(static_cast<int>(2 * n_ + 1)),
      adj_(2 * n_ + 2) {
  allowed_ = net.allowed.empty() ? std::vector<char>(n_, 1) : net.allowed;
  std::vector<char> unlimited = net.unlimited.empty() ? std::vector<char>(n_, 0) : net.unlimited;
  std::vector<char> is_source(n_, 0), is_sink(n_, 0);
  for (Vertex s : net.sources) is_source[s] = 1;
  for (Vertex t : net.sinks) is_sink[t] = 1;

  for (Vertex v = 0; v < n_; ++v) {
    if (!allowed_[v]) continue;
    add_arc(in_node(v), out_node(v), unlimited[v] ? kInfinite : 1);
  }
  for (Vertex u = 0; u < n_; ++u) {
    if (!allowed_[u] || is_sink[u]) continue;
    for (Vertex w : d.out_neighbors(u)) {
      if (!allowed_[w] || is_source[w]) continue;
      // Two unlimited endpoints would otherwise carry unbounded flow.
      add_arc(out_node(u), in_node(w), unlimited[u] && unlimited[w] ? 1 : kInfinite);
    }
  }
  for (Vertex s : net.sources)
    if (allowed_[s]) add_arc(source_, in_node(s), kInfinite);
  for (Vertex t : net.sinks)
    if (allowed_[t]) add_arc(out_node(t), sink_, kInfinite);
}

void SplitFlow::add_arc(int from, int to, int cap) {
  adj_[from].push_back(static_cast<int>(arcs_.size()));
  arcs_.push_back({to, cap});
  adj_[to].push_back(static_cast<int>(arcs_.size()));
  arcs_.push_back({from, 0});
}

int SplitFlow::find_arc(int from, int to) const {
  for (int a : adj_[from])
    if ((a & 1) == 0 && arcs_[a].to == to) return a;
  return -1;
}

bool SplitFlow::build_levels() {
  level_.assign(adj_.size(), -1);
  std::deque<int> queue{source_};
  level_[source_] = 0;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int a : adj_[x]) {
      if (arcs_[a].cap <= 0 || level_[arcs_[a].to] >= 0) continue;
      level_[arcs_[a].to] = level_[x] + 1;
      queue.push_back(arcs_[a].to);
    }
  }
  return level_[sink_] >= 0;
}

int SplitFlow::push(int node, int limit) {
  if (node == sink_) return limit;
  for (auto& i = iter_[node]; i < adj_[node].size(); ++i) {
    int a = adj_[node][i];
    Arc& arc = arcs_[a];
    if (arc.cap <= 0 || level_[arc.to] != level_[node] + 1) continue;
    int pushed = push(arc.to, std::min(limit, arc.cap));
    if (pushed > 0) {
      arc.cap -= pushed;
      arcs_[a ^ 1].cap += pushed;
      return pushed;
    }
  }
  return 0;
}

int SplitFlow::maximize() {
  while (build_levels()) {
    iter_.assign(adj_.size(), 0);
    while (int pushed = push(source_, kInfinite)) value_ += pushed;
  }
  return value_;
}

void SplitFlow::seed(const std::vector<Path>& paths) {
  for (const Path& p : paths) {
    std::vector<int> nodes{source_};
    for (Vertex v : p.vertices) {
      nodes.push_back(in_node(v));
      nodes.push_back(out_node(v));
    }
    nodes.push_back(sink_);
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
      int a = find_arc(nodes[i], nodes[i + 1]);
      if (a < 0 || arcs_[a].cap <= 0)
        fail(ErrorCode::kPreconditionViolated, "seed path does not fit the network");
      arcs_[a].cap -= 1;
      arcs_[a ^ 1].cap += 1;
    }
    ++value_;
  }
}

bool SplitFlow::augment_once() {
  std::vector<int> via(adj_.size(), -1);
  std::vector<char> seen(adj_.size(), 0);
  std::deque<int> queue{source_};
  seen[source_] = 1;
  while (!queue.empty() && !seen[sink_]) {
    int x = queue.front();
    queue.pop_front();
    for (int a : adj_[x]) {
      int y = arcs_[a].to;
      if (arcs_[a].cap <= 0 || seen[y]) continue;
      seen[y] = 1;
      via[y] = a;
      queue.push_back(y);
    }
  }
  if (!seen[sink_]) return false;
  for (int y = sink_; y != source_; y = arcs_[via[y] ^ 1].to) {
    arcs_[via[y]].cap -= 1;
    arcs_[via[y] ^ 1].cap += 1;
  }
  ++value_;
  return true;
}

std::vector<Path> SplitFlow::paths() const {
  // Flow on a forward arc a equals the residual capacity of its reverse.
  std::vector<int> flow(arcs_.size(), 0);
  for (std::size_t a = 0; a < arcs_.size(); a += 2) flow[a] = arcs_[a + 1].cap;
  std::vector<Path> result;
  while (true) {
    int x = source_;
    Path p;
    bool found = false;
    while (x != sink_) {
      int next_arc = -1;
      for (int a : adj_[x])
        if ((a & 1) == 0 && flow[a] > 0) {
          next_arc = a;
          break;
        }
      if (next_arc < 0) break;
      --flow[next_arc];
      x = arcs_[next_arc].to;
      if (x != sink_ && x % 2 == 0) p.vertices.push_back(static_cast<Vertex>(x / 2));
      found = true;
    }
    if (!found) break;
    result.push_back(std::move(p));
  }
  return result;
}

std::vector<char> SplitFlow::residual_reach_from_source() const {
  std::vector<char> seen(adj_.size(), 0);
  std::deque<int> queue{source_};
  seen[source_] = 1;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int a : adj_[x]) {
      if (arcs_[a].cap <= 0 || seen[arcs_[a].to]) continue;
      seen[arcs_[a].to] = 1;
      queue.push_back(arcs_[a].to);
    }
  }
  return seen;
}

std::vector<char> SplitFlow::residual_reach_to_sink() const {
  std::vector<char> seen(adj_.size(), 0);
  std::deque<int> queue{sink_};
  seen[sink_] = 1;
  while (!queue.empty()) {
    int y = queue.front();
    queue.pop_front();
    // arc x -> y with residual capacity is stored as the partner of a in adj_[y]
    for (int a : adj_[y]) {
      int x = arcs_[a].to;
      if (seen[x] || arcs_[a ^ 1].cap <= 0) continue;
      seen[x] = 1;
      queue.push_back(x);
    }
  }
  return seen;
}

VertexSet SplitFlow::near_source_cut() const {
  auto seen = residual_reach_from_source();
  VertexSet cut;
  for (Vertex v = 0; v < n_; ++v)
    if (allowed_[v] && seen[in_node(v)] && !seen[out_node(v)]) cut.insert(v);
  return cut;
}

VertexSet SplitFlow::near_sink_cut() const {
  auto seen = residual_reach_to_sink();
  VertexSet cut;
  for (Vertex v = 0; v < n_; ++v)
    if (allowed_[v] && seen[out_node(v)] && !seen[in_node(v)]) cut.insert(v);
  return cut;
}

}  // namespace vflame::detail
