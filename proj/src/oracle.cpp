#include "vflame/oracle.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <string>

#include "exhaustive.hpp"

namespace vflame::oracle {

using detail::bit;
using detail::find_system;
using detail::Mask;
using detail::mask_of;
using detail::require_small;
using detail::set_of;
using detail::simple_paths;

namespace {

Mask all_vertices(const RootedDigraph& d) {
  return d.vertex_count() == 64 ? ~Mask{0} : (Mask{1} << d.vertex_count()) - 1;
}

// Vertices reachable from r without entering `blocked`, skipping rv when
// asked. Blocked vertices are never reported.
Mask reach(const RootedDigraph& d, Mask blocked, std::optional<Vertex> skip_root_edge_to) {
  const Vertex r = d.root();
  Mask seen = bit(r);
  std::vector<Vertex> stack{r};
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : d.out_neighbors(u)) {
      if ((seen | blocked) & bit(w)) continue;
      if (skip_root_edge_to && u == r && w == *skip_root_edge_to) continue;
      seen |= bit(w);
      stack.push_back(w);
    }
  }
  return seen;
}

Mask entrance_mask(const RootedDigraph& d, Mask x) {
  Mask ent = 0;
  for (Vertex v : set_of(x))
    for (Vertex u : d.in_neighbors(v))
      if (!(x & bit(u))) {
        ent |= bit(v);
        break;
      }
  return ent;
}

// Every subset of `universe`, ordered by size and then numerically.
std::vector<Mask> subsets_by_size(Mask universe) {
  std::vector<Vertex> elems;
  for (Vertex v : set_of(universe)) elems.push_back(v);
  std::vector<Mask> out;
  out.reserve(std::size_t{1} << elems.size());
  for (Mask code = 0; code < (Mask{1} << elems.size()); ++code) {
    Mask m = 0;
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (code >> i & 1) m |= bit(elems[i]);
    out.push_back(m);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });
  return out;
}

void require_target(const RootedDigraph& d, Vertex v) {
  if (v >= d.vertex_count()) fail(ErrorCode::kUnknownVertex, "vertex index out of range");
  if (v == d.root()) fail(ErrorCode::kPreconditionViolated, "the target must differ from the root");
}

std::optional<std::vector<Path>> orthogonal_paths(const std::vector<Path>& candidates,
                                                  const std::vector<Mask>& masks, Mask s,
                                                  Mask shared) {
  std::vector<std::vector<Path>> slots;
  for (Vertex w : set_of(s)) {
    std::vector<Path> slot;
    for (std::size_t k = 0; k < candidates.size(); ++k)
      if ((masks[k] & s) == bit(w)) slot.push_back(candidates[k]);
    slots.push_back(std::move(slot));
  }
  return find_system(slots, shared);
}

struct RootPaths {
  std::vector<Path> paths;
  std::vector<Mask> masks;
};

// Every r->v path of D - rv.
RootPaths root_paths(const RootedDigraph& d, Vertex v) {
  RootPaths rp;
  rp.paths = simple_paths(without_root_edge(d, v), d.root(), v, all_vertices(d));
  for (const Path& p : rp.paths) rp.masks.push_back(mask_of(p));
  return rp;
}

}  // namespace

BruteKappa brute_kappa(const RootedDigraph& d, Vertex v) {
  require_target(d, v);
  require_small(d, 16, "brute_kappa");
  const Vertex r = d.root();
  const RootPaths rp = root_paths(d, v);
  const Mask universe = all_vertices(d) & ~bit(r) & ~bit(v);
  for (Mask s : subsets_by_size(universe)) {
    if (reach(d, s, v) & bit(v)) continue;
    // The first separating set has minimum size; a system through it is maximum.
    auto system = orthogonal_paths(rp.paths, rp.masks, s, bit(r) | bit(v));
    if (!system) fail(ErrorCode::kInternal, "minimum separator without an orthogonal system");
    if (d.has_edge(r, v)) system->push_back(Path({r, v}));
    BruteKappa result;
    result.kappa = system->size();
    result.system = PathSystem(std::move(*system), PathMode::kInternallyDisjoint);
    return result;
  }
  fail(ErrorCode::kInternal, "V - r - v does not separate");
}

std::optional<PathSystem> brute_orthogonal_system(const RootedDigraph& d, Vertex v,
                                                  const VertexSet& s) {
  require_target(d, v);
  require_small(d, 16, "brute_orthogonal_system");
  if (s.contains(d.root()) || s.contains(v)) return std::nullopt;
  const RootPaths rp = root_paths(d, v);
  auto paths = orthogonal_paths(rp.paths, rp.masks, mask_of(s), bit(d.root()) | bit(v));
  if (!paths) return std::nullopt;
  return PathSystem(std::move(*paths), PathMode::kInternallyDisjoint);
}

BruteSeparations brute_separations(const RootedDigraph& d, Vertex v) {
  require_target(d, v);
  require_small(d, 16, "brute_separations");
  const Vertex r = d.root();
  const RootPaths rp = root_paths(d, v);
  const Mask universe = all_vertices(d) & ~bit(r) & ~bit(v);
  std::vector<Mask> found;
  int min_size = -1;
  for (Mask s : subsets_by_size(universe)) {
    const int size = std::popcount(s);
    // A set larger than a separating one cannot carry an orthogonal system:
    // its paths would all cross the smaller separator at distinct vertices.
    if (min_size >= 0 && size > min_size) break;
    if (reach(d, s, v) & bit(v)) continue;
    if (!orthogonal_paths(rp.paths, rp.masks, s, bit(r) | bit(v))) continue;
    min_size = size;
    found.push_back(s);
  }
  if (found.empty()) fail(ErrorCode::kInternal, "no Erdos-Menger separation found");

  std::vector<Mask> reach_of;
  for (Mask s : found) reach_of.push_back(reach(d, s, v));
  auto below = [&](std::size_t a, std::size_t b) {  // found[a] separates found[b] from r
    return (reach_of[a] & found[b] & ~found[a]) == 0;
  };
  BruteSeparations result;
  std::optional<std::size_t> lo, hi;
  for (std::size_t a = 0; a < found.size(); ++a) {
    bool is_lo = true, is_hi = true;
    for (std::size_t b = 0; b < found.size(); ++b) {
      if (!below(a, b)) is_lo = false;
      if (!below(b, a)) is_hi = false;
    }
    if (is_lo) lo = a;
    if (is_hi) hi = a;
  }
  if (!lo || !hi) fail(ErrorCode::kInternal, "separations have no extreme elements");
  for (Mask s : found) result.all.push_back(set_of(s));
  std::sort(result.all.begin(), result.all.end());
  result.minimum = set_of(found[*lo]);
  result.maximum = set_of(found[*hi]);
  return result;
}

bool brute_is_bubble(const RootedDigraph& d, Vertex v, const VertexSet& b) {
  const Mask x = mask_of(b);
  if (!(x & bit(v)) || (x & bit(d.root()))) return false;
  const Mask ent = entrance_mask(d, x);
  std::vector<std::vector<Path>> slots;
  for (Vertex u : set_of(ent & ~bit(v)))
    slots.push_back(simple_paths(d, u, v, (x & ~ent) | bit(u) | bit(v)));
  return find_system(slots, bit(v)).has_value();
}

std::optional<PathSystem> brute_fan(const RootedDigraph& d, const VertexSet& u) {
  const Mask target = mask_of(u);
  if (target & bit(d.root())) fail(ErrorCode::kRootInSet, "the root cannot be a fan end");
  std::vector<std::vector<Path>> slots;
  for (Vertex w : u) slots.push_back(simple_paths(d, d.root(), w, (all_vertices(d) & ~target) | bit(w)));
  auto paths = find_system(slots, bit(d.root()));
  if (!paths) return std::nullopt;
  return PathSystem(std::move(*paths), PathMode::kInternallyDisjoint);
}

std::optional<PathSystem> brute_infan(const RootedDigraph& d, const VertexSet& x, Vertex v) {
  const Mask sources = mask_of(x);
  if (sources & bit(v)) fail(ErrorCode::kPreconditionViolated, "the target lies in X");
  std::vector<std::vector<Path>> slots;
  for (Vertex w : x) slots.push_back(simple_paths(d, w, v, (all_vertices(d) & ~sources) | bit(w)));
  auto paths = find_system(slots, bit(v));
  if (!paths) return std::nullopt;
  return PathSystem(std::move(*paths), PathMode::kInternallyDisjoint);
}

bool brute_is_anti_bubble(const RootedDigraph& d, const VertexSet& a) {
  const Mask x = mask_of(a);
  if (x & bit(d.root())) return false;
  return brute_fan(d, set_of(entrance_mask(d, x))).has_value();
}

BruteRegions brute_regions(const RootedDigraph& d, Vertex v) {
  require_target(d, v);
  require_small(d, 16, "brute_regions");
  const Mask universe = all_vertices(d) & ~bit(d.root());
  VertexSet seed = in_neighbors_without_root(d, v);
  seed.insert(v);
  const Mask seed_mask = mask_of(seed);

  BruteRegions result;
  Mask united = 0;
  Mask intersected = universe;
  for (Mask x : subsets_by_size(universe)) {
    const VertexSet set = set_of(x);
    if ((x & bit(v)) && brute_is_bubble(d, v, set)) {
      result.bubbles.push_back(set);
      united |= x;
    }
    if (brute_is_anti_bubble(d, set)) {
      result.anti_bubbles.push_back(set);
      if ((x & seed_mask) == seed_mask) intersected &= x;
    }
  }
  std::sort(result.bubbles.begin(), result.bubbles.end());
  std::sort(result.anti_bubbles.begin(), result.anti_bubbles.end());
  result.largest_bubble = set_of(united);
  result.smallest_anti_bubble = set_of(intersected);
  if (!std::binary_search(result.bubbles.begin(), result.bubbles.end(), result.largest_bubble))
    fail(ErrorCode::kInternal, "union of all bubbles is not a bubble");
  if (!std::binary_search(result.anti_bubbles.begin(), result.anti_bubbles.end(),
                          result.smallest_anti_bubble))
    fail(ErrorCode::kInternal, "intersection of anti-bubbles is not an anti-bubble");
  return result;
}

namespace {

std::vector<std::vector<Path>> g_candidates(const RootedDigraph& d, Vertex v,
                                            const std::vector<Edge>& in) {
  std::vector<std::vector<Path>> per_edge;
  for (const Edge& e : in) {
    std::vector<Path> slot;
    if (e.tail == d.root()) {
      slot.push_back(Path({d.root(), v}));
    } else {
      for (Path p : simple_paths(d, d.root(), e.tail, all_vertices(d) & ~bit(v))) {
        p.vertices.push_back(v);
        slot.push_back(std::move(p));
      }
    }
    per_edge.push_back(std::move(slot));
  }
  return per_edge;
}

}  // namespace

bool brute_in_g(const RootedDigraph& d, Vertex v, const EdgeSet& i) {
  require_target(d, v);
  require_small(d, 16, "brute_in_g");
  for (const Edge& e : i)
    if (e.head != v || !d.has_edge(e))
      fail(ErrorCode::kEdgeNotIngoing, format_edge(d, e) + " is not an in-edge");
  const std::vector<Edge> in(i.begin(), i.end());
  return find_system(g_candidates(d, v, in), bit(d.root()) | bit(v)).has_value();
}

std::vector<EdgeSet> brute_g(const RootedDigraph& d, Vertex v) {
  require_target(d, v);
  if (d.vertex_count() > 12 || d.in_degree(v) > 8)
    fail(ErrorCode::kTooLarge, "brute_g is limited to 12 vertices and in-degree 8");
  const EdgeSet all_in = d.in_edges(v);
  const std::vector<Edge> in(all_in.begin(), all_in.end());
  const auto candidates = g_candidates(d, v, in);
  std::vector<EdgeSet> family;
  for (Mask code = 0; code < (Mask{1} << in.size()); ++code) {
    std::vector<std::vector<Path>> slots;
    EdgeSet chosen;
    for (std::size_t k = 0; k < in.size(); ++k)
      if (code >> k & 1) {
        slots.push_back(candidates[k]);
        chosen.insert(in[k]);
      }
    if (find_system(slots, bit(d.root()) | bit(v))) family.push_back(std::move(chosen));
  }
  std::sort(family.begin(), family.end());
  for (const EdgeSet& member : family)
    for (const Edge& e : member) {
      EdgeSet smaller = member;
      smaller.erase(e);
      if (!std::binary_search(family.begin(), family.end(), smaller))
        fail(ErrorCode::kInternal, "G is not closed under subsets");
    }
  return family;
}

RootedDigraph gen_random(std::size_t n, double p, std::uint64_t seed) {
  if (n < 1) fail(ErrorCode::kPreconditionViolated, "at least one vertex is required");
  if (!(p >= 0.0 && p <= 1.0)) fail(ErrorCode::kPreconditionViolated, "p must lie in [0, 1]");
  const std::size_t width = std::to_string(n > 1 ? n - 1 : 1).size();
  std::vector<std::string> names{"r"};
  for (std::size_t i = 1; i < n; ++i) {
    std::string digits = std::to_string(i);
    names.push_back("v" + std::string(width - digits.size(), '0') + digits);
  }
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j)
      if (i != j && coin(rng)) edges.emplace_back(names[i], names[j]);
  return build_digraph(names, edges, "r");
}

}  // namespace vflame::oracle
