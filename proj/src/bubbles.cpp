#include "vflame/bubbles.hpp"

#include <algorithm>
#include <string>

namespace vflame {

namespace {

std::vector<char> mask_of(const RootedDigraph& d, const VertexSet& s) {
  std::vector<char> mask(d.vertex_count(), 0);
  for (Vertex v : s) mask[v] = 1;
  return mask;
}

bool contains_all(const VertexSet& big, const VertexSet& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

VertexSet anti_bubble_seed(const RootedDigraph& d, Vertex v) {
  VertexSet seed = in_neighbors_without_root(d, v);
  seed.insert(v);
  return seed;
}

RegionResult is_bubble(const RootedDigraph& d, Vertex v, const VertexSet& b) {
  const Boundary bd = boundary(d, b);
  if (!b.contains(v)) fail(ErrorCode::kPreconditionViolated, "the center must lie in the set");
  VertexSet sources = bd.entrance;
  sources.erase(v);
  LinkResult link = link_set_to_vertex(d, sources, v, mask_of(d, b));
  RegionResult result;
  result.deficiency = link.deficiency;
  if (!link.linked()) return result;
  std::vector<Path> paths = link.system->paths();
  if (bd.entrance.contains(v)) paths.push_back(Path({v}));
  result.region = RegionWitness{RegionKind::kBubble, v, b,
                                PathSystem(std::move(paths), PathMode::kInternallyDisjoint)};
  return result;
}

RegionWitness cut_side(const RootedDigraph& d, Vertex v, const Separation& s) {
  if (!is_em_separation(d, v, s.set))
    fail(ErrorCode::kNotAnEMSeparation,
         format_set(d, s.set) + " is not an Erdos-Menger separation for " + d.name(v));
  const RootedDigraph reduced = without_root_edge(d, v);
  auto seen = reachable_from(reduced, d.root(), s.set);
  VertexSet side = s.set;
  for (Vertex u = 0; u < d.vertex_count(); ++u)
    if (u != d.root() && !seen[u]) side.insert(u);

  const PathSystem orthogonal = s.witness ? *s.witness : orthogonal_system(d, v, s.set);
  std::vector<Path> tails;
  for (const Path& p : orthogonal) {
    auto it = std::find_if(p.vertices.begin(), p.vertices.end(),
                           [&](Vertex w) { return s.set.contains(w); });
    if (it == p.vertices.end()) fail(ErrorCode::kInternal, "orthogonal path misses S");
    tails.push_back(p.suffix_from(*it));
  }
  if (boundary(d, side).entrance.contains(v)) tails.push_back(Path({v}));
  return {RegionKind::kBubble, v, std::move(side),
          PathSystem(std::move(tails), PathMode::kInternallyDisjoint)};
}

RegionWitness cut_side(const RootedDigraph& d, Vertex v, const VertexSet& s) {
  return cut_side(d, v, Separation{v, s, std::nullopt});
}

RegionWitness largest_bubble(const RootedDigraph& d, Vertex v) {
  return cut_side(d, v, extreme_separations(d, v).near_root);
}

RegionWitness unite_bubbles(const RootedDigraph& d, const std::vector<ChainLink>& chain) {
  if (chain.empty()) fail(ErrorCode::kPreconditionViolated, "empty bubble chain");
  const Vertex v0 = chain.front().center;
  VertexSet united;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const ChainLink& link = chain[i];
    if (!is_bubble(d, link.center, link.set).accepted())
      fail(ErrorCode::kPreconditionViolated,
           "link " + std::to_string(i) + " is not a " + d.name(link.center) + "-bubble");
    if (i > 0 && link.center != v0 && !boundary(d, united).interior.contains(link.center))
      fail(ErrorCode::kChainConditionViolated,
           "index " + std::to_string(i) + ": center " + d.name(link.center) +
               " is neither the first center nor interior to the union so far");
    united.insert(link.set.begin(), link.set.end());
  }
  RegionResult merged = is_bubble(d, v0, united);
  if (!merged.accepted())
    fail(ErrorCode::kInternal, "union of a valid bubble chain is not a bubble");
  return *merged.region;
}

RegionResult is_anti_bubble(const RootedDigraph& d, const VertexSet& a) {
  const Boundary bd = boundary(d, a);
  LinkResult link = linked_from_root(d, bd.entrance);
  RegionResult result;
  result.deficiency = link.deficiency;
  if (link.linked())
    result.region = RegionWitness{RegionKind::kAntiBubble, d.root(), a, *link.system};
  return result;
}

RegionWitness smallest_anti_bubble(const RootedDigraph& d, Vertex v, AntiBubbleSearch search) {
  const ExtremeSeparations ext = extreme_separations(d, v);
  const VertexSet seed = anti_bubble_seed(d, v);
  VertexSet current = cut_side(d, v, ext.near_sink).set;

  if (search == AntiBubbleSearch::kClosure) {
    // Between T and B_{D,T,v} every anti-bubble has its entrance inside T + v,
    // since a further entrance vertex would need a fan path through T. So the
    // smallest one is T plus everything reaching v in D - rv while avoiding T.
    const RootedDigraph reduced = without_root_edge(d, v);
    VertexSet closure = ext.near_sink.set;
    std::vector<Vertex> stack{v};
    closure.insert(v);
    while (!stack.empty()) {
      const Vertex w = stack.back();
      stack.pop_back();
      for (Vertex u : reduced.in_neighbors(w))
        if (u != d.root() && closure.insert(u).second && !ext.near_sink.set.contains(u))
          stack.push_back(u);
    }
    current = std::move(closure);
  } else {
    std::vector<Vertex> optional_part;
    for (Vertex x : current)
      if (!seed.contains(x)) optional_part.push_back(x);
    if (optional_part.size() > 16)
      fail(ErrorCode::kTooLarge, "exact anti-bubble search limited to 16 candidates");
    VertexSet intersection = current;
    const std::uint32_t subsets = 1u << optional_part.size();
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
      VertexSet candidate = seed;
      for (std::size_t i = 0; i < optional_part.size(); ++i)
        if (mask >> i & 1u) candidate.insert(optional_part[i]);
      if (contains_all(candidate, intersection)) continue;  // cannot shrink it
      if (!linked_from_root(d, boundary(d, candidate).entrance).linked()) continue;
      VertexSet next;
      std::set_intersection(intersection.begin(), intersection.end(), candidate.begin(),
                            candidate.end(), std::inserter(next, next.end()));
      intersection = std::move(next);
    }
    current = std::move(intersection);
  }
  RegionResult final_check = is_anti_bubble(d, current);
  if (!final_check.accepted())
    fail(ErrorCode::kInternal, "smallest anti-bubble search produced a non-anti-bubble");
  RegionWitness result = *final_check.region;
  result.center = v;
  return result;
}

}  // namespace vflame
