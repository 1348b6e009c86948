#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "vflame/digraph.hpp"
#include "vflame/menger.hpp"
#include "vflame/path.hpp"

namespace vflame {

enum class RegionKind { kBubble, kAntiBubble };

// A vertex set together with the path system certifying its kind:
//  - bubble(v): a v-infan inside D[X] from ent_D(X) - v (plus the trivial
//    path v when v itself is an entrance vertex);
//  - anti-bubble: an r-fan onto ent_D(X).
struct RegionWitness {
  RegionKind kind = RegionKind::kBubble;
  Vertex center = 0;
  VertexSet set;
  PathSystem witness;
};

struct RegionResult {
  std::optional<RegionWitness> region;
  MengerDeficiency deficiency;

  bool accepted() const { return region.has_value(); }
};

// Errors: kRootInSet; kPreconditionViolated when v is not in B.
RegionResult is_bubble(const RootedDigraph& d, Vertex v, const VertexSet& b);

// B_{D,S,v}: S together with every vertex cut off from r by S in D - rv.
// Errors: kNotAnEMSeparation.
RegionWitness cut_side(const RootedDigraph& d, Vertex v, const Separation& s);
RegionWitness cut_side(const RootedDigraph& d, Vertex v, const VertexSet& s);

// B_{D,v}, the inclusion-largest v-bubble.
RegionWitness largest_bubble(const RootedDigraph& d, Vertex v);

struct ChainLink {
  VertexSet set;
  Vertex center = 0;
};

// Union of a chain of bubbles where each later center equals the first one
// or lies in the interior of the union so far. Errors:
// kChainConditionViolated (message names the first offending index),
// kPreconditionViolated when a link is not a bubble or the chain is empty.
RegionWitness unite_bubbles(const RootedDigraph& d, const std::vector<ChainLink>& chain);

// Errors: kRootInSet.
RegionResult is_anti_bubble(const RootedDigraph& d, const VertexSet& a);

enum class AntiBubbleSearch {
  kClosure,  // T_{D,v} plus the vertices reaching v in D - rv around it
  kExact,   // intersection over every candidate subset; kTooLarge past 16 candidates
};

// A_{D,v}: the intersection of all anti-bubbles containing v and its
// in-neighbours in D - rv.
RegionWitness smallest_anti_bubble(const RootedDigraph& d, Vertex v,
                                   AntiBubbleSearch search = AntiBubbleSearch::kClosure);

// {v} together with N^-_{D-rv}(v).
VertexSet anti_bubble_seed(const RootedDigraph& d, Vertex v);

}  // namespace vflame
