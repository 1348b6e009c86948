#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "vflame/digraph.hpp"
#include "vflame/path.hpp"

namespace vflame {

// A vertex set attached to a target v. All separation work happens in D - rv.
struct Separation {
  Vertex target = 0;
  VertexSet set;
  // Internally disjoint r->v paths of D - rv, each meeting `set` in exactly
  // one internal vertex, these choices enumerating `set`.
  std::optional<PathSystem> witness;
};

struct MengerResult {
  std::size_t kappa = 0;
  // Maximum internally disjoint r->v system of D; contains the one-edge path
  // rv whenever rv is an edge.
  PathSystem system;
  // Minimum r-v separators of D - rv. Their size is kappa minus one when rv
  // is an edge and kappa otherwise.
  VertexSet near_root_cut;
  VertexSet near_sink_cut;
};

// Evidence that fewer disjoint paths exist than were asked for.
struct MengerDeficiency {
  std::size_t required = 0;
  std::size_t achieved = 0;
  VertexSet separator;
};

// Result of a linkage query: a fan/infan when linked, otherwise a deficiency.
struct LinkResult {
  std::optional<PathSystem> system;
  MengerDeficiency deficiency;
  // For fans: a subset W of the target set whose Menger value from r is
  // below |W|.
  VertexSet violating;

  bool linked() const { return system.has_value(); }
};

struct AugmentResult {
  bool successful = false;
  // Successful case: the augmented infan.
  PathSystem infan;
  // Unsuccessful case: one vertex v_P of V(P) - v per path P of the input,
  // jointly separating v from X.
  std::vector<std::pair<Path, Vertex>> selection;

  VertexSet selected() const;
};

struct ExtremeSeparations {
  Separation near_root;  // S_{D,v}
  Separation near_sink;  // T_{D,v}
};

enum class SeparationOrder { kLess, kGreater, kEqual, kIncomparable };

// kappa_D(r, v) with a maximum system. kPreconditionViolated if v is the root.
MengerResult kappa_and_system(const RootedDigraph& d, Vertex v);
std::size_t kappa(const RootedDigraph& d, Vertex v);

// One step of the augmenting-walk dichotomy for a v-infan from X.
// kPreconditionViolated when the infan is not a v-infan with
// V(infan) intersect X = V^-(infan), or v lies in X.
AugmentResult augmenting_step(const RootedDigraph& d, const VertexSet& x, Vertex v,
                              const PathSystem& infan);

ExtremeSeparations extreme_separations(const RootedDigraph& d, Vertex v);

// Every r->t path (t in targets) of D meets `s`.
bool separates(const RootedDigraph& d, const VertexSet& s, const VertexSet& targets);

// S is an Erdos-Menger separation for v: a subset of V - r - v separating r
// from v in D - rv whose size equals kappa_{D-rv}(r, v).
bool is_em_separation(const RootedDigraph& d, Vertex v, const VertexSet& s);

// A member of P_D(v, S). kNotAnEMSeparation when S is not one.
PathSystem orthogonal_system(const RootedDigraph& d, Vertex v, const VertexSet& s);

// Compares two Erdos-Menger separations by "S separates T from r in D - rv".
SeparationOrder classify_separation(const RootedDigraph& d, Vertex v, const VertexSet& s,
                                    const VertexSet& t);

// r-fan whose set of last vertices is exactly U. kRootInSet if r is in U.
LinkResult linked_from_root(const RootedDigraph& d, const VertexSet& u);

// v-infan whose set of first vertices is exactly X, optionally confined to
// the vertices flagged in `allowed`. kPreconditionViolated if v is in X.
LinkResult link_set_to_vertex(const RootedDigraph& d, const VertexSet& x, Vertex v,
                              const std::vector<char>& allowed = {});

std::string_view to_string(SeparationOrder order);

}  // namespace vflame
