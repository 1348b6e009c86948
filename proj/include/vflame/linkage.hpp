#pragma once

#include <optional>
#include <vector>

#include "vflame/digraph.hpp"
#include "vflame/menger.hpp"
#include "vflame/path.hpp"

namespace vflame {

// Linkage of two disjoint systems of X->Y paths: the result is a disjoint
// system of X->Y paths starting at every start of P and ending at every end
// of Q, each member lying in P or Q or being a splice P z Q.
// Errors: kNotDisjoint, kNotXYPaths.
PathSystem pym_merge(const RootedDigraph& d, const PathSystem& p, const PathSystem& q,
                     const VertexSet& x, const VertexSet& y);

// The rerouting behind pym_merge, without validation or fallback. Every Q
// keeps a switch index and its tail runs from there on. Each P is cut at its
// first vertex on a tail and continues along that tail. While a tail is hit
// by several P its switch index jumps to the latest hit. Unhit tails are
// whole Q paths at the fixed point.
std::vector<Path> pym_reroute(const std::vector<Path>& p, const std::vector<Path>& q);

// Same contract as pym_merge, found by exhaustive search over splice
// assignments. Exponential; used as the fallback of pym_merge and by tests.
std::optional<PathSystem> pym_merge_exhaustive(const PathSystem& p, const PathSystem& q,
                                               const VertexSet& x, const VertexSet& y);

// P links S to v and Q is a v-infan with V(Q) intersect S = V^-(Q). Returns a
// v-infan R with V^-(R) = S covering E^+(Q).
PathSystem pym_infan(const RootedDigraph& d, const PathSystem& p, const PathSystem& q, Vertex v,
                     const VertexSet& s);

// As pym_infan but S may contain r and paths of P may share r. The result
// has pairwise intersections (minus v) inside {r} and covers
// V^-(P) together with E^+(Q).
PathSystem pym_rooted(const RootedDigraph& d, const PathSystem& p, const PathSystem& q,
                      const VertexSet& s, Vertex v);

// A member of P_D(v, S) whose last edges contain I - rv. When no witness for
// I in G_D(v) is supplied one is computed. Errors: kNotAnEMSeparation,
// kNotInG, kEdgeNotIngoing.
PathSystem cover_extension(const RootedDigraph& d, Vertex v, const VertexSet& s, const EdgeSet& i,
                           const std::optional<PathSystem>& i_witness = std::nullopt);

// Structural checks shared by the operations above and the oracle suite.
bool is_xy_path(const Path& p, const VertexSet& x, const VertexSet& y);
// Every path of r lies in p or q or equals P z Q for some members and z.
bool has_splice_shape(const std::vector<Path>& r, const std::vector<Path>& p,
                      const std::vector<Path>& q);
// Disjoint X->Y system with V^-(r) >= V^-(p) and V^+(r) >= V^+(q) and the
// splice shape.
bool satisfies_pym(const std::vector<Path>& r, const std::vector<Path>& p,
                   const std::vector<Path>& q, const VertexSet& x, const VertexSet& y);
// R is in P_D(v, S): internally disjoint r->v paths of D - rv, each meeting S
// in exactly one internal vertex, the choices enumerating S.
bool is_orthogonal_system(const RootedDigraph& d, Vertex v, const VertexSet& s,
                          const PathSystem& r);

}  // namespace vflame
