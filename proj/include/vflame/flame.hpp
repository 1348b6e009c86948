#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vflame/digraph.hpp"
#include "vflame/menger.hpp"
#include "vflame/path.hpp"

namespace vflame {

// Membership of an in-edge set I of v in G_D(v): a witness is an internally
// disjoint r->v system whose last edges are exactly I.
struct GMembership {
  std::optional<PathSystem> witness;
  // On refusal: measured in D restricted at v to I - rv, minus rv.
  MengerDeficiency deficiency;

  bool member() const { return witness.has_value(); }
};

// Errors: kPreconditionViolated (v is the root), kEdgeNotIngoing.
GMembership g_membership(const RootedDigraph& d, Vertex v, const EdgeSet& i);

struct FlameVertexReport {
  Vertex vertex = 0;
  GMembership membership;  // of in_D(vertex)
};

struct FlameReport {
  std::vector<FlameVertexReport> vertices;  // every v != r, in global order
  bool flame = true;
  // Finite digraphs: G_D(v) is closed under subsets, so the two coincide.
  bool quasi_flame = true;

  const FlameVertexReport& at(Vertex v) const;
};

FlameReport flame_check(const RootedDigraph& d);

struct LargenessReport {
  bool large = false;
  bool root_edges_kept = false;
  std::vector<Vertex> kappa_drops;      // v with kappa_L(r,v) < kappa_D(r,v)
  bool bubble_criterion = false;        // tail of every deleted edge in B_{L,head}
  std::vector<Edge> bubble_violations;  // deleted edges failing it
};

// Errors: kNotSpanning when L is not a spanning subdigraph of D; kInternal
// if the connectivity and bubble criteria disagree.
LargenessReport largeness_check(const RootedDigraph& d, const RootedDigraph& l);

// A large vertex-flame of D with indeg_L(v) = kappa_L(r,v) = kappa_D(r,v).
// One sweep in global order replaces the in-edges of each vertex by the last
// edges of a maximum system, which keeps every smallest separation intact.
RootedDigraph lovasz_reduce(const RootedDigraph& d);

// Reference reduction: delete the first in-edge (global order) of a vertex
// with surplus in-degree whose removal keeps every kappa, until none exists.
// Quadratic in |E| times a flow per vertex; meant for small inputs.
RootedDigraph lovasz_reduce_greedy(const RootedDigraph& d);

struct NoCollapseResult {
  RootedDigraph reduced;  // L restricted at v to E^+(witness)
  PathSystem witness;     // in P_L(v, S_{L,v})
};

// Errors: kPreconditionViolated (v is the root); kInternal when a
// postcondition (largeness, pointwise equal smallest separations) fails.
NoCollapseResult no_collapse_step(const RootedDigraph& l, Vertex v);

// Smallest Erdos-Menger separation of every non-root vertex.
std::map<Vertex, VertexSet> smallest_separation_map(const RootedDigraph& d);

struct OmegaStep {
  Vertex vertex = 0;
  VertexSet separator;           // S_{L_n, v}
  EdgeSet protected_edges;       // F_n at v
  PathSystem witness;            // Q_n
};

struct OmegaRecursionState {
  std::size_t step = 0;
  RootedDigraph current;                 // L_n
  std::vector<OmegaStep> committed;      // steps k < n
  std::map<Vertex, EdgeSet> ledger;      // F: union of in_{Q_k}(u) over k < n
  std::vector<RootedDigraph> layers;     // L_0 ... L_n
};

struct OmegaResult {
  RootedDigraph flame;
  OmegaRecursionState state;
};

// Errors: kNotAFlame (D fails flame_check), kPreconditionViolated (order is
// not an enumeration of V - r), kLedgerNotInG.
OmegaResult omega_construct(const RootedDigraph& d, const std::vector<Vertex>& order);

struct CertificateEntry {
  Vertex vertex = 0;
  VertexSet separator;  // S_v
  // P_v, without the one-edge path rv. Kept as a plain list so that a
  // damaged certificate still loads and fails verification instead.
  std::vector<Path> paths;
  bool rv_present = false;

  friend bool operator==(const CertificateEntry&, const CertificateEntry&) = default;
};

struct FlameCertificate {
  RootedDigraph base;   // D
  RootedDigraph flame;  // L
  std::vector<CertificateEntry> entries;  // sorted by vertex
};

// Errors: kNotLarge, kNotAFlame.
FlameCertificate certify(const RootedDigraph& d, const RootedDigraph& l);

struct VertexVerdict {
  Vertex vertex = 0;
  std::vector<std::string> reasons;  // empty when the entry passes
  std::optional<Path> evidence;      // first failing path or an uncut r->v path of D

  bool ok() const { return reasons.empty(); }
};

struct CertificateReport {
  std::vector<std::string> global_reasons;
  std::vector<VertexVerdict> vertices;

  bool ok() const;
  const VertexVerdict* find(Vertex v) const;
};

// Checks every certificate invariant from scratch, using only path checks and
// reachability in D.
CertificateReport verify_certificate(const FlameCertificate& cert);

}  // namespace vflame
