#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "vflame/bubbles.hpp"
#include "vflame/digraph.hpp"
#include "vflame/path.hpp"

// Exponential reference implementations. They share no code with the flow
// based operations: every answer comes from subset enumeration and
// exhaustive path-system search.
namespace vflame::oracle {

struct BruteKappa {
  std::size_t kappa = 0;
  PathSystem system;  // includes the one-edge path rv when present
};

// Errors: kTooLarge past 16 non-root vertices.
BruteKappa brute_kappa(const RootedDigraph& d, Vertex v);

struct BruteSeparations {
  std::vector<VertexSet> all;  // sorted
  VertexSet minimum;           // S_{D,v}
  VertexSet maximum;           // T_{D,v}
};

// Errors: kTooLarge past 16 non-root vertices.
BruteSeparations brute_separations(const RootedDigraph& d, Vertex v);

// A member of P_D(v, S) by exhaustive search, if any.
std::optional<PathSystem> brute_orthogonal_system(const RootedDigraph& d, Vertex v,
                                                  const VertexSet& s);

struct BruteRegions {
  std::vector<VertexSet> bubbles;       // every v-bubble
  std::vector<VertexSet> anti_bubbles;  // every anti-bubble
  VertexSet largest_bubble;             // B_{D,v}
  VertexSet smallest_anti_bubble;       // A_{D,v}
};

// Errors: kTooLarge past 16 non-root vertices.
BruteRegions brute_regions(const RootedDigraph& d, Vertex v);

bool brute_is_bubble(const RootedDigraph& d, Vertex v, const VertexSet& b);
bool brute_is_anti_bubble(const RootedDigraph& d, const VertexSet& a);

// r-fan onto U, by exhaustive search.
std::optional<PathSystem> brute_fan(const RootedDigraph& d, const VertexSet& u);
// v-infan from X (paths meet X only in their first vertex), exhaustively.
std::optional<PathSystem> brute_infan(const RootedDigraph& d, const VertexSet& x, Vertex v);

// Every I in G_D(v), sorted. Errors: kTooLarge past in-degree 8 or 12
// vertices; kInternal if the family is not closed under subsets.
std::vector<EdgeSet> brute_g(const RootedDigraph& d, Vertex v);
bool brute_in_g(const RootedDigraph& d, Vertex v, const EdgeSet& i);

// Deterministic for a seed: root "r", others "v" followed by a zero-padded
// index; each ordered pair not entering r becomes an edge with probability p.
RootedDigraph gen_random(std::size_t n, double p, std::uint64_t seed);

enum class LemmaId {
  kNoCollapse,
  kBubbleUnite,
  kPymShape,
  kAugWalk,
  kGQuasiAddOne,
  kLinkedPreserved,
  kQuasiPreserved,
  kLargestEmsep,
};

std::string_view to_string(LemmaId id);
std::optional<LemmaId> lemma_from_string(std::string_view name);
const std::vector<LemmaId>& all_lemmas();

struct NoCollapseParams {
  Vertex v = 0;
};
struct BubbleUniteParams {
  std::vector<ChainLink> chain;
};
struct PymShapeParams {
  PathSystem p;
  PathSystem q;
  VertexSet x;
  VertexSet y;
};
struct AugWalkParams {
  VertexSet x;
  Vertex v = 0;
  PathSystem infan;
};
struct GQuasiAddOneParams {
  Vertex w = 0;
  Edge uv;
};
struct LinkedPreservedParams {
  RootedDigraph large;  // L
  VertexSet u;
};
struct QuasiPreservedParams {
  RootedDigraph large;  // L
};
struct LargestEmsepParams {
  Vertex v = 0;
  EdgeSet kept;  // I
};

using LemmaParams =
    std::variant<NoCollapseParams, BubbleUniteParams, PymShapeParams, AugWalkParams,
                 GQuasiAddOneParams, LinkedPreservedParams, QuasiPreservedParams,
                 LargestEmsepParams>;

struct LemmaInstance {
  RootedDigraph digraph;
  LemmaParams params;

  LemmaId id() const { return static_cast<LemmaId>(params.index()); }
};

struct LemmaOutcome {
  bool passed = false;
  std::string counterexample;  // empty on pass
};

// Validates the hypotheses (kHypothesisViolated) and then checks the
// conclusion by brute force.
LemmaOutcome lemma_check(const LemmaInstance& instance);

// A random instance meeting the hypotheses of `id`, or nothing when this
// seed does not produce one.
std::optional<LemmaInstance> random_instance(LemmaId id, std::size_t n, std::uint64_t seed);

struct SuiteResult {
  std::size_t checked = 0;
  std::size_t seeds_tried = 0;
  std::vector<std::pair<LemmaInstance, LemmaOutcome>> failures;
};

// Checks `count` instances drawn from seeds first_seed, first_seed + 1, ...
// skipping seeds without an instance, up to 50 * count seeds.
SuiteResult run_lemma_suite(LemmaId id, std::size_t n, std::size_t count,
                            std::uint64_t first_seed = 1);

}  // namespace vflame::oracle
