#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vflame/digraph.hpp"
#include "vflame/path.hpp"

// Exhaustive path machinery for the oracle suite. Vertex sets are bit masks,
// so every digraph handled here has at most 64 vertices.
namespace vflame::detail {

using Mask = std::uint64_t;

inline Mask bit(Vertex v) { return Mask{1} << v; }
Mask mask_of(const VertexSet& s);
Mask mask_of(const Path& p);
VertexSet set_of(Mask m);

// Throws kTooLarge unless |V - r| <= limit (and |V| <= 64).
void require_small(const RootedDigraph& d, std::size_t limit, const char* what);

// All simple from->to paths whose vertices lie in `allowed`. The target
// appears only as the last vertex; from == to yields the trivial path.
std::vector<Path> simple_paths(const RootedDigraph& d, Vertex from, Vertex to, Mask allowed);

// One path per slot, pairwise vertex-disjoint outside `shared`. Candidates
// are tried in order and failed (slot, used-vertices) states are memoized.
std::optional<std::vector<Path>> find_system(const std::vector<std::vector<Path>>& slots,
                                             Mask shared);

}  // namespace vflame::detail
