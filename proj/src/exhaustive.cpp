#include "exhaustive.hpp"

#include <string>
#include <unordered_set>

namespace vflame::detail {

Mask mask_of(const VertexSet& s) {
  Mask m = 0;
  for (Vertex v : s) m |= bit(v);
  return m;
}

Mask mask_of(const Path& p) {
  Mask m = 0;
  for (Vertex v : p.vertices) m |= bit(v);
  return m;
}

VertexSet set_of(Mask m) {
  VertexSet s;
  for (Vertex v = 0; m; ++v, m >>= 1)
    if (m & 1) s.insert(v);
  return s;
}

void require_small(const RootedDigraph& d, std::size_t limit, const char* what) {
  if (d.vertex_count() > 64 || d.vertex_count() - 1 > limit)
    fail(ErrorCode::kTooLarge, std::string(what) + " is limited to " + std::to_string(limit) +
                                   " non-root vertices");
}

std::vector<Path> simple_paths(const RootedDigraph& d, Vertex from, Vertex to, Mask allowed) {
  std::vector<Path> out;
  if (!(allowed & bit(from)) || !(allowed & bit(to))) return out;
  if (from == to) {
    out.push_back(Path({from}));
    return out;
  }
  std::vector<Vertex> stack{from};
  Mask used = bit(from);
  auto dfs = [&](auto&& self, Vertex u) -> void {
    for (Vertex w : d.out_neighbors(u)) {
      if (!(allowed & bit(w)) || (used & bit(w))) continue;
      stack.push_back(w);
      if (w == to) {
        out.push_back(Path(stack));
      } else {
        used |= bit(w);
        self(self, w);
        used &= ~bit(w);
      }
      stack.pop_back();
    }
  };
  dfs(dfs, from);
  return out;
}

std::optional<std::vector<Path>> find_system(const std::vector<std::vector<Path>>& slots,
                                             Mask shared) {
  std::vector<std::vector<Mask>> masks(slots.size());
  for (std::size_t i = 0; i < slots.size(); ++i)
    for (const Path& p : slots[i]) masks[i].push_back(mask_of(p) & ~shared);
  std::vector<std::unordered_set<Mask>> failed(slots.size());
  std::vector<std::size_t> choice(slots.size(), 0);
  auto search = [&](auto&& self, std::size_t i, Mask used) -> bool {
    if (i == slots.size()) return true;
    if (failed[i].contains(used)) return false;
    for (std::size_t k = 0; k < slots[i].size(); ++k) {
      if (masks[i][k] & used) continue;
      choice[i] = k;
      if (self(self, i + 1, used | masks[i][k])) return true;
    }
    failed[i].insert(used);
    return false;
  };
  if (!search(search, 0, 0)) return std::nullopt;
  std::vector<Path> result;
  for (std::size_t i = 0; i < slots.size(); ++i) result.push_back(slots[i][choice[i]]);
  return result;
}

}  // namespace vflame::detail
