#include "vflame/linkage.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "vflame/flame.hpp"

namespace vflame {

namespace {

void require_xy_system(const RootedDigraph* d, const PathSystem& s, const VertexSet& x,
                       const VertexSet& y, const char* label) {
  if (!is_disjoint(s.paths()))
    fail(ErrorCode::kNotDisjoint, std::string(label) + " is not a disjoint system");
  for (const Path& path : s) {
    if (!is_xy_path(path, x, y))
      fail(ErrorCode::kNotXYPaths, std::string(label) + " contains a path that is not X->Y");
    if (d && !is_path_in(*d, path))
      fail(ErrorCode::kNotXYPaths, std::string(label) + " contains a path missing from D");
  }
}

bool all_paths_in(const RootedDigraph& d, const PathSystem& s) { return s.lies_in(d); }

// Virtual ids used to split v (one copy per last edge) and r (one copy per
// first edge). They live above every real vertex index.
struct Splitter {
  std::size_t n;
  Vertex v;
  Vertex root;
  bool split_root;

  Vertex head_copy(Vertex tail) const { return static_cast<Vertex>(n + tail); }
  Vertex root_copy(Vertex second) const { return static_cast<Vertex>(2 * n + second); }

  Path split(const Path& p) const {
    Path out = p;
    if (out.size() >= 2 && out.last() == v) out.vertices.back() = head_copy(out.vertices[out.size() - 2]);
    if (split_root && out.size() >= 2 && out.first() == root) out.vertices.front() = root_copy(out.vertices[1]);
    return out;
  }
  Path join(const Path& p) const {
    Path out = p;
    for (Vertex& w : out.vertices) {
      if (w >= 2 * n) w = root;
      else if (w >= n) w = v;
    }
    return out;
  }
};

std::vector<Path> split_all(const Splitter& s, const PathSystem& sys) {
  std::vector<Path> out;
  for (const Path& p : sys) out.push_back(s.split(p));
  return out;
}

}  // namespace

std::vector<Path> pym_reroute(const std::vector<Path>& p, const std::vector<Path>& q) {
  std::vector<std::size_t> start(q.size(), 0);
  struct Hit {
    std::size_t q_index;
    std::size_t q_pos;
    std::size_t p_pos;
  };
  std::vector<std::optional<Hit>> hits(p.size());
  while (true) {
    std::map<Vertex, std::pair<std::size_t, std::size_t>> on_tail;
    for (std::size_t j = 0; j < q.size(); ++j)
      for (std::size_t k = start[j]; k < q[j].size(); ++k) on_tail[q[j].vertices[k]] = {j, k};
    std::vector<std::vector<std::size_t>> hitters(q.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      hits[i].reset();
      for (std::size_t k = 0; k < p[i].size(); ++k) {
        auto it = on_tail.find(p[i].vertices[k]);
        if (it == on_tail.end()) continue;
        hits[i] = Hit{it->second.first, it->second.second, k};
        hitters[it->second.first].push_back(i);
        break;
      }
    }
    bool moved = false;
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (hitters[j].size() < 2) continue;
      std::size_t latest = start[j];
      for (std::size_t i : hitters[j]) latest = std::max(latest, hits[i]->q_pos);
      if (latest != start[j]) {
        start[j] = latest;
        moved = true;
      }
    }
    if (!moved) break;
  }

  std::vector<Path> result;
  std::vector<char> tail_used(q.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!hits[i]) {
      result.push_back(p[i]);
      continue;
    }
    const Hit& h = *hits[i];
    tail_used[h.q_index] = 1;
    Path spliced({p[i].vertices.begin(), p[i].vertices.begin() + static_cast<std::ptrdiff_t>(h.p_pos)});
    spliced.vertices.insert(spliced.vertices.end(),
                            q[h.q_index].vertices.begin() + static_cast<std::ptrdiff_t>(h.q_pos),
                            q[h.q_index].vertices.end());
    result.push_back(std::move(spliced));
  }
  for (std::size_t j = 0; j < q.size(); ++j)
    if (!tail_used[j] && start[j] == 0) result.push_back(q[j]);
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

bool is_xy_path(const Path& p, const VertexSet& x, const VertexSet& y) {
  if (p.empty()) return false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Vertex w = p.vertices[i];
    if ((i == 0) != x.contains(w)) return false;
    if ((i + 1 == p.size()) != y.contains(w)) return false;
  }
  return true;
}

bool has_splice_shape(const std::vector<Path>& r, const std::vector<Path>& p,
                      const std::vector<Path>& q) {
  for (const Path& path : r) {
    if (std::find(p.begin(), p.end(), path) != p.end()) continue;
    if (std::find(q.begin(), q.end(), path) != q.end()) continue;
    bool found = false;
    for (const Path& a : p) {
      for (const Path& b : q) {
        for (Vertex z : a.vertices) {
          if (!b.contains(z)) continue;
          try {
            if (concat_paths(a, b, z) == path) found = true;
          } catch (const Error&) {
          }
          if (found) break;
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) return false;
  }
  return true;
}

bool satisfies_pym(const std::vector<Path>& r, const std::vector<Path>& p,
                   const std::vector<Path>& q, const VertexSet& x, const VertexSet& y) {
  if (!is_disjoint(r)) return false;
  VertexSet starts, ends;
  for (const Path& path : r) {
    if (!is_xy_path(path, x, y)) return false;
    starts.insert(path.first());
    ends.insert(path.last());
  }
  for (const Path& path : p)
    if (!starts.contains(path.first())) return false;
  for (const Path& path : q)
    if (!ends.contains(path.last())) return false;
  return has_splice_shape(r, p, q);
}

std::optional<PathSystem> pym_merge_exhaustive(const PathSystem& p, const PathSystem& q,
                                               const VertexSet& x, const VertexSet& y) {
  const auto& ps = p.paths();
  const auto& qs = q.paths();
  std::vector<std::vector<Path>> options(ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i) {
    std::set<Path> unique{ps[i]};
    for (const Path& b : qs)
      for (Vertex z : ps[i].vertices) {
        if (!b.contains(z)) continue;
        try {
          Path spliced = concat_paths(ps[i], b, z);
          if (is_xy_path(spliced, x, y)) unique.insert(std::move(spliced));
        } catch (const Error&) {
        }
      }
    options[i].assign(unique.begin(), unique.end());
  }

  std::vector<Path> chosen;
  std::set<Vertex> used;
  std::optional<PathSystem> found;
  auto finish = [&]() -> bool {
    std::vector<Path> r = chosen;
    std::set<Vertex> taken = used;
    VertexSet ends;
    for (const Path& path : r) ends.insert(path.last());
    for (const Path& b : qs) {
      if (ends.contains(b.last())) continue;
      for (Vertex w : b.vertices)
        if (taken.contains(w)) return false;
      r.push_back(b);
      taken.insert(b.vertices.begin(), b.vertices.end());
    }
    if (!satisfies_pym(r, ps, qs, x, y)) return false;
    found = PathSystem(std::move(r), PathMode::kDisjoint);
    return true;
  };
  auto search = [&](auto&& self, std::size_t i) -> bool {
    if (i == ps.size()) return finish();
    for (const Path& option : options[i]) {
      if (std::any_of(option.vertices.begin(), option.vertices.end(),
                      [&](Vertex w) { return used.contains(w); }))
        continue;
      chosen.push_back(option);
      used.insert(option.vertices.begin(), option.vertices.end());
      if (self(self, i + 1)) return true;
      for (Vertex w : option.vertices) used.erase(w);
      chosen.pop_back();
    }
    return false;
  };
  search(search, 0);
  return found;
}

PathSystem pym_merge(const RootedDigraph& d, const PathSystem& p, const PathSystem& q,
                     const VertexSet& x, const VertexSet& y) {
  require_xy_system(&d, p, x, y, "P");
  require_xy_system(&d, q, x, y, "Q");
  std::vector<Path> r = pym_reroute(p.paths(), q.paths());
  if (satisfies_pym(r, p.paths(), q.paths(), x, y)) return PathSystem(std::move(r), PathMode::kDisjoint);
  auto fallback = pym_merge_exhaustive(p, q, x, y);
  if (!fallback) fail(ErrorCode::kInternal, "no linkage found for a valid Pym instance");
  return *fallback;
}

PathSystem pym_infan(const RootedDigraph& d, const PathSystem& p, const PathSystem& q, Vertex v,
                     const VertexSet& s) {
  if (s.contains(v)) fail(ErrorCode::kNotXYPaths, "the target lies in S");
  if (!is_infan(p.paths(), v) || !is_infan(q.paths(), v))
    fail(ErrorCode::kNotDisjoint, "P and Q must be v-infans");
  if (p.starts() != s || p.size() != s.size())
    fail(ErrorCode::kNotXYPaths, "P must link S to v");
  if (!all_paths_in(d, p) || !all_paths_in(d, q))
    fail(ErrorCode::kNotXYPaths, "P and Q must be path systems of D");
  for (const Path& path : q)
    for (std::size_t i = 0; i < path.size(); ++i)
      if ((i == 0) != s.contains(path.vertices[i]))
        fail(ErrorCode::kNotXYPaths, "Q must meet S exactly in its first vertices");

  const Splitter splitter{d.vertex_count(), v, d.root(), false};
  std::vector<Path> ps = split_all(splitter, p);
  std::vector<Path> qs = split_all(splitter, q);
  VertexSet y;
  for (Vertex u : d.in_neighbors(v)) y.insert(splitter.head_copy(u));
  std::vector<Path> r = pym_reroute(ps, qs);
  if (!satisfies_pym(r, ps, qs, s, y)) {
    auto fallback = pym_merge_exhaustive(PathSystem(ps, PathMode::kDisjoint),
                                         PathSystem(qs, PathMode::kDisjoint), s, y);
    if (!fallback) fail(ErrorCode::kInternal, "no linkage found for a valid infan instance");
    r = fallback->paths();
  }
  std::vector<Path> joined;
  for (const Path& path : r) joined.push_back(splitter.join(path));
  PathSystem result(std::move(joined), PathMode::kInternallyDisjoint);
  const EdgeSet covered = result.last_edges();
  for (const Edge& e : q.last_edges())
    if (!covered.contains(e)) fail(ErrorCode::kInternal, "linkage lost an edge of E+(Q)");
  if (result.starts() != s) fail(ErrorCode::kInternal, "linkage lost a start vertex");
  return result;
}

PathSystem pym_rooted(const RootedDigraph& d, const PathSystem& p, const PathSystem& q,
                      const VertexSet& s, Vertex v) {
  const Vertex r = d.root();
  if (s.contains(v)) fail(ErrorCode::kNotXYPaths, "the target lies in S");
  if (!is_root_shared(p.paths(), r) || !is_infan(q.paths(), v))
    fail(ErrorCode::kNotDisjoint, "P must share only r (besides v) and Q must be a v-infan");
  if (!all_paths_in(d, p) || !all_paths_in(d, q))
    fail(ErrorCode::kNotXYPaths, "P and Q must be path systems of D");
  for (const PathSystem* sys : {&p, &q})
    for (const Path& path : *sys) {
      if (path.last() != v) fail(ErrorCode::kNotXYPaths, "paths must end at v");
      for (std::size_t i = 0; i < path.size(); ++i)
        if ((i == 0) != s.contains(path.vertices[i]))
          fail(ErrorCode::kNotXYPaths, "paths must meet S exactly in their first vertex");
    }

  const Splitter splitter{d.vertex_count(), v, r, true};
  std::vector<Path> ps = split_all(splitter, p);
  std::vector<Path> qs = split_all(splitter, q);
  VertexSet x;
  for (Vertex w : s) {
    if (w != r) x.insert(w);
    else
      for (Vertex second : d.out_neighbors(r)) x.insert(splitter.root_copy(second));
  }
  VertexSet y;
  for (Vertex u : d.in_neighbors(v)) y.insert(splitter.head_copy(u));
  std::vector<Path> rs = pym_reroute(ps, qs);
  if (!satisfies_pym(rs, ps, qs, x, y)) {
    auto fallback = pym_merge_exhaustive(PathSystem(ps, PathMode::kDisjoint),
                                         PathSystem(qs, PathMode::kDisjoint), x, y);
    if (!fallback) fail(ErrorCode::kInternal, "no linkage found for a valid rooted instance");
    rs = fallback->paths();
  }
  std::vector<Path> joined;
  for (const Path& path : rs) joined.push_back(splitter.join(path));
  PathSystem result(std::move(joined), PathMode::kRootShared, r);
  const VertexSet starts = result.starts();
  for (Vertex w : p.starts())
    if (!starts.contains(w)) fail(ErrorCode::kInternal, "linkage lost a start vertex");
  const EdgeSet covered = result.last_edges();
  for (const Edge& e : q.last_edges())
    if (!covered.contains(e)) fail(ErrorCode::kInternal, "linkage lost an edge of E+(Q)");
  return result;
}

bool is_orthogonal_system(const RootedDigraph& d, Vertex v, const VertexSet& s,
                          const PathSystem& r) {
  const RootedDigraph reduced = without_root_edge(d, v);
  if (!is_internally_disjoint(r.paths())) return false;
  VertexSet chosen;
  for (const Path& path : r) {
    if (path.size() < 3 || path.first() != d.root() || path.last() != v) return false;
    if (!is_path_in(reduced, path)) return false;
    std::size_t hits = 0;
    for (std::size_t i = 1; i + 1 < path.size(); ++i)
      if (s.contains(path.vertices[i])) {
        ++hits;
        chosen.insert(path.vertices[i]);
      }
    if (hits != 1) return false;
  }
  return chosen == s && r.size() == s.size();
}

PathSystem cover_extension(const RootedDigraph& d, Vertex v, const VertexSet& s, const EdgeSet& i,
                           const std::optional<PathSystem>& i_witness) {
  if (!is_em_separation(d, v, s))
    fail(ErrorCode::kNotAnEMSeparation,
         format_set(d, s) + " is not an Erdos-Menger separation for " + d.name(v));
  PathSystem witness;
  if (i_witness) {
    witness = *i_witness;
    if (!witness.lies_in(d) || !is_internally_disjoint(witness.paths()) || witness.has_trivial_path() ||
        witness.last_edges() != i)
      fail(ErrorCode::kNotInG, "supplied witness does not realise I");
  } else {
    GMembership g = g_membership(d, v, i);
    if (!g.member()) fail(ErrorCode::kNotInG, "the edge set is not realisable at " + d.name(v));
    witness = *g.witness;
  }
  if (s.empty()) {
    for (const Edge& e : i)
      if (e.tail != d.root()) fail(ErrorCode::kInternal, "unreachable target with a realisable in-edge");
    return PathSystem{};
  }

  const PathSystem orthogonal = orthogonal_system(d, v, s);
  std::map<Vertex, Path> head_of;  // S-vertex -> initial segment up to it
  std::vector<Path> tails;
  for (const Path& p : orthogonal) {
    auto it = std::find_if(p.vertices.begin(), p.vertices.end(), [&](Vertex w) { return s.contains(w); });
    head_of.emplace(*it, p.prefix_to(*it));
    tails.push_back(p.suffix_from(*it));
  }
  std::vector<Path> terminal;
  for (const Path& q : witness) {
    if (q.size() == 2 && q.first() == d.root()) continue;  // the edge rv
    auto it = std::find_if(q.vertices.rbegin(), q.vertices.rend(), [&](Vertex w) { return s.contains(w); });
    if (it == q.vertices.rend()) fail(ErrorCode::kInternal, "witness path avoids the separation");
    terminal.push_back(q.suffix_from(*it));
  }
  const PathSystem merged =
      pym_infan(d, PathSystem(std::move(tails), PathMode::kInternallyDisjoint),
                PathSystem(std::move(terminal), PathMode::kInternallyDisjoint), v, s);
  std::vector<Path> extended;
  for (const Path& tail : merged) {
    Path full = head_of.at(tail.first());
    full.vertices.insert(full.vertices.end(), tail.vertices.begin() + 1, tail.vertices.end());
    extended.push_back(std::move(full));
  }
  PathSystem result(std::move(extended), PathMode::kInternallyDisjoint);
  if (!is_orthogonal_system(d, v, s, result))
    fail(ErrorCode::kInternal, "extended system is not orthogonal to S");
  const EdgeSet covered = result.last_edges();
  for (const Edge& e : i)
    if (e.tail != d.root() && !covered.contains(e))
      fail(ErrorCode::kInternal, "extended system misses an edge of I");
  return result;
}

}  // namespace vflame
