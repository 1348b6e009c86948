#include <algorithm>
#include <array>
#include <random>
#include <sstream>

#include "exhaustive.hpp"
#include "vflame/bubbles.hpp"
#include "vflame/flame.hpp"
#include "vflame/linkage.hpp"
#include "vflame/menger.hpp"
#include "vflame/oracle.hpp"

namespace vflame::oracle {

using detail::bit;
using detail::find_system;
using detail::Mask;
using detail::mask_of;
using detail::require_small;
using detail::set_of;
using detail::simple_paths;

namespace {

constexpr std::array<std::string_view, 8> kNames = {
    "no_collapse",    "bubble_unite",     "pym_shape",       "aug_walk",
    "g_quasi_add_one", "linked_preserved", "quasi_preserved", "largest_emsep"};

[[noreturn]] void hypothesis(const std::string& what) {
  fail(ErrorCode::kHypothesisViolated, what);
}

LemmaOutcome pass() { return {true, {}}; }
LemmaOutcome failed(std::string why) { return {false, std::move(why)}; }

std::vector<Vertex> non_root(const RootedDigraph& d) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < d.vertex_count(); ++v)
    if (v != d.root()) out.push_back(v);
  return out;
}

bool brute_large(const RootedDigraph& d, const RootedDigraph& l) {
  if (!l.is_subdigraph_of(d)) return false;
  for (Vertex w : d.out_neighbors(d.root()))
    if (!l.has_edge(d.root(), w)) return false;
  for (Vertex v : non_root(d))
    if (brute_kappa(l, v).kappa != brute_kappa(d, v).kappa) return false;
  return true;
}

bool brute_flame(const RootedDigraph& d) {
  for (Vertex v : non_root(d))
    if (!brute_in_g(d, v, d.in_edges(v))) return false;
  return true;
}

// Every X->v path meets S (a start inside S counts as met).
bool cuts_from(const RootedDigraph& d, const VertexSet& x, Vertex v, const VertexSet& s) {
  std::vector<char> seen(d.vertex_count(), 0);
  std::vector<Vertex> stack;
  for (Vertex w : x)
    if (!s.contains(w)) {
      seen[w] = 1;
      stack.push_back(w);
    }
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    if (u == v) return false;
    for (Vertex w : d.out_neighbors(u))
      if (!seen[w] && !s.contains(w)) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  return true;
}

// Plain restatement of the linkage shape, independent of the linkage module.
std::string pym_violation(const std::vector<Path>& r, const PathSystem& p, const PathSystem& q,
                          const VertexSet& x, const VertexSet& y) {
  VertexSet seen, starts, ends;
  for (const Path& path : r) {
    for (std::size_t k = 0; k < path.size(); ++k) {
      const Vertex w = path.vertices[k];
      if (!seen.insert(w).second) return "paths are not disjoint";
      if ((k == 0) != x.contains(w) || (k + 1 == path.size()) != y.contains(w))
        return "a path is not an X->Y path";
    }
    starts.insert(path.first());
    ends.insert(path.last());
  }
  for (const Path& path : p)
    if (!starts.contains(path.first())) return "a start of P is lost";
  for (const Path& path : q)
    if (!ends.contains(path.last())) return "an end of Q is lost";
  for (const Path& path : r) {
    bool shaped = std::find(p.begin(), p.end(), path) != p.end() ||
                  std::find(q.begin(), q.end(), path) != q.end();
    for (const Path& a : p)
      for (const Path& b : q)
        for (std::size_t i = 0; i < a.size() && !shaped; ++i) {
          auto j = b.index_of(a.vertices[i]);
          if (!j) continue;
          std::vector<Vertex> joined(a.vertices.begin(), a.vertices.begin() + i);
          joined.insert(joined.end(), b.vertices.begin() + *j, b.vertices.end());
          shaped = joined == path.vertices;
        }
    if (!shaped) return "a path is neither an input path nor a splice";
  }
  return {};
}

std::string describe(const RootedDigraph& d, const std::string& head,
                     std::initializer_list<std::string> parts = {}) {
  std::ostringstream out;
  out << head;
  for (const std::string& part : parts) out << "; " << part;
  out << "; edges:";
  for (const Edge& e : d.edges()) out << ' ' << format_edge(d, e);
  return out.str();
}

LemmaOutcome check(const RootedDigraph& l, const NoCollapseParams& params) {
  require_small(l, 16, "no_collapse check");
  if (params.v >= l.vertex_count() || params.v == l.root()) hypothesis("v must be a non-root vertex");
  const Vertex v = params.v;
  const VertexSet s = brute_separations(l, v).minimum;
  auto q = brute_orthogonal_system(l, v, s);
  if (!q) return failed(describe(l, "smallest separation at " + l.name(v) + " has no orthogonal system"));
  const RootedDigraph reduced = restrict_in(l, v, q->last_edges());
  for (Vertex u : non_root(l)) {
    if (brute_kappa(reduced, u).kappa != brute_kappa(l, u).kappa)
      return failed(describe(l, "restriction at " + l.name(v) + " drops kappa at " + l.name(u)));
    const VertexSet before = brute_separations(l, u).minimum;
    if (brute_separations(reduced, u).minimum != before)
      return failed(describe(l, "restriction at " + l.name(v) + " moves S at " + l.name(u)));
  }
  try {
    const NoCollapseResult fast = no_collapse_step(l, v);
    for (Vertex u : non_root(l))
      if (extreme_separations(fast.reduced, u).near_root.set != brute_separations(l, u).minimum)
        return failed(describe(l, "fast step disagrees with the brute S-map at " + l.name(u)));
  } catch (const Error& e) {
    return failed(describe(l, std::string("fast step failed: ") + e.what()));
  }
  return pass();
}

LemmaOutcome check(const RootedDigraph& d, const BubbleUniteParams& params) {
  require_small(d, 16, "bubble_unite check");
  if (params.chain.empty()) hypothesis("the chain is empty");
  const Vertex v0 = params.chain.front().center;
  VertexSet united;
  for (std::size_t i = 0; i < params.chain.size(); ++i) {
    const ChainLink& link = params.chain[i];
    if (!brute_is_bubble(d, link.center, link.set)) hypothesis("link " + std::to_string(i) + " is not a bubble");
    if (i > 0 && link.center != v0 && !boundary(d, united).interior.contains(link.center))
      hypothesis("chain condition fails at link " + std::to_string(i));
    united.insert(link.set.begin(), link.set.end());
  }
  if (!brute_is_bubble(d, v0, united))
    return failed(describe(d, "union " + format_set(d, united) + " is not a bubble of " + d.name(v0)));
  try {
    if (unite_bubbles(d, params.chain).set != united)
      return failed(describe(d, "fast union disagrees"));
  } catch (const Error& e) {
    return failed(describe(d, std::string("fast union failed: ") + e.what()));
  }
  return pass();
}

LemmaOutcome check(const RootedDigraph& d, const PymShapeParams& params) {
  for (const PathSystem* sys : {&params.p, &params.q}) {
    if (!is_disjoint(sys->paths())) hypothesis("input system is not disjoint");
    for (const Path& path : *sys)
      if (!is_path_in(d, path) || !is_xy_path(path, params.x, params.y))
        hypothesis("input contains a path that is not an X->Y path of D");
  }
  PathSystem merged;
  try {
    merged = pym_merge(d, params.p, params.q, params.x, params.y);
  } catch (const Error& e) {
    return failed(describe(d, std::string("merge failed: ") + e.what()));
  }
  if (std::string why = pym_violation(merged.paths(), params.p, params.q, params.x, params.y);
      !why.empty())
    return failed(describe(d, why, {format_system(d, merged)}));
  if (!merged.lies_in(d)) return failed(describe(d, "merged system leaves D"));
  if (!pym_merge_exhaustive(params.p, params.q, params.x, params.y))
    return failed(describe(d, "exhaustive search finds no linkage"));
  return pass();
}

LemmaOutcome check(const RootedDigraph& d, const AugWalkParams& params) {
  require_small(d, 16, "aug_walk check");
  const auto& [x, v, infan] = params;
  if (x.contains(v) || !is_infan(infan.paths(), v)) hypothesis("not a v-infan from outside v");
  for (const Path& p : infan) {
    if (!is_path_in(d, p)) hypothesis("infan path is not in D");
    for (std::size_t k = 0; k < p.size(); ++k)
      if ((k == 0) != x.contains(p.vertices[k])) hypothesis("infan must meet X in its starts only");
  }
  bool bigger = false;
  if (x.size() > infan.size()) {
    const std::size_t want = infan.size() + 1;
    for (Mask m = 0; m < (Mask{1} << x.size()) && !bigger; ++m) {
      if (static_cast<std::size_t>(std::popcount(m)) != want) continue;
      VertexSet sub;
      std::size_t k = 0;
      for (Vertex w : x)
        if (m >> k++ & 1) sub.insert(w);
      bigger = brute_infan(d, sub, v).has_value();
    }
  }
  const AugmentResult res = augmenting_step(d, x, v, infan);
  if (res.successful != bigger)
    return failed(describe(d, std::string("augmentation ") + (res.successful ? "succeeded" : "failed") +
                                  " but exhaustive search disagrees"));
  if (res.successful) {
    const auto& q = res.infan;
    if (!is_infan(q.paths(), v) || !q.lies_in(d)) return failed(describe(d, "augmented system is not a v-infan"));
    for (const Path& p : q)
      for (std::size_t k = 0; k < p.size(); ++k)
        if ((k == 0) != x.contains(p.vertices[k])) return failed(describe(d, "augmented path meets X inside"));
    std::size_t p_minus_q = 0, q_minus_p = 0;
    for (const Path& p : infan) p_minus_q += std::find(q.begin(), q.end(), p) == q.end();
    for (const Path& p : q) q_minus_p += std::find(infan.begin(), infan.end(), p) == infan.end();
    if (p_minus_q + 1 != q_minus_p) return failed(describe(d, "augmentation changes the wrong number of paths"));
    const VertexSet qs = q.starts();
    for (Vertex w : infan.starts())
      if (!qs.contains(w)) return failed(describe(d, "augmentation loses a start"));
    return pass();
  }
  if (res.selection.size() != infan.size()) return failed(describe(d, "selection size mismatch"));
  VertexSet chosen;
  for (const auto& [path, w] : res.selection) {
    if (std::find(infan.begin(), infan.end(), path) == infan.end() || !path.contains(w) || w == v)
      return failed(describe(d, "selected vertex is not on its path"));
    chosen.insert(w);
  }
  if (chosen.size() != infan.size()) return failed(describe(d, "selection repeats a vertex"));
  if (!cuts_from(d, x, v, chosen)) return failed(describe(d, "selection does not separate"));
  return pass();
}

LemmaOutcome check(const RootedDigraph& d, const GQuasiAddOneParams& params) {
  if (d.vertex_count() > 12) fail(ErrorCode::kTooLarge, "g_quasi_add_one check is limited to 12 vertices");
  const auto [w, uv] = params;
  const Vertex r = d.root();
  if (w >= d.vertex_count() || w == r) hypothesis("w must be a non-root vertex");
  if (!d.has_edge(uv) || uv.tail == r || uv.head == w) hypothesis("uv must be an edge with u != r, v != w");
  if (!brute_in_g(d, w, d.in_edges(w))) hypothesis("in(w) is not in G_D(w)");
  const RootedDigraph without = delete_edges(d, {uv});
  if (brute_in_g(without, w, d.in_edges(w))) hypothesis("in(w) stays in G after deleting uv");

  const Vertex u = uv.tail, v = uv.head;
  VertexSet targets(d.in_neighbors(v).begin(), d.in_neighbors(v).end());
  targets.erase(u);
  const Mask everything = d.vertex_count() == 64 ? ~Mask{0} : (Mask{1} << d.vertex_count()) - 1;
  const Mask universe = everything & ~bit(r) & ~bit(v);
  for (Mask extra = 0; extra <= universe; extra = ((extra | ~universe) + 1) & universe) {
    const Mask s = extra | bit(v);
    const VertexSet set = set_of(s);
    if (!separates(d, set, targets)) {
      if (extra == universe) break;
      continue;
    }
    std::vector<std::vector<Path>> slots;
    for (Vertex t : set) {
      if (t == v) {
        std::vector<Path> slot;
        for (Path p : simple_paths(d, r, u, (everything & ~s))) {
          p.vertices.push_back(v);
          slot.push_back(std::move(p));
        }
        slots.push_back(std::move(slot));
      } else {
        slots.push_back(simple_paths(d, r, t, (everything & ~s) | bit(t)));
      }
    }
    if (find_system(slots, bit(r))) return pass();
    if (extra == universe) break;
  }
  return failed(describe(d, "no linked set through " + format_edge(d, uv) + " separating N^-(" +
                                d.name(v) + ") - " + d.name(u), {"w=" + d.name(w)}));
}

LemmaOutcome check(const RootedDigraph& d, const LinkedPreservedParams& params) {
  require_small(d, 16, "linked_preserved check");
  const auto& [l, u] = params;
  if (u.contains(d.root())) hypothesis("U contains the root");
  if (!brute_large(d, l)) hypothesis("L is not large");
  if (!brute_fan(d, u)) hypothesis("U is not linked from r in D");
  if (!brute_fan(l, u)) return failed(describe(l, format_set(d, u) + " is not linked from r in L"));
  if (!linked_from_root(l, u).linked()) return failed(describe(l, "fast link test disagrees"));
  return pass();
}

LemmaOutcome check(const RootedDigraph& d, const QuasiPreservedParams& params) {
  require_small(d, 16, "quasi_preserved check");
  if (!brute_flame(d)) hypothesis("D is not a vertex-flame");
  if (!brute_large(d, params.large)) hypothesis("L is not large");
  if (!brute_flame(params.large)) return failed(describe(params.large, "large L is not a vertex-flame"));
  if (!flame_check(params.large).flame) return failed(describe(params.large, "fast flame check disagrees"));
  return pass();
}

LemmaOutcome check(const RootedDigraph& d, const LargestEmsepParams& params) {
  require_small(d, 16, "largest_emsep check");
  const auto& [v, kept] = params;
  if (v >= d.vertex_count() || v == d.root()) hypothesis("v must be a non-root vertex");
  for (const Edge& e : kept)
    if (e.head != v || !d.has_edge(e)) hypothesis("I must consist of in-edges of v");
  const RootedDigraph restricted = restrict_in(d, v, kept);
  const VertexSet t = brute_separations(d, v).maximum;
  if (!brute_infan(restricted, t, v)) hypothesis("T is not linked to v after the restriction");
  for (Vertex u : non_root(d))
    for (const VertexSet& s : brute_separations(d, u).all)
      if (!brute_infan(restricted, s, u))
        return failed(describe(d, format_set(d, s) + " is no longer linked to " + d.name(u),
                               {"v=" + d.name(v)}));
  return pass();
}

// Random simple path from `from` to a vertex of `targets`, avoiding `blocked`.
std::optional<Path> random_path(const RootedDigraph& d, Vertex from, Mask targets, Mask blocked,
                                std::mt19937_64& rng) {
  std::vector<Vertex> stack{from};
  Mask used = bit(from);
  auto dfs = [&](auto&& self, Vertex u) -> bool {
    std::vector<Vertex> next(d.out_neighbors(u).begin(), d.out_neighbors(u).end());
    std::shuffle(next.begin(), next.end(), rng);
    for (Vertex w : next) {
      if ((used | blocked) & bit(w)) continue;
      stack.push_back(w);
      if (targets & bit(w)) return true;
      used |= bit(w);
      if (self(self, w)) return true;
      stack.pop_back();
    }
    return false;
  };
  if (targets & bit(from)) return Path(stack);
  if (!dfs(dfs, from)) return std::nullopt;
  return Path(stack);
}

// Random disjoint X->Y system found greedily.
std::vector<Path> random_xy_system(const RootedDigraph& d, const VertexSet& x, const VertexSet& y,
                                   std::mt19937_64& rng) {
  std::vector<Vertex> starts(x.begin(), x.end());
  std::shuffle(starts.begin(), starts.end(), rng);
  Mask used = 0;
  const Mask xm = mask_of(x), ym = mask_of(y);
  std::vector<Path> out;
  for (Vertex s : starts) {
    if ((used & bit(s)) || (rng() % 4 == 0)) continue;
    auto p = random_path(d, s, ym & ~used, used | (xm & ~bit(s)) | (ym & used), rng);
    if (!p) continue;
    used |= mask_of(*p);
    out.push_back(std::move(*p));
  }
  return out;
}

VertexSet random_subset(const std::vector<Vertex>& pool, std::size_t max_size, std::mt19937_64& rng) {
  std::vector<Vertex> shuffled = pool;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  const std::size_t size = 1 + rng() % std::max<std::size_t>(1, std::min(max_size, shuffled.size()));
  return VertexSet(shuffled.begin(), shuffled.begin() + std::min(size, shuffled.size()));
}

// Random large subdigraph: tries deleting non-root edges in random order.
RootedDigraph random_large_subdigraph(const RootedDigraph& d, std::mt19937_64& rng) {
  std::vector<std::size_t> target(d.vertex_count(), 0);
  for (Vertex v : non_root(d)) target[v] = kappa(d, v);
  std::vector<Edge> edges = d.edges();
  std::shuffle(edges.begin(), edges.end(), rng);
  RootedDigraph l = d;
  for (const Edge& e : edges) {
    if (e.tail == d.root() || rng() % 3 == 0) continue;
    RootedDigraph candidate = delete_edges(l, {e});
    bool keeps = true;
    for (Vertex v : non_root(d))
      if (kappa(candidate, v) != target[v]) {
        keeps = false;
        break;
      }
    if (keeps) l = std::move(candidate);
  }
  return l;
}

}  // namespace

std::string_view to_string(LemmaId id) { return kNames[static_cast<std::size_t>(id)]; }

std::optional<LemmaId> lemma_from_string(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == name) return static_cast<LemmaId>(i);
  return std::nullopt;
}

const std::vector<LemmaId>& all_lemmas() {
  static const std::vector<LemmaId> ids = {
      LemmaId::kNoCollapse,   LemmaId::kBubbleUnite,     LemmaId::kPymShape,
      LemmaId::kAugWalk,      LemmaId::kGQuasiAddOne,    LemmaId::kLinkedPreserved,
      LemmaId::kQuasiPreserved, LemmaId::kLargestEmsep};
  return ids;
}

LemmaOutcome lemma_check(const LemmaInstance& instance) {
  return std::visit([&](const auto& params) { return check(instance.digraph, params); },
                    instance.params);
}

std::optional<LemmaInstance> random_instance(LemmaId id, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(id) + 1);
  static constexpr std::array<double, 3> kDensity = {0.25, 0.4, 0.6};
  const std::size_t size = n <= 3 ? n : 3 + rng() % (n - 2);
  const double p = kDensity[rng() % kDensity.size()];
  RootedDigraph d = gen_random(size, p, rng());
  const std::vector<Vertex> vertices = non_root(d);
  if (vertices.empty()) return std::nullopt;
  auto pick = [&](const std::vector<Vertex>& pool) { return pool[rng() % pool.size()]; };

  switch (id) {
    case LemmaId::kNoCollapse:
      return LemmaInstance{d, NoCollapseParams{pick(vertices)}};

    case LemmaId::kBubbleUnite: {
      const Vertex v0 = pick(vertices);
      const auto first = brute_regions(d, v0).bubbles;
      std::vector<ChainLink> chain{{first[rng() % first.size()], v0}};
      VertexSet united = chain.front().set;
      const std::size_t length = 2 + rng() % 2;
      while (chain.size() < length) {
        std::vector<Vertex> centers{v0};
        for (Vertex w : boundary(d, united).interior) centers.push_back(w);
        const Vertex c = pick(centers);
        const auto options = brute_regions(d, c).bubbles;
        chain.push_back({options[rng() % options.size()], c});
        united.insert(chain.back().set.begin(), chain.back().set.end());
      }
      return LemmaInstance{d, BubbleUniteParams{std::move(chain)}};
    }

    case LemmaId::kPymShape: {
      std::vector<Vertex> all(d.vertex_count());
      for (Vertex v = 0; v < d.vertex_count(); ++v) all[v] = v;
      std::shuffle(all.begin(), all.end(), rng);
      if (all.size() < 2) return std::nullopt;
      const std::size_t split = 1 + rng() % (all.size() - 1);
      const std::size_t x_size = 1 + rng() % std::min<std::size_t>(split, 3);
      const std::size_t y_size = 1 + rng() % std::min<std::size_t>(all.size() - split, 3);
      VertexSet x(all.begin(), all.begin() + x_size);
      VertexSet y(all.begin() + split, all.begin() + split + y_size);
      auto ps = random_xy_system(d, x, y, rng);
      auto qs = random_xy_system(d, x, y, rng);
      if (ps.size() + qs.size() < 2) return std::nullopt;
      return LemmaInstance{d, PymShapeParams{PathSystem(std::move(ps), PathMode::kDisjoint),
                                             PathSystem(std::move(qs), PathMode::kDisjoint), x, y}};
    }

    case LemmaId::kAugWalk: {
      const Vertex v = pick(vertices);
      std::vector<Vertex> pool;
      for (Vertex w = 0; w < d.vertex_count(); ++w)
        if (w != v) pool.push_back(w);
      const VertexSet x = random_subset(pool, 4, rng);
      std::vector<Path> paths;
      Mask used = 0;
      for (Vertex s : x) {
        if (rng() % 3 == 0) continue;
        auto path = random_path(d, s, bit(v), used | (mask_of(x) & ~bit(s)), rng);
        if (!path) continue;
        used |= mask_of(*path) & ~bit(v);
        paths.push_back(std::move(*path));
      }
      return LemmaInstance{d, AugWalkParams{x, v, PathSystem(std::move(paths), PathMode::kInternallyDisjoint)}};
    }

    case LemmaId::kGQuasiAddOne: {
      const RootedDigraph l = rng() % 4 == 0 ? d : lovasz_reduce(d);
      std::vector<std::pair<Vertex, Edge>> options;
      for (Vertex w : vertices) {
        if (!brute_in_g(l, w, l.in_edges(w))) continue;
        for (const Edge& e : l.edges()) {
          if (e.tail == l.root() || e.head == w) continue;
          if (!brute_in_g(delete_edges(l, {e}), w, l.in_edges(w))) options.emplace_back(w, e);
        }
      }
      if (options.empty()) return std::nullopt;
      const auto [w, e] = options[rng() % options.size()];
      return LemmaInstance{l, GQuasiAddOneParams{w, e}};
    }

    case LemmaId::kLinkedPreserved: {
      RootedDigraph l = random_large_subdigraph(d, rng);
      for (int attempt = 0; attempt < 20; ++attempt) {
        VertexSet u = random_subset(vertices, 4, rng);
        if (linked_from_root(d, u).linked())
          return LemmaInstance{d, LinkedPreservedParams{std::move(l), std::move(u)}};
      }
      return std::nullopt;
    }

    case LemmaId::kQuasiPreserved: {
      RootedDigraph flame = lovasz_reduce(d);
      RootedDigraph l = random_large_subdigraph(flame, rng);
      return LemmaInstance{flame, QuasiPreservedParams{std::move(l)}};
    }

    case LemmaId::kLargestEmsep: {
      const Vertex v = pick(vertices);
      const EdgeSet in = d.in_edges(v);
      const VertexSet t = extreme_separations(d, v).near_sink.set;
      for (int attempt = 0; attempt < 20; ++attempt) {
        EdgeSet kept;
        for (const Edge& e : in)
          if (rng() % 2) kept.insert(e);
        if (link_set_to_vertex(restrict_in(d, v, kept), t, v).linked())
          return LemmaInstance{d, LargestEmsepParams{v, std::move(kept)}};
      }
      return LemmaInstance{d, LargestEmsepParams{v, in}};
    }
  }
  return std::nullopt;
}

SuiteResult run_lemma_suite(LemmaId id, std::size_t n, std::size_t count, std::uint64_t first_seed) {
  SuiteResult result;
  for (std::uint64_t seed = first_seed; result.checked < count && result.seeds_tried < 50 * count; ++seed) {
    ++result.seeds_tried;
    auto instance = random_instance(id, n, seed);
    if (!instance) continue;
    LemmaOutcome outcome = lemma_check(*instance);
    ++result.checked;
    if (!outcome.passed) result.failures.emplace_back(std::move(*instance), std::move(outcome));
  }
  return result;
}

}  // namespace vflame::oracle
