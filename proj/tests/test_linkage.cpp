#include "doctest.h"

#include "vflame/fixtures.hpp"
#include "vflame/flame.hpp"
#include "vflame/linkage.hpp"
#include "vflame/oracle.hpp"

using namespace vflame;

namespace {

PathSystem infan(std::vector<Path> paths) {
  return PathSystem(std::move(paths), PathMode::kInternallyDisjoint);
}

PathSystem disjoint(std::vector<Path> paths) {
  return PathSystem(std::move(paths), PathMode::kDisjoint);
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kInternal;
}

RootedDigraph star_plus_c() {
  return build_digraph({"r", "a", "b", "c"}, {{"r", "a"}, {"r", "b"}, {"a", "c"}, {"b", "c"}}, "r");
}

}  // namespace

TEST_SUITE("linkage") {
  TEST_CASE("merge on the cross") {
    const RootedDigraph d = fixtures::cross();
    const VertexSet x = d.set({"x1", "x2"});
    const VertexSet y = d.set({"y1", "y2"});
    const PathSystem p = disjoint({make_path(d, {"x1", "a", "y1"})});
    const PathSystem q = disjoint({make_path(d, {"x2", "a", "y2"})});
    const PathSystem r = pym_merge(d, p, q, x, y);
    CHECK(r.paths() == std::vector<Path>{make_path(d, {"x1", "a", "y2"})});
  }

  TEST_CASE("merge is idempotent and keeps Q for empty P") {
    const RootedDigraph d = fixtures::cross();
    const VertexSet x = d.set({"x1", "x2"});
    const VertexSet y = d.set({"y1", "y2"});
    const PathSystem p = disjoint({make_path(d, {"x1", "a", "y1"})});
    CHECK(pym_merge(d, p, p, x, y) == p);
    CHECK(pym_merge(d, PathSystem{}, p, x, y) == p);
  }

  TEST_CASE("merge rejects bad inputs") {
    const RootedDigraph d = fixtures::cross();
    const VertexSet x = d.set({"x1", "x2"});
    const VertexSet y = d.set({"y1", "y2"});
    const PathSystem p = disjoint({make_path(d, {"x1", "a"})});
    CHECK(code_of([&] { pym_merge(d, p, p, x, y); }) == ErrorCode::kNotXYPaths);
    // Internally disjoint but sharing the first vertex a.
    const PathSystem shared = infan({make_path(d, {"a", "y1"}), make_path(d, {"a", "y2"})});
    CHECK(code_of([&] { pym_merge(d, shared, PathSystem{}, d.set({"a"}), y); }) ==
          ErrorCode::kNotDisjoint);
  }

  TEST_CASE("infan merge with Q already covered") {
    const RootedDigraph d = fixtures::diamond();
    const PathSystem p = infan({make_path(d, {"a", "t"}), make_path(d, {"b", "t"})});
    const PathSystem q = infan({make_path(d, {"a", "t"})});
    CHECK(pym_infan(d, p, q, d.id("t"), d.set({"a", "b"})) == p);
    CHECK(pym_infan(d, p, PathSystem{}, d.id("t"), d.set({"a", "b"})) == p);
  }

  TEST_CASE("infan merge requires Q to meet S in its first vertices") {
    // Q = {y->t} starts outside S = {x}, so the precondition fails.
    const RootedDigraph d = fixtures::chain();
    const PathSystem p = infan({make_path(d, {"x", "y", "t"})});
    const PathSystem q = infan({make_path(d, {"y", "t"})});
    CHECK(code_of([&] { pym_infan(d, p, q, d.id("t"), d.set({"x"})); }) ==
          ErrorCode::kNotXYPaths);
    const PathSystem q_from_s = infan({make_path(d, {"x", "y", "t"})});
    CHECK(pym_infan(d, p, q_from_s, d.id("t"), d.set({"x"})) == p);
  }

  TEST_CASE("infan merge splices onto the uncovered edge") {
    const RootedDigraph d = fixtures::extra();
    const PathSystem p = infan({make_path(d, {"a", "t"})});
    const PathSystem q = infan({make_path(d, {"a", "b", "t"})});
    const PathSystem r = pym_infan(d, p, q, d.id("t"), d.set({"a"}));
    CHECK(r.paths() == std::vector<Path>{make_path(d, {"a", "b", "t"})});
  }

  TEST_CASE("rooted merge keeps a root-shared fan") {
    const RootedDigraph d = star_plus_c();
    const PathSystem p(
        {make_path(d, {"r", "a", "c"}), make_path(d, {"r", "b", "c"})}, PathMode::kRootShared,
        d.root());
    const PathSystem q = infan({make_path(d, {"r", "a", "c"})});
    const PathSystem r = pym_rooted(d, p, q, d.set({"r"}), d.id("c"));
    CHECK(r == p);
    CHECK(pym_rooted(d, p, PathSystem{}, d.set({"r"}), d.id("c")) == p);
  }

  TEST_CASE("rooted merge requires Q to meet S in its first vertices") {
    const RootedDigraph d = fixtures::diamond();
    const PathSystem p(
        {make_path(d, {"r", "a", "t"}), make_path(d, {"r", "b", "t"})}, PathMode::kRootShared,
        d.root());
    const PathSystem q = infan({make_path(d, {"b", "t"})});
    CHECK(code_of([&] { pym_rooted(d, p, q, d.set({"r"}), d.id("t")); }) ==
          ErrorCode::kNotXYPaths);
    const PathSystem q_from_r = infan({make_path(d, {"r", "b", "t"})});
    CHECK(pym_rooted(d, p, q_from_r, d.set({"r"}), d.id("t")) == p);
  }

  TEST_CASE("cover extension on the fixtures") {
    RootedDigraph d = fixtures::diamond();
    CHECK(cover_extension(d, d.id("t"), d.set({"a", "b"}), d.edges_of({{"a", "t"}, {"b", "t"}}))
              .paths() ==
          std::vector<Path>{make_path(d, {"r", "a", "t"}), make_path(d, {"r", "b", "t"})});

    d = fixtures::chain();
    CHECK(cover_extension(d, d.id("t"), d.set({"y"}), {}).paths() ==
          std::vector<Path>{make_path(d, {"r", "x", "y", "t"})});

    d = fixtures::extra();
    CHECK(cover_extension(d, d.id("t"), d.set({"a"}), d.edges_of({{"b", "t"}})).paths() ==
          std::vector<Path>{make_path(d, {"r", "a", "b", "t"})});
  }

  TEST_CASE("cover extension errors") {
    const RootedDigraph d = fixtures::extra();
    CHECK(code_of([&] { cover_extension(d, d.id("t"), d.set({"b"}), {}); }) ==
          ErrorCode::kNotAnEMSeparation);
    CHECK(code_of([&] {
            cover_extension(d, d.id("t"), d.set({"a"}), d.edges_of({{"a", "t"}, {"b", "t"}}));
          }) == ErrorCode::kNotInG);
  }

  TEST_CASE("rerouting alone yields the Pym shape on random instances") {
    std::size_t checked = 0;
    for (std::uint64_t seed = 1; checked < 200 && seed < 10000; ++seed) {
      auto inst = oracle::random_instance(oracle::LemmaId::kPymShape, 8, seed);
      if (!inst) continue;
      ++checked;
      const auto& p = std::get<oracle::PymShapeParams>(inst->params);
      CAPTURE(seed);
      CHECK(satisfies_pym(pym_reroute(p.p.paths(), p.q.paths()), p.p.paths(), p.q.paths(), p.x,
                          p.y));
      const PathSystem merged = pym_merge(inst->digraph, p.p, p.q, p.x, p.y);
      CHECK(satisfies_pym(merged.paths(), p.p.paths(), p.q.paths(), p.x, p.y));
      CHECK(pym_merge(inst->digraph, p.p, p.p, p.x, p.y) == p.p);
    }
    CHECK(checked == 200);
  }

  TEST_CASE("cover extension on random digraphs") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
      const RootedDigraph d = oracle::gen_random(3 + seed % 6, 0.4, seed);
      for (Vertex v = 0; v < d.vertex_count(); ++v) {
        if (v == d.root()) continue;
        const VertexSet s = extreme_separations(d, v).near_sink.set;
        for (const EdgeSet& i : oracle::brute_g(d, v)) {
          CAPTURE(seed);
          const PathSystem r = cover_extension(d, v, s, i);
          CHECK(is_orthogonal_system(d, v, s, r));
          const EdgeSet last = r.empty() ? EdgeSet{} : r.last_edges();
          for (const Edge& e : i)
            if (e.tail != d.root()) CHECK(last.contains(e));
        }
      }
    }
  }
}
