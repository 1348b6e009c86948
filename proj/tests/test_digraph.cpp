#include "doctest.h"

#include "vflame/digraph.hpp"
#include "vflame/fixtures.hpp"

using namespace vflame;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kInternal;
}

}  // namespace

TEST_SUITE("digraph") {
  TEST_CASE("build star") {
    const RootedDigraph d = build_digraph({"r", "a", "b"}, {{"r", "a"}, {"r", "b"}}, "r");
    CHECK(d == fixtures::star());
    CHECK(d.vertex_count() == 3);
    CHECK(d.edge_count() == 2);
    CHECK(d.name(d.root()) == "r");
  }

  TEST_CASE("ids are sorted so the root need not come first") {
    const RootedDigraph d = fixtures::star();
    CHECK(d.names() == std::vector<std::string>{"a", "b", "r"});
    CHECK(d.root() == 2);
  }

  TEST_CASE("build errors") {
    CHECK(code_of([] { build_digraph({"r", "a"}, {{"a", "r"}}, "r"); }) ==
          ErrorCode::kRootHasInEdge);
    CHECK(code_of([] { build_digraph({"r", "a"}, {{"a", "a"}}, "r"); }) == ErrorCode::kLoopEdge);
    CHECK(code_of([] { build_digraph({"r", "a"}, {{"r", "a"}, {"r", "a"}}, "r"); }) ==
          ErrorCode::kDuplicateEdge);
    CHECK(code_of([] { build_digraph({"r", "a"}, {{"r", "q"}}, "r"); }) ==
          ErrorCode::kUnknownEndpoint);
    CHECK(code_of([] { build_digraph({"r", "a", "a"}, {}, "r"); }) == ErrorCode::kDuplicateVertex);
  }

  TEST_CASE("chain") {
    const RootedDigraph d = fixtures::chain();
    CHECK(d.edge_set() == d.edges_of({{"r", "x"}, {"x", "y"}, {"y", "t"}}));
  }

  TEST_CASE("restrict_in drops the in-edges outside I") {
    const RootedDigraph d = fixtures::extra();
    const RootedDigraph l = restrict_in(d, d.id("t"), d.edges_of({{"b", "t"}}));
    CHECK(l.edge_set() == d.edges_of({{"r", "a"}, {"a", "b"}, {"b", "t"}}));
  }

  TEST_CASE("restrict_in with all in-edges is the identity") {
    const RootedDigraph d = fixtures::chain();
    CHECK(restrict_in(d, d.id("t"), d.edges_of({{"y", "t"}})) == d);
  }

  TEST_CASE("restrict_in keeps the root edge") {
    const RootedDigraph d = fixtures::star();
    const RootedDigraph l = restrict_in(d, d.id("a"), {});
    CHECK(l.in_edges(d.id("a")) == d.edges_of({{"r", "a"}}));
    CHECK(l == d);
  }

  TEST_CASE("restrict_in rejects foreign edges") {
    const RootedDigraph d = fixtures::extra();
    CHECK(code_of([&] { restrict_in(d, d.id("t"), d.edges_of({{"a", "b"}})); }) ==
          ErrorCode::kEdgeNotIngoing);
  }

  TEST_CASE("boundary") {
    const RootedDigraph d = fixtures::chain();
    Boundary b = boundary(d, d.set({"y", "t"}));
    CHECK(b.entrance == d.set({"y"}));
    CHECK(b.interior == d.set({"t"}));
    b = boundary(d, d.set({"x", "y", "t"}));
    CHECK(b.entrance == d.set({"x"}));
    CHECK(b.interior == d.set({"y", "t"}));
    b = boundary(d, {});
    CHECK(b.entrance.empty());
    CHECK(b.interior.empty());
    CHECK(code_of([&] { boundary(d, d.set({"r"})); }) == ErrorCode::kRootInSet);
  }

  TEST_CASE("derived digraphs") {
    const RootedDigraph d = fixtures::extra();
    const RootedDigraph l = delete_edges(d, d.edges_of({{"a", "t"}}));
    CHECK(l.edge_count() == 3);
    CHECK(l.is_subdigraph_of(d));
    CHECK_FALSE(d.is_subdigraph_of(l));
    CHECK(without_root_edge(fixtures::star(), fixtures::star().id("a")).edge_count() == 1);
    CHECK(with_edges(d, d.edges_of({{"r", "a"}})).edge_count() == 1);
  }

  TEST_CASE("reachability") {
    const RootedDigraph d = fixtures::chainz();
    auto seen = reachable_from(d, d.root(), d.set({"y"}));
    CHECK(seen[d.id("x")]);
    CHECK(seen[d.id("y")]);
    CHECK_FALSE(seen[d.id("t")]);
    CHECK_FALSE(seen[d.id("z")]);
    auto back = reaching(d, d.id("t"));
    CHECK(back[d.id("x")]);
    CHECK_FALSE(back[d.id("z")]);
  }

  TEST_CASE("in-neighbours without the root") {
    const RootedDigraph d = fixtures::extra();
    CHECK(in_neighbors_without_root(d, d.id("t")) == d.set({"a", "b"}));
    CHECK(in_neighbors_without_root(d, d.id("a")).empty());
  }
}
