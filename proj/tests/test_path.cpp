#include "doctest.h"

#include "vflame/fixtures.hpp"
#include "vflame/path.hpp"

using namespace vflame;

TEST_SUITE("path") {
  TEST_CASE("concat splices at the shared vertex") {
    const RootedDigraph d = fixtures::cross();
    const Path p = make_path(d, {"x1", "a", "y1"});
    const Path q = make_path(d, {"x2", "a", "y2"});
    CHECK(concat_paths(p, q, d.id("a")) == make_path(d, {"x1", "a", "y2"}));
  }

  TEST_CASE("self splice at the end") {
    const RootedDigraph d = fixtures::chain();
    const Path p = make_path(d, {"r", "x", "y", "t"});
    CHECK(concat_paths(p, p, p.last()) == p);
  }

  TEST_CASE("splice on the chain") {
    const RootedDigraph d = fixtures::chain();
    const Path p = make_path(d, {"r", "x", "y"});
    const Path q = make_path(d, {"y", "t"});
    CHECK(concat_paths(p, q, d.id("y")) == make_path(d, {"r", "x", "y", "t"}));
  }

  TEST_CASE("splice rejects overlapping segments") {
    const RootedDigraph d = fixtures::chain();
    const Path p = make_path(d, {"x", "y"});
    const Path q = make_path(d, {"y", "x"});
    CHECK_THROWS_AS(concat_paths(p, q, d.id("y")), Error);
  }

  TEST_CASE("path validity") {
    const RootedDigraph d = fixtures::diamond();
    CHECK(is_path_in(d, make_path(d, {"r", "a", "t"})));
    CHECK_FALSE(is_path_in(d, make_path(d, {"r", "t"})));
    CHECK_FALSE(is_path_in(d, Path{}));
    CHECK(is_path_in(d, make_path(d, {"t"})));
  }

  TEST_CASE("segments") {
    const RootedDigraph d = fixtures::chain();
    const Path p = make_path(d, {"r", "x", "y", "t"});
    CHECK(p.prefix_to(d.id("y")) == make_path(d, {"r", "x", "y"}));
    CHECK(p.suffix_from(d.id("x")) == make_path(d, {"x", "y", "t"}));
    CHECK(p.last_edge() == d.edge("y", "t"));
    CHECK(p.edges().size() == 3);
  }

  TEST_CASE("system modes") {
    const RootedDigraph d = fixtures::diamond();
    std::vector<Path> paths = {make_path(d, {"r", "a", "t"}), make_path(d, {"r", "b", "t"})};
    CHECK(is_internally_disjoint(paths));
    CHECK_FALSE(is_disjoint(paths));
    CHECK(is_fan({make_path(d, {"r", "a"}), make_path(d, {"r", "b"})}, d.root()));
    CHECK(is_infan({make_path(d, {"a", "t"}), make_path(d, {"b", "t"})}, d.id("t")));
    CHECK_THROWS_AS(PathSystem(paths, PathMode::kDisjoint), Error);
    const PathSystem s(paths, PathMode::kInternallyDisjoint);
    CHECK(s.starts() == d.set({"r"}));
    CHECK(s.ends() == d.set({"t"}));
    CHECK(s.last_edges() == d.edges_of({{"a", "t"}, {"b", "t"}}));
    CHECK(s.first_edges() == d.edges_of({{"r", "a"}, {"r", "b"}}));
    CHECK(s.lies_in(d));
  }

  TEST_CASE("root-shared systems") {
    const RootedDigraph d = fixtures::diamond();
    std::vector<Path> paths = {make_path(d, {"r", "a", "t"}), make_path(d, {"r", "b", "t"})};
    CHECK(is_root_shared(paths, d.root()));
    CHECK_FALSE(is_root_shared({make_path(d, {"r", "a", "t"}), make_path(d, {"a", "t"})}, d.root()));
  }

  TEST_CASE("edge views reject trivial paths") {
    const RootedDigraph d = fixtures::chain();
    const PathSystem s({make_path(d, {"t"})}, PathMode::kInternallyDisjoint);
    CHECK(s.has_trivial_path());
    CHECK_THROWS_AS(s.last_edges(), Error);
  }
}
