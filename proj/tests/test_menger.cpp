#include "doctest.h"

#include "vflame/fixtures.hpp"
#include "vflame/menger.hpp"
#include "vflame/oracle.hpp"

using namespace vflame;

TEST_SUITE("menger") {
  TEST_CASE("kappa on the fixtures") {
    RootedDigraph d = fixtures::diamond();
    MengerResult m = kappa_and_system(d, d.id("t"));
    CHECK(m.kappa == 2);
    CHECK(m.system.paths() ==
          std::vector<Path>{make_path(d, {"r", "a", "t"}), make_path(d, {"r", "b", "t"})});

    d = fixtures::extra();
    CHECK(kappa(d, d.id("t")) == 1);

    d = fixtures::chain();
    m = kappa_and_system(d, d.id("t"));
    CHECK(m.kappa == 1);
    CHECK(m.system.paths() == std::vector<Path>{make_path(d, {"r", "x", "y", "t"})});
  }

  TEST_CASE("the root edge is a member of the system") {
    const RootedDigraph d = fixtures::star();
    const MengerResult m = kappa_and_system(d, d.id("a"));
    CHECK(m.kappa == 1);
    CHECK(m.system.paths() == std::vector<Path>{make_path(d, {"r", "a"})});
    CHECK(m.near_root_cut.empty());
  }

  TEST_CASE("unreachable vertex") {
    const RootedDigraph d = build_digraph({"r", "a"}, {}, "r");
    const MengerResult m = kappa_and_system(d, d.id("a"));
    CHECK(m.kappa == 0);
    CHECK(m.system.empty());
    const ExtremeSeparations ext = extreme_separations(d, d.id("a"));
    CHECK(ext.near_root.set.empty());
    CHECK(ext.near_sink.set.empty());
  }

  TEST_CASE("augmenting step succeeds") {
    const RootedDigraph d = fixtures::diamond();
    const Vertex t = d.id("t");
    const PathSystem infan({make_path(d, {"a", "t"})}, PathMode::kInternallyDisjoint);
    const AugmentResult a = augmenting_step(d, d.set({"a", "b"}), t, infan);
    CHECK(a.successful);
    CHECK(a.infan.paths() ==
          std::vector<Path>{make_path(d, {"a", "t"}), make_path(d, {"b", "t"})});
  }

  TEST_CASE("augmenting step fails with a selection") {
    const RootedDigraph d = fixtures::extra();
    const Vertex t = d.id("t");
    const PathSystem infan({make_path(d, {"a", "t"})}, PathMode::kInternallyDisjoint);
    const AugmentResult a = augmenting_step(d, d.set({"a"}), t, infan);
    CHECK_FALSE(a.successful);
    CHECK(a.selected() == d.set({"a"}));
  }

  TEST_CASE("augmenting step with nothing to reach") {
    const RootedDigraph d = fixtures::star();
    const AugmentResult a = augmenting_step(d, d.set({"a"}), d.id("b"), PathSystem{});
    CHECK_FALSE(a.successful);
    CHECK(a.selected().empty());
  }

  TEST_CASE("extreme separations") {
    RootedDigraph d = fixtures::chain();
    ExtremeSeparations ext = extreme_separations(d, d.id("t"));
    CHECK(ext.near_root.set == d.set({"x"}));
    CHECK(ext.near_sink.set == d.set({"y"}));

    d = fixtures::diamond();
    ext = extreme_separations(d, d.id("t"));
    CHECK(ext.near_root.set == d.set({"a", "b"}));
    CHECK(ext.near_sink.set == d.set({"a", "b"}));

    d = fixtures::extra();
    ext = extreme_separations(d, d.id("t"));
    CHECK(ext.near_root.set == d.set({"a"}));
    CHECK(ext.near_sink.set == d.set({"a"}));
  }

  TEST_CASE("orthogonal systems") {
    RootedDigraph d = fixtures::diamond();
    CHECK(orthogonal_system(d, d.id("t"), d.set({"a", "b"})).paths() ==
          std::vector<Path>{make_path(d, {"r", "a", "t"}), make_path(d, {"r", "b", "t"})});
    d = fixtures::chain();
    CHECK(orthogonal_system(d, d.id("t"), d.set({"y"})).paths() ==
          std::vector<Path>{make_path(d, {"r", "x", "y", "t"})});
    try {
      orthogonal_system(d, d.id("t"), d.set({"x", "y"}));
      FAIL("expected kNotAnEMSeparation");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kNotAnEMSeparation);
    }
  }

  TEST_CASE("separation order") {
    RootedDigraph d = fixtures::chain();
    const Vertex t = d.id("t");
    CHECK(classify_separation(d, t, d.set({"x"}), d.set({"y"})) == SeparationOrder::kLess);
    CHECK(classify_separation(d, t, d.set({"y"}), d.set({"x"})) == SeparationOrder::kGreater);
    CHECK(classify_separation(d, t, d.set({"y"}), d.set({"y"})) == SeparationOrder::kEqual);
    d = fixtures::diamond();
    CHECK(classify_separation(d, d.id("t"), d.set({"a", "b"}), d.set({"a", "b"})) ==
          SeparationOrder::kEqual);
  }

  TEST_CASE("fans from the root") {
    RootedDigraph d = fixtures::star();
    LinkResult l = linked_from_root(d, d.set({"a", "b"}));
    REQUIRE(l.linked());
    CHECK(l.system->paths() == std::vector<Path>{make_path(d, {"r", "a"}), make_path(d, {"r", "b"})});

    d = fixtures::chain();
    l = linked_from_root(d, d.set({"x", "y"}));
    CHECK_FALSE(l.linked());
    CHECK(l.violating == d.set({"x", "y"}));

    d = fixtures::diamond();
    CHECK(linked_from_root(d, d.set({"a", "b"})).linked());
  }

  TEST_CASE("infans to a vertex") {
    RootedDigraph d = fixtures::diamond();
    LinkResult l = link_set_to_vertex(d, d.set({"a", "b"}), d.id("t"));
    REQUIRE(l.linked());
    CHECK(l.system->paths() == std::vector<Path>{make_path(d, {"a", "t"}), make_path(d, {"b", "t"})});

    d = fixtures::chain();
    CHECK_FALSE(link_set_to_vertex(d, d.set({"x", "y"}), d.id("t")).linked());
    l = link_set_to_vertex(d, {}, d.id("t"));
    REQUIRE(l.linked());
    CHECK(l.system->empty());
  }

  TEST_CASE("fast kappa and separations agree with brute force") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      const RootedDigraph d = oracle::gen_random(2 + seed % 8, 0.35, seed);
      for (Vertex v = 0; v < d.vertex_count(); ++v) {
        if (v == d.root()) continue;
        CAPTURE(seed);
        CAPTURE(v);
        const MengerResult m = kappa_and_system(d, v);
        CHECK(m.kappa == oracle::brute_kappa(d, v).kappa);
        CHECK(m.system.size() == m.kappa);
        const ExtremeSeparations ext = extreme_separations(d, v);
        const oracle::BruteSeparations b = oracle::brute_separations(d, v);
        CHECK(ext.near_root.set == b.minimum);
        CHECK(ext.near_sink.set == b.maximum);
        CHECK(is_em_separation(d, v, ext.near_root.set));
      }
    }
  }
}
