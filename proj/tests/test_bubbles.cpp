#include "doctest.h"

#include "vflame/bubbles.hpp"
#include "vflame/fixtures.hpp"
#include "vflame/oracle.hpp"

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

TEST_SUITE("bubbles") {
  TEST_CASE("singleton bubble") {
    const RootedDigraph d = fixtures::chain();
    const RegionResult r = is_bubble(d, d.id("t"), d.set({"t"}));
    REQUIRE(r.accepted());
    CHECK(r.region->witness.paths() == std::vector<Path>{make_path(d, {"t"})});
  }

  TEST_CASE("bubble with a single entrance") {
    const RootedDigraph d = fixtures::chain();
    const RegionResult r = is_bubble(d, d.id("t"), d.set({"x", "y", "t"}));
    REQUIRE(r.accepted());
    CHECK(r.region->witness.paths() == std::vector<Path>{make_path(d, {"x", "y", "t"})});
  }

  TEST_CASE("diamond {a,t} is a bubble") {
    // Entrance {a, t}: the infan is a->t from ent - t plus the trivial path t.
    const RootedDigraph d = fixtures::diamond();
    const RegionResult r = is_bubble(d, d.id("t"), d.set({"a", "t"}));
    REQUIRE(r.accepted());
    CHECK(r.region->witness.paths() ==
          std::vector<Path>{make_path(d, {"a", "t"}), make_path(d, {"t"})});
    CHECK(oracle::brute_is_bubble(d, d.id("t"), d.set({"a", "t"})));
  }

  TEST_CASE("bubble membership") {
    const RootedDigraph d = fixtures::diamond();
    CHECK(is_bubble(d, d.id("t"), d.set({"a", "b", "t"})).accepted());
    const RootedDigraph c = fixtures::chainz();
    // Entrance {x, z}: z cannot reach t.
    CHECK_FALSE(is_bubble(c, c.id("t"), c.set({"x", "t", "z"})).accepted());
  }

  TEST_CASE("cut sides") {
    RootedDigraph d = fixtures::chain();
    CHECK(cut_side(d, d.id("t"), d.set({"x"})).set == d.set({"x", "y", "t"}));
    CHECK(cut_side(d, d.id("t"), d.set({"y"})).set == d.set({"y", "t"}));
    d = fixtures::chainz();
    CHECK(cut_side(d, d.id("t"), d.set({"y"})).set == d.set({"y", "t", "z"}));
    CHECK(code_of([&] { cut_side(d, d.id("t"), d.set({"z"})); }) ==
          ErrorCode::kNotAnEMSeparation);
  }

  TEST_CASE("largest bubbles") {
    RootedDigraph d = fixtures::chain();
    CHECK(largest_bubble(d, d.id("t")).set == d.set({"x", "y", "t"}));
    d = fixtures::diamond();
    CHECK(largest_bubble(d, d.id("t")).set == d.set({"a", "b", "t"}));
    d = fixtures::extra();
    CHECK(largest_bubble(d, d.id("t")).set == d.set({"a", "b", "t"}));
  }

  TEST_CASE("uniting bubbles") {
    RootedDigraph d = fixtures::chain();
    CHECK(unite_bubbles(d, {{d.set({"t"}), d.id("t")}}).set == d.set({"t"}));

    d = fixtures::chainz();
    try {
      unite_bubbles(d, {{d.set({"y", "t"}), d.id("t")}, {d.set({"z"}), d.id("z")}});
      FAIL("expected kChainConditionViolated");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kChainConditionViolated);
      CHECK(std::string(e.what()).find("index 1") != std::string::npos);
    }

    d = fixtures::diamond();
    const RegionWitness u =
        unite_bubbles(d, {{d.set({"t"}), d.id("t")}, {d.set({"a", "t"}), d.id("t")}});
    CHECK(u.set == d.set({"a", "t"}));
  }

  TEST_CASE("anti-bubbles") {
    RootedDigraph d = fixtures::chain();
    RegionResult r = is_anti_bubble(d, d.set({"y", "t"}));
    REQUIRE(r.accepted());
    CHECK(r.region->witness.paths() == std::vector<Path>{make_path(d, {"r", "x", "y"})});

    d = fixtures::diamond();
    r = is_anti_bubble(d, d.set({"a", "b", "t"}));
    REQUIRE(r.accepted());
    CHECK(r.region->witness.paths() ==
          std::vector<Path>{make_path(d, {"r", "a"}), make_path(d, {"r", "b"})});

    d = fixtures::star();
    r = is_anti_bubble(d, {});
    REQUIRE(r.accepted());
    CHECK(r.region->witness.empty());

    d = fixtures::chain();
    CHECK_FALSE(is_anti_bubble(d, d.set({"x", "t"})).accepted());
  }

  TEST_CASE("smallest anti-bubbles") {
    RootedDigraph d = fixtures::chain();
    CHECK(smallest_anti_bubble(d, d.id("t")).set == d.set({"y", "t"}));
    d = fixtures::chainz();
    CHECK(smallest_anti_bubble(d, d.id("t")).set == d.set({"y", "t"}));
    d = fixtures::diamond();
    CHECK(smallest_anti_bubble(d, d.id("t")).set == d.set({"a", "b", "t"}));
  }

  TEST_CASE("closure and exact searches agree with brute force") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      const RootedDigraph d = oracle::gen_random(2 + seed % 8, 0.35, seed);
      for (Vertex v = 0; v < d.vertex_count(); ++v) {
        if (v == d.root()) continue;
        CAPTURE(seed);
        CAPTURE(v);
        const oracle::BruteRegions b = oracle::brute_regions(d, v);
        CHECK(largest_bubble(d, v).set == b.largest_bubble);
        CHECK(smallest_anti_bubble(d, v).set == b.smallest_anti_bubble);
        CHECK(smallest_anti_bubble(d, v, AntiBubbleSearch::kExact).set == b.smallest_anti_bubble);
      }
    }
  }
}
