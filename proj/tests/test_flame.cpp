#include "doctest.h"

#include <algorithm>

#include "vflame/fixtures.hpp"
#include "vflame/flame.hpp"
#include "vflame/linkage.hpp"
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

std::vector<Vertex> ids(const RootedDigraph& d, std::initializer_list<std::string_view> names) {
  std::vector<Vertex> out;
  for (auto n : names) out.push_back(d.id(n));
  return out;
}

CertificateEntry& entry_at(FlameCertificate& cert, Vertex v) {
  auto it = std::find_if(cert.entries.begin(), cert.entries.end(),
                         [&](const CertificateEntry& e) { return e.vertex == v; });
  REQUIRE(it != cert.entries.end());
  return *it;
}

bool has_reason(const VertexVerdict* v, const std::string& reason) {
  return v && std::find(v->reasons.begin(), v->reasons.end(), reason) != v->reasons.end();
}

}  // namespace

TEST_SUITE("flame") {
  TEST_CASE("membership in G") {
    RootedDigraph d = fixtures::diamond();
    GMembership g = g_membership(d, d.id("t"), d.edges_of({{"a", "t"}, {"b", "t"}}));
    REQUIRE(g.member());
    CHECK(g.witness->paths() ==
          std::vector<Path>{make_path(d, {"r", "a", "t"}), make_path(d, {"r", "b", "t"})});

    d = fixtures::extra();
    g = g_membership(d, d.id("t"), d.edges_of({{"a", "t"}, {"b", "t"}}));
    CHECK_FALSE(g.member());
    CHECK(g.deficiency.achieved == 1);

    g = g_membership(d, d.id("t"), {});
    REQUIRE(g.member());
    CHECK(g.witness->empty());
    CHECK(code_of([&] { g_membership(d, d.id("t"), d.edges_of({{"r", "a"}})); }) ==
          ErrorCode::kEdgeNotIngoing);
  }

  TEST_CASE("flame check") {
    CHECK(flame_check(fixtures::diamond()).flame);
    CHECK(flame_check(fixtures::star()).flame);
    const RootedDigraph d = fixtures::extra();
    const FlameReport report = flame_check(d);
    CHECK_FALSE(report.flame);
    CHECK_FALSE(report.quasi_flame);
    CHECK_FALSE(report.at(d.id("t")).membership.member());
    CHECK(report.at(d.id("b")).membership.member());
  }

  TEST_CASE("largeness") {
    RootedDigraph d = fixtures::extra();
    CHECK(largeness_check(d, delete_edges(d, d.edges_of({{"a", "t"}}))).large);
    CHECK(largeness_check(d, delete_edges(d, d.edges_of({{"b", "t"}}))).large);
    d = fixtures::diamond();
    const LargenessReport report = largeness_check(d, delete_edges(d, d.edges_of({{"a", "t"}})));
    CHECK_FALSE(report.large);
    CHECK(report.kappa_drops == std::vector<Vertex>{d.id("t")});
    CHECK_FALSE(report.bubble_criterion);
    CHECK(code_of([&] { largeness_check(d, fixtures::chain()); }) == ErrorCode::kNotSpanning);
  }

  TEST_CASE("Lovasz reduction on the fixtures") {
    RootedDigraph d = fixtures::extra();
    RootedDigraph l = lovasz_reduce(d);
    CHECK(l.edge_count() == 3);
    CHECK((l == delete_edges(d, d.edges_of({{"a", "t"}})) ||
           l == delete_edges(d, d.edges_of({{"b", "t"}}))));
    CHECK(lovasz_reduce(fixtures::diamond()) == fixtures::diamond());
    CHECK(lovasz_reduce(fixtures::star()) == fixtures::star());
    CHECK(lovasz_reduce_greedy(d).edge_count() == 3);
  }

  TEST_CASE("Lovasz reduction is large, tight and edge-minimal") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      const RootedDigraph d = oracle::gen_random(2 + seed % 9, 0.4, seed);
      for (const RootedDigraph& l : {lovasz_reduce(d), lovasz_reduce_greedy(d)}) {
        CAPTURE(seed);
        std::size_t sum = 0;
        for (Vertex v = 0; v < d.vertex_count(); ++v) {
          if (v == d.root()) continue;
          const std::size_t k = kappa(d, v);
          sum += k;
          CHECK(l.in_degree(v) == k);
          CHECK(kappa(l, v) == k);
        }
        CHECK(l.edge_count() == sum);
        CHECK(largeness_check(d, l).large);
        for (const Edge& e : l.edges()) {
          if (e.tail == d.root()) continue;
          const RootedDigraph smaller = delete_edges(l, {e});
          CHECK(kappa(smaller, e.head) < kappa(d, e.head));
        }
      }
    }
  }

  TEST_CASE("no-collapse step") {
    RootedDigraph d = fixtures::extra();
    const Vertex t = d.id("t");
    NoCollapseResult r = no_collapse_step(d, t);
    CHECK(r.reduced.edge_count() == 3);
    CHECK(r.reduced.in_degree(t) == 1);
    CHECK(extreme_separations(r.reduced, t).near_root.set == d.set({"a"}));

    d = fixtures::diamond();
    r = no_collapse_step(d, d.id("t"));
    CHECK(r.reduced == d);

    d = fixtures::chain();
    r = no_collapse_step(d, d.id("t"));
    CHECK(r.reduced == d);
    CHECK(r.witness.paths() == std::vector<Path>{make_path(d, {"r", "x", "y", "t"})});
    CHECK(code_of([&] { no_collapse_step(d, d.root()); }) == ErrorCode::kPreconditionViolated);
  }

  TEST_CASE("omega construction on the fixtures") {
    RootedDigraph l = lovasz_reduce(fixtures::extra());
    OmegaResult o = omega_construct(l, ids(l, {"a", "b", "t"}));
    CHECK(o.flame == l);
    CHECK(o.state.committed.back().separator == l.set({"a"}));

    const RootedDigraph d = fixtures::diamond();
    CHECK(omega_construct(d, ids(d, {"a", "b", "t"})).flame == d);
    const RootedDigraph s = fixtures::star();
    CHECK(omega_construct(s, ids(s, {"a", "b"})).flame == s);
  }

  TEST_CASE("omega construction errors") {
    const RootedDigraph d = fixtures::diamond();
    CHECK(code_of([&] { omega_construct(d, ids(d, {"a", "t"})); }) ==
          ErrorCode::kPreconditionViolated);
    CHECK(code_of([&] { omega_construct(d, ids(d, {"a", "a", "b", "t"})); }) ==
          ErrorCode::kPreconditionViolated);
    const RootedDigraph e = fixtures::extra();
    CHECK(code_of([&] { omega_construct(e, ids(e, {"a", "b", "t"})); }) == ErrorCode::kNotAFlame);
  }

  TEST_CASE("omega construction keeps every committed witness") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
      const RootedDigraph l = lovasz_reduce(oracle::gen_random(3 + seed % 8, 0.45, seed));
      std::vector<Vertex> order;
      for (Vertex v = 0; v < l.vertex_count(); ++v)
        if (v != l.root()) order.push_back(v);
      for (int pass = 0; pass < 2; ++pass) {
        const OmegaResult o = omega_construct(l, order);
        CAPTURE(seed);
        CHECK(o.state.committed.size() == order.size());
        for (const OmegaStep& step : o.state.committed) {
          for (const Edge& e : step.witness.edges()) CHECK(o.flame.has_edge(e));
          CHECK(is_orthogonal_system(l, step.vertex, step.separator, step.witness));
        }
        std::reverse(order.begin(), order.end());
      }
    }
  }

  TEST_CASE("certificates on the fixtures") {
    RootedDigraph d = fixtures::extra();
    RootedDigraph l = delete_edges(d, d.edges_of({{"a", "t"}}));
    FlameCertificate cert = certify(d, l);
    CertificateEntry& t = entry_at(cert, d.id("t"));
    CHECK(t.separator == d.set({"a"}));
    CHECK(t.paths == std::vector<Path>{make_path(d, {"r", "a", "b", "t"})});
    CHECK(verify_certificate(cert).ok());

    d = fixtures::diamond();
    cert = certify(d, d);
    CHECK(entry_at(cert, d.id("t")).separator == d.set({"a", "b"}));
    CHECK(entry_at(cert, d.id("t")).paths ==
          std::vector<Path>{make_path(d, {"r", "a", "t"}), make_path(d, {"r", "b", "t"})});
    CHECK(verify_certificate(cert).ok());

    d = fixtures::chain();
    cert = certify(d, d);
    CHECK(entry_at(cert, d.id("t")).separator == d.set({"x"}));
    CHECK(entry_at(cert, d.id("t")).paths ==
          std::vector<Path>{make_path(d, {"r", "x", "y", "t"})});
    CHECK(verify_certificate(cert).ok());

    d = fixtures::star();
    cert = certify(d, d);
    CHECK(entry_at(cert, d.id("a")).rv_present);
    CHECK(entry_at(cert, d.id("a")).paths.empty());
    CHECK(verify_certificate(cert).ok());
  }

  TEST_CASE("certify rejects bad inputs") {
    const RootedDigraph d = fixtures::diamond();
    CHECK(code_of([&] { certify(d, delete_edges(d, d.edges_of({{"a", "t"}}))); }) ==
          ErrorCode::kNotLarge);
    const RootedDigraph e = fixtures::extra();
    CHECK(code_of([&] { certify(e, e); }) == ErrorCode::kNotAFlame);
  }

  TEST_CASE("tampering: a missing path breaks coverage") {
    const RootedDigraph d = fixtures::diamond();
    FlameCertificate cert = certify(d, d);
    entry_at(cert, d.id("t")).paths.pop_back();
    const CertificateReport report = verify_certificate(cert);
    CHECK_FALSE(report.ok());
    CHECK(has_reason(report.find(d.id("t")), "E+ coverage"));
    CHECK(report.find(d.id("a"))->ok());
  }

  TEST_CASE("tampering: a shrunk separator leaves a path uncut") {
    const RootedDigraph d = fixtures::diamond();
    FlameCertificate cert = certify(d, d);
    entry_at(cert, d.id("t")).separator = d.set({"a"});
    const CertificateReport report = verify_certificate(cert);
    const VertexVerdict* t = report.find(d.id("t"));
    REQUIRE(t);
    CHECK(has_reason(t, "separation"));
    REQUIRE(t->evidence);
    CHECK(*t->evidence == make_path(d, {"r", "b", "t"}));
  }

  TEST_CASE("tampering: a missing entry and a foreign flame") {
    const RootedDigraph d = fixtures::diamond();
    FlameCertificate cert = certify(d, d);
    cert.entries.erase(cert.entries.begin());
    CHECK_FALSE(verify_certificate(cert).ok());

    cert = certify(d, d);
    cert.flame = fixtures::chain();
    CHECK_FALSE(verify_certificate(cert).ok());
  }

  TEST_CASE("certify after reduction verifies on random digraphs") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      const RootedDigraph d = oracle::gen_random(2 + seed % 12, 0.3, seed);
      CAPTURE(seed);
      CHECK(verify_certificate(certify(d, lovasz_reduce(d))).ok());
    }
  }
}
