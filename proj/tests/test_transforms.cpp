#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "sachs/families.hpp"
#include "sachs/invariants.hpp"
#include "sachs/transforms.hpp"

using namespace sachs;

TEST_CASE("compression context of C5 plus a chord") {
  const Graph g = cycle(5).with_edge(0, 2);
  const auto ctx = compression_context(g, 0, 2);
  CHECK(ctx.common == singleton(1));
  CHECK(ctx.u_private == singleton(4));
  CHECK(ctx.v_private == singleton(3));
  REQUIRE(ctx.cross_edges.size() == 1);
  CHECK(ctx.cross_edges[0] == VertexPair{4, 3});
  const Graph h = compress(g, 0, 2);
  CHECK(a4_combinatorial(g) == 4);
  CHECK(a4_combinatorial(h) == 5);
  CHECK(h.size() == g.size());
  CHECK(h.neighbors(0) == (singleton(1) | singleton(2)));
  CHECK(h.has_edge(2, 4));
}

TEST_CASE("compression keeps the edge count and moves only private edges") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(rng, 8, 0.4);
    const int u = trial % 8, v = (trial / 8 + 1 + u) % 8;
    if (u == v) continue;
    const auto ctx = compression_context(g, u, v);
    const Graph h = compress(g, u, v);
    CHECK(h.size() == g.size());
    CHECK((h.neighbors(u) & ~singleton(v)) == ctx.common);
    CHECK((h.neighbors(v) & ~singleton(u)) == (ctx.common | ctx.u_private | ctx.v_private));
    CHECK(h.has_edge(u, v) == g.has_edge(u, v));
  }
}

TEST_CASE("compression rejects invalid pairs") {
  CHECK_THROWS_AS(compression_context(path(3), 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(compress(path(3), 0, 3), std::invalid_argument);
}

TEST_CASE("degree deletion identities on random graphs") {
  std::mt19937_64 rng(17);
  int audited = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const Graph g = oracle::random_graph(rng, 4 + trial % 7, 0.3);
    for (int v = 0; v < g.order(); ++v) {
      if (g.degree(v) > 2) {
        CHECK_THROWS_AS(delete_degree_le2_vertex(g, v), std::invalid_argument);
        continue;
      }
      const auto audit = delete_degree_le2_vertex(g, v);
      ++audited;
      CHECK(audit.identities_hold());
      CHECK(audit.reduced == g.without_vertex(v));
      CHECK(audit.m2_after == matching_count(audit.reduced, 2));
      CHECK(audit.q_after == quadrangle_count(audit.reduced));
      CHECK(audit.a4_before == a4_combinatorial(g));
      CHECK(audit.degree == g.degree(v));
    }
  }
  CHECK(audited > 100);
}

TEST_CASE("degree deletion on K4 is rejected") {
  CHECK_THROWS_AS(delete_degree_le2_vertex(complete(4), 0), std::invalid_argument);
  const auto audit = delete_degree_le2_vertex(cycle(5), 0);
  CHECK(audit.a4_before == 5);
  CHECK(audit.a4_after == 1);
}
