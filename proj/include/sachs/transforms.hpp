#pragma once

#include <vector>

#include "sachs/graph.hpp"
#include "sachs/integer.hpp"

namespace sachs {

// Neighbor-set calculus for an ordered vertex pair (u, v). None of the sets
// contain u or v.
struct CompressionContext {
  int u = 0;
  int v = 0;
  VertexSet common = 0;               // adjacent to both
  VertexSet u_private = 0;            // adjacent to u only
  VertexSet v_private = 0;            // adjacent to v only
  std::vector<VertexPair> cross_edges;  // edges u_private -- v_private, as (u side, v side)
};

CompressionContext compression_context(const Graph& g, int u, int v);

// Moves every edge from u to a private neighbor of u over to v. Defined for
// any u != v; the edge count is preserved and connectivity is not rechecked.
Graph compress(const Graph& g, int u, int v);

// Deleting a vertex of degree at most two, together with the counting
// identities relating m_2 and q of the graph to those of the reduced graph.
struct DegreeDeletionAudit {
  Graph reduced;
  int vertex = 0;
  int degree = 0;
  Integer m2_before = 0;      // m_2(G), counted directly
  Integer m2_after = 0;       // m_2(G - v)
  Integer m2_recurrence = 0;  // m_2(G) predicted from G - v
  Integer q_before = 0;
  Integer q_after = 0;
  Integer q_recurrence = 0;
  Integer a4_before = 0;
  Integer a4_after = 0;

  bool identities_hold() const { return m2_before == m2_recurrence && q_before == q_recurrence; }
};

// Throws std::invalid_argument when d(v) > 2.
DegreeDeletionAudit delete_degree_le2_vertex(const Graph& g, int v);

}  // namespace sachs
