#include "sachs/transforms.hpp"

#include <stdexcept>
#include <string>

#include "sachs/invariants.hpp"

namespace sachs {

namespace {

void check_pair(const Graph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order())
    throw std::invalid_argument("vertex pair out of range");
  if (u == v) throw std::invalid_argument("vertex pair must be distinct");
}

}  // namespace

CompressionContext compression_context(const Graph& g, int u, int v) {
  check_pair(g, u, v);
  const VertexSet others = g.vertices() & ~singleton(u) & ~singleton(v);
  CompressionContext ctx;
  ctx.u = u;
  ctx.v = v;
  ctx.common = g.neighbors(u) & g.neighbors(v) & others;
  ctx.u_private = g.neighbors(u) & ~g.neighbors(v) & others;
  ctx.v_private = g.neighbors(v) & ~g.neighbors(u) & others;
  for (int x : members(ctx.u_private))
    for (VertexSet s = g.neighbors(x) & ctx.v_private; s; s &= s - 1) ctx.cross_edges.push_back({x, lowest(s)});
  return ctx;
}

Graph compress(const Graph& g, int u, int v) {
  const auto ctx = compression_context(g, u, v);
  Graph h = g;
  for (int x : members(ctx.u_private)) h = h.without_edge(u, x).with_edge(v, x);
  return h;
}

DegreeDeletionAudit delete_degree_le2_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex out of range");
  const int d = g.degree(v);
  if (d > 2)
    throw std::invalid_argument("vertex " + std::to_string(v) + " has degree " + std::to_string(d) + " > 2");

  DegreeDeletionAudit audit;
  audit.vertex = v;
  audit.degree = d;
  audit.reduced = g.without_vertex(v);
  const Graph& h = audit.reduced;
  auto shifted = [v](int w) { return w > v ? w - 1 : w; };

  audit.m2_before = matching_count(g, 2);
  audit.m2_after = matching_count(h, 2);
  audit.q_before = quadrangle_count(g);
  audit.q_after = quadrangle_count(h);
  audit.a4_before = a4_combinatorial(g);
  audit.a4_after = a4_combinatorial(h);

  const auto nbrs = members(g.neighbors(v));
  const Integer edges_after = h.size();
  switch (d) {
    case 0:
      audit.m2_recurrence = audit.m2_after;
      audit.q_recurrence = audit.q_after;
      break;
    case 1: {
      // 2-matchings through the pendant edge vx pair it with an edge missing x.
      const int x = shifted(nbrs[0]);
      audit.m2_recurrence = edges_after - h.degree(x) + audit.m2_after;
      audit.q_recurrence = audit.q_after;
      break;
    }
    default: {
      const int x = shifted(nbrs[0]);
      const int y = shifted(nbrs[1]);
      audit.m2_recurrence = 2 * edges_after - h.degree(x) - h.degree(y) + audit.m2_after;
      audit.q_recurrence = audit.q_after + set_size(h.neighbors(x) & h.neighbors(y));
      break;
    }
  }
  return audit;
}

}  // namespace sachs
