#include "sachs/recognition.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

namespace sachs {

std::optional<Bipartition> is_bipartite(const Graph& g) {
  Bipartition parts;
  VertexSet unseen = g.vertices();
  while (unseen) {
    const int root = lowest(unseen);
    VertexSet frontier = singleton(root);
    bool left = true;
    while (frontier) {
      (left ? parts.left : parts.right) |= frontier;
      unseen &= ~frontier;
      VertexSet next = 0;
      for (VertexSet s = frontier; s; s &= s - 1) next |= g.neighbors(lowest(s));
      if (next & (left ? parts.left : parts.right)) return std::nullopt;
      frontier = next & unseen;
      left = !left;
    }
  }
  // Edges inside a class are caught above only between consecutive layers.
  for (int v = 0; v < g.order(); ++v) {
    const VertexSet own = contains(parts.left, v) ? parts.left : parts.right;
    if (g.neighbors(v) & own) return std::nullopt;
  }
  return parts;
}

bool neighborhoods_nested(const Graph& g, VertexSet side) {
  auto vs = members(side);
  std::sort(vs.begin(), vs.end(), [&](int a, int b) { return g.degree(a) < g.degree(b); });
  for (std::size_t i = 1; i < vs.size(); ++i)
    if (g.neighbors(vs[i - 1]) & ~g.neighbors(vs[i])) return false;
  return true;
}

bool is_difference(const Graph& g) {
  const auto parts = is_bipartite(g);
  if (!parts) return false;
  VertexSet small = parts->left, large = parts->right;
  if (set_size(small) > set_size(large)) std::swap(small, large);
  return neighborhoods_nested(g, small) || neighborhoods_nested(g, large);
}

bool has_induced_p5(const Graph& g) {
  const int n = g.order();
  if (n < 5) return false;
  int idx[5];
  // Lexicographic 5-subsets.
  for (int i = 0; i < 5; ++i) idx[i] = i;
  for (;;) {
    VertexSet s = 0;
    for (int i : idx) s |= singleton(i);
    int edges = 0;
    VertexSet leaves = 0;
    bool ok = true;
    for (int v : idx) {
      const int d = set_size(g.neighbors(v) & s);
      if (d == 0 || d > 2) {
        ok = false;
        break;
      }
      edges += d;
      if (d == 1) leaves |= singleton(v);
    }
    // Four edges with degrees 1 or 2 and two leaves is P5 or a triangle plus
    // a disjoint edge; only in the latter are the leaves adjacent.
    if (ok && edges == 8 && set_size(leaves) == 2 && !g.has_edge(lowest(leaves), lowest(leaves & (leaves - 1))))
      return true;
    int k = 4;
    while (k >= 0 && idx[k] == n - 5 + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int j = k + 1; j < 5; ++j) idx[j] = idx[j - 1] + 1;
  }
  return false;
}

bool is_threshold(const Graph& g) {
  VertexSet remaining = g.vertices();
  while (remaining) {
    const int left = set_size(remaining);
    bool stripped = false;
    for (VertexSet s = remaining; s; s &= s - 1) {
      const int v = lowest(s);
      const int d = set_size(g.neighbors(v) & remaining);
      if (d == 0 || d == left - 1) {
        remaining &= ~singleton(v);
        stripped = true;
        break;
      }
    }
    if (!stripped) return false;
  }
  return true;
}

std::optional<ThresholdVector> threshold_vector_of(const Graph& g) {
  if (g.order() < 2 || !g.is_connected()) return std::nullopt;
  // Groups in stripping order, tag 1 = dominating.
  std::vector<std::pair<int, int>> groups;
  VertexSet remaining = g.vertices();
  int tag = 1;
  while (remaining) {
    const int left = set_size(remaining);
    VertexSet group = 0;
    for (VertexSet s = remaining; s; s &= s - 1) {
      const int v = lowest(s);
      const int d = set_size(g.neighbors(v) & remaining);
      if (left == 1 || (tag == 1 ? d == left - 1 : d == 0)) group |= singleton(v);
    }
    if (group == 0) return std::nullopt;
    groups.emplace_back(tag, set_size(group));
    remaining &= ~group;
    tag ^= 1;
  }
  std::vector<int> exponents;
  if (groups.back().first == 1) exponents.push_back(0);
  for (auto it = groups.rbegin(); it != groups.rend(); ++it) exponents.push_back(it->second);
  return ThresholdVector::normalized(std::move(exponents));
}

std::optional<SpanningDifferenceWitness> has_spanning_difference_subgraph(const Graph& g) {
  // The double star needs an edge uw with N(u) u N(w) = V.
  const VertexSet all = g.vertices();
  for (const auto& [a, b] : g.edges()) {
    if ((g.neighbors(a) | g.neighbors(b)) != all) continue;
    SpanningDifferenceWitness w;
    w.u = a;
    w.w = b;
    w.parts.right = g.neighbors(a);
    w.parts.left = all & ~w.parts.right;
    return w;
  }
  return std::nullopt;
}

namespace {

template <typename Visit>
void for_each_spanning_difference(const Graph& g, Visit&& visit) {
  const auto edges = g.edges();
  if (edges.size() > 16) throw std::invalid_argument("brute spanning-difference search supports at most 16 edges");
  const VertexSet all = g.vertices();
  const std::uint32_t subsets = 1U << edges.size();
  for (std::uint32_t mask = 1; mask < subsets; ++mask) {
    std::array<VertexSet, Graph::kMaxOrder> rows{};
    VertexSet covered = 0;
    for (std::uint32_t s = mask; s; s &= s - 1) {
      const auto& [u, v] = edges[std::countr_zero(s)];
      rows[u] |= singleton(v);
      rows[v] |= singleton(u);
      covered |= singleton(u) | singleton(v);
    }
    if (covered != all) continue;
    const Graph b = Graph::from_rows(std::span<const VertexSet>(rows.data(), static_cast<std::size_t>(g.order())));
    if (is_difference(b) && !visit(b)) return;
  }
}

}  // namespace

bool brute_spanning_difference(const Graph& g) {
  bool found = false;
  for_each_spanning_difference(g, [&](const Graph&) {
    found = true;
    return false;
  });
  return found;
}

std::vector<Graph> spanning_difference_subgraphs(const Graph& g) {
  std::vector<Graph> out;
  for_each_spanning_difference(g, [&](const Graph& b) {
    out.push_back(b);
    return true;
  });
  return out;
}

namespace {

std::optional<std::vector<VertexSet>> duplicate_chain(const Graph& g, VertexSet side) {
  std::vector<VertexSet> classes;
  std::vector<VertexSet> nbhds;
  for (int v : members(side)) {
    auto it = std::find(nbhds.begin(), nbhds.end(), g.neighbors(v));
    if (it == nbhds.end()) {
      nbhds.push_back(g.neighbors(v));
      classes.push_back(singleton(v));
    } else {
      classes[it - nbhds.begin()] |= singleton(v);
    }
  }
  std::vector<std::size_t> order(classes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return set_size(nbhds[a]) > set_size(nbhds[b]); });
  std::vector<VertexSet> sorted;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0 && (nbhds[order[i]] & ~nbhds[order[i - 1]])) return std::nullopt;
    sorted.push_back(classes[order[i]]);
  }
  return sorted;
}

}  // namespace

std::optional<DifferenceBlocks> difference_blocks(const Graph& g, VertexSet x_side) {
  const VertexSet y_side = g.vertices() & ~x_side;
  for (int v : members(x_side))
    if (g.neighbors(v) & x_side) return std::nullopt;
  for (int v : members(y_side))
    if (g.neighbors(v) & y_side) return std::nullopt;
  auto x = duplicate_chain(g, x_side);
  auto y = duplicate_chain(g, y_side);
  if (!x || !y) return std::nullopt;
  return DifferenceBlocks{std::move(*x), std::move(*y)};
}

}  // namespace sachs
