#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace sachs {

// Bit v set <=> vertex v is a member.
using VertexSet = std::uint64_t;

constexpr VertexSet singleton(int v) { return VertexSet{1} << v; }
constexpr bool contains(VertexSet s, int v) { return (s >> v) & 1U; }
constexpr int set_size(VertexSet s) { return std::popcount(s); }
constexpr int lowest(VertexSet s) { return std::countr_zero(s); }
constexpr VertexSet first_n(int n) { return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1; }

std::vector<int> members(VertexSet s);

struct VertexPair {
  int u;
  int v;
  friend bool operator==(const VertexPair&, const VertexPair&) = default;
};

// Simple undirected graph on vertices 0..n-1, one adjacency word per vertex.
// Values are immutable; every editing operation returns a new graph.
class Graph {
 public:
  static constexpr int kMaxOrder = 64;

  Graph() = default;
  explicit Graph(int n);

  // Throws std::invalid_argument on an out-of-range index, a self-loop or n > 64.
  static Graph from_edges(int n, std::span<const VertexPair> edges);
  static Graph from_edges(int n, std::initializer_list<VertexPair> edges) {
    return from_edges(n, std::span<const VertexPair>(edges.begin(), edges.size()));
  }
  // Rows must already be symmetric and loop-free; checked.
  static Graph from_rows(std::span<const VertexSet> rows);

  int order() const { return n_; }
  int size() const;  // edge count
  VertexSet vertices() const { return first_n(n_); }

  bool has_edge(int u, int v) const { return contains(adj_[u], v); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return set_size(adj_[v]); }
  int max_degree() const;
  int min_degree() const;
  std::span<const VertexSet> rows() const { return {adj_.data(), static_cast<std::size_t>(n_)}; }

  std::vector<VertexPair> edges() const;  // u < v, lexicographic

  bool is_connected() const;
  std::optional<int> distance(int u, int v) const;  // nullopt when unreachable
  // Vertices whose removal keeps the graph connected (assumes connected input).
  VertexSet non_cut_vertices() const;

  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;
  Graph without_vertex(int v) const;
  Graph without_vertices(VertexSet s) const;
  Graph induced(VertexSet s) const;
  // Spanning subgraph on the listed edges; each must be an edge of this graph.
  Graph spanning_subgraph(std::span<const VertexPair> edges) const;
  // relabel[old] = new; must be a permutation of 0..n-1.
  Graph relabeled(std::span<const int> relabel) const;
  // Adds a vertex n adjacent to `nbrs`.
  Graph with_vertex(VertexSet nbrs) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  int n_ = 0;
  std::array<VertexSet, kMaxOrder> adj_{};
};

bool is_valid(const Graph& g);  // symmetry and irreflexivity

}  // namespace sachs
