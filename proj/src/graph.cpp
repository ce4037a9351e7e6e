#include "sachs/graph.hpp"

#include <stdexcept>
#include <string>

namespace sachs {

std::vector<int> members(VertexSet s) {
  std::vector<int> out;
  out.reserve(set_size(s));
  for (; s; s &= s - 1) out.push_back(lowest(s));
  return out;
}

namespace {

void check_order(int n) {
  if (n < 0 || n > Graph::kMaxOrder)
    throw std::invalid_argument("graph order " + std::to_string(n) + " outside [0, 64]");
}

}  // namespace

Graph::Graph(int n) : n_(n) { check_order(n); }

Graph Graph::from_edges(int n, std::span<const VertexPair> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") out of range for order " + std::to_string(n));
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    g.adj_[u] |= singleton(v);
    g.adj_[v] |= singleton(u);
  }
  return g;
}

Graph Graph::from_rows(std::span<const VertexSet> rows) {
  Graph g(static_cast<int>(rows.size()));
  for (int v = 0; v < g.n_; ++v) g.adj_[v] = rows[v];
  if (!is_valid(g)) throw std::invalid_argument("adjacency rows are not a simple undirected graph");
  return g;
}

int Graph::size() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += set_size(adj_[v]);
  return twice / 2;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int d = n_;
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

std::vector<VertexPair> Graph::edges() const {
  std::vector<VertexPair> out;
  for (int u = 0; u < n_; ++u)
    for (VertexSet s = adj_[u] & ~first_n(u + 1); s; s &= s - 1) out.push_back({u, lowest(s)});
  return out;
}

namespace {

VertexSet reach(const Graph& g, int from, VertexSet allowed) {
  VertexSet seen = singleton(from);
  VertexSet frontier = seen;
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet s = frontier; s; s &= s - 1) next |= g.neighbors(lowest(s));
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

}  // namespace

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  return reach(*this, 0, vertices()) == vertices();
}

std::optional<int> Graph::distance(int u, int v) const {
  VertexSet seen = singleton(u);
  VertexSet frontier = seen;
  for (int d = 0; frontier; ++d) {
    if (frontier & singleton(v)) return d;
    VertexSet next = 0;
    for (VertexSet s = frontier; s; s &= s - 1) next |= adj_[lowest(s)];
    next &= ~seen;
    seen |= next;
    frontier = next;
  }
  return std::nullopt;
}

VertexSet Graph::non_cut_vertices() const {
  VertexSet out = 0;
  const VertexSet all = vertices();
  for (int v = 0; v < n_; ++v) {
    const VertexSet rest = all & ~singleton(v);
    if (rest == 0 || reach(*this, lowest(rest), rest) == rest) out |= singleton(v);
  }
  return out;
}

Graph Graph::with_edge(int u, int v) const {
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  Graph g = *this;
  g.adj_[u] |= singleton(v);
  g.adj_[v] |= singleton(u);
  return g;
}

Graph Graph::without_edge(int u, int v) const {
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  Graph g = *this;
  g.adj_[u] &= ~singleton(v);
  g.adj_[v] &= ~singleton(u);
  return g;
}

Graph Graph::induced(VertexSet s) const {
  s &= vertices();
  const auto keep = members(s);
  Graph g(static_cast<int>(keep.size()));
  for (int i = 0; i < g.n_; ++i) {
    VertexSet row = 0;
    for (int j = 0; j < g.n_; ++j)
      if (has_edge(keep[i], keep[j])) row |= singleton(j);
    g.adj_[i] = row;
  }
  return g;
}

Graph Graph::without_vertices(VertexSet s) const { return induced(vertices() & ~s); }

Graph Graph::without_vertex(int v) const { return induced(vertices() & ~singleton(v)); }

Graph Graph::spanning_subgraph(std::span<const VertexPair> edges) const {
  Graph g(n_);
  for (const auto& [u, v] : edges) {
    if (!has_edge(u, v)) throw std::invalid_argument("spanning subgraph edge not in graph");
    g.adj_[u] |= singleton(v);
    g.adj_[v] |= singleton(u);
  }
  return g;
}

Graph Graph::relabeled(std::span<const int> relabel) const {
  if (static_cast<int>(relabel.size()) != n_) throw std::invalid_argument("relabeling has wrong length");
  VertexSet image = 0;
  for (int x : relabel) {
    if (x < 0 || x >= n_) throw std::invalid_argument("relabeling index out of range");
    image |= singleton(x);
  }
  if (image != vertices()) throw std::invalid_argument("relabeling is not a permutation");
  Graph g(n_);
  for (int u = 0; u < n_; ++u)
    for (VertexSet s = adj_[u]; s; s &= s - 1) g.adj_[relabel[u]] |= singleton(relabel[lowest(s)]);
  return g;
}

Graph Graph::with_vertex(VertexSet nbrs) const {
  if (n_ == kMaxOrder) throw std::invalid_argument("graph already has 64 vertices");
  Graph g = *this;
  nbrs &= vertices();
  g.n_ = n_ + 1;
  g.adj_[n_] = nbrs;
  for (VertexSet s = nbrs; s; s &= s - 1) g.adj_[lowest(s)] |= singleton(n_);
  return g;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.n_ != b.n_) return false;
  for (int v = 0; v < a.n_; ++v)
    if (a.adj_[v] != b.adj_[v]) return false;
  return true;
}

bool is_valid(const Graph& g) {
  const VertexSet all = g.vertices();
  for (int u = 0; u < g.order(); ++u) {
    const VertexSet row = g.neighbors(u);
    if (row & ~all) return false;
    if (contains(row, u)) return false;
    for (VertexSet s = row; s; s &= s - 1)
      if (!g.has_edge(lowest(s), u)) return false;
  }
  return true;
}

}  // namespace sachs
