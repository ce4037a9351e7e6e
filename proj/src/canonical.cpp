#include "sachs/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace sachs {

namespace {

using Partition = std::vector<VertexSet>;  // ordered cells

// Splits cells by neighbor counts into splitters until the partition is
// equitable. Decisions only depend on cell order and counts, so the result
// commutes with relabeling.
void refine(const Graph& g, Partition& cells, std::vector<VertexSet> queue, int n) {
  std::size_t head = 0;
  while (head < queue.size() && static_cast<int>(cells.size()) < n) {
    const VertexSet splitter = queue[head++];
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const VertexSet cell = cells[i];
      if (set_size(cell) == 1) continue;
      std::array<VertexSet, Graph::kMaxOrder + 1> by_count{};
      int lo = Graph::kMaxOrder, hi = 0;
      for (VertexSet s = cell; s; s &= s - 1) {
        const int v = lowest(s);
        const int c = set_size(g.neighbors(v) & splitter);
        by_count[c] |= singleton(v);
        lo = std::min(lo, c);
        hi = std::max(hi, c);
      }
      if (lo == hi) continue;
      Partition fragments;
      for (int c = lo; c <= hi; ++c)
        if (by_count[c]) fragments.push_back(by_count[c]);
      cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(i));
      cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(i), fragments.begin(), fragments.end());
      queue.insert(queue.end(), fragments.begin(), fragments.end());
      i += fragments.size() - 1;
    }
  }
}

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalLabeling run() {
    if (n_ == 0) return {{}, CanonicalCode(std::string(1, '\0'))};
    Partition cells{g_.vertices()};
    refine(g_, cells, {g_.vertices()}, n_);
    search(cells);
    return {best_order_, encode()};
  }

 private:
  struct UnionFind {
    std::array<int, Graph::kMaxOrder> parent{};
    explicit UnionFind(int n) { std::iota(parent.begin(), parent.begin() + n, 0); }
    int find(int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
  };

  bool stabilizes(const std::vector<int>& perm, const Partition& cells) const {
    for (VertexSet cell : cells) {
      VertexSet image = 0;
      for (VertexSet s = cell; s; s &= s - 1) image |= singleton(perm[lowest(s)]);
      if (image != cell) return false;
    }
    return true;
  }

  void search(const Partition& cells) {
    if (static_cast<int>(cells.size()) == n_) {
      leaf(cells);
      return;
    }
    std::size_t target = 0;
    while (set_size(cells[target]) == 1) ++target;
    const VertexSet cell = cells[target];

    UnionFind orbits(n_);
    std::size_t applied = 0;
    std::vector<int> explored;
    for (VertexSet s = cell; s; s &= s - 1) {
      const int x = lowest(s);
      for (; applied < automorphisms_.size(); ++applied) {
        const auto& perm = automorphisms_[applied];
        if (!stabilizes(perm, cells)) continue;
        for (int v = 0; v < n_; ++v) orbits.unite(v, perm[v]);
      }
      const bool equivalent = std::any_of(explored.begin(), explored.end(),
                                          [&](int y) { return orbits.find(y) == orbits.find(x); });
      if (equivalent) continue;

      Partition child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(target));
      child.push_back(singleton(x));
      child.push_back(cell & ~singleton(x));
      child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(target) + 1, cells.end());
      refine(g_, child, {singleton(x)}, n_);
      search(child);
      explored.push_back(x);
    }
  }

  void leaf(const Partition& cells) {
    std::vector<int> order(n_);
    std::array<int, Graph::kMaxOrder> position{};
    for (int i = 0; i < n_; ++i) {
      order[i] = lowest(cells[i]);
      position[order[i]] = i;
    }
    std::vector<VertexSet> rows(n_);
    for (int i = 0; i < n_; ++i) {
      VertexSet row = 0;
      for (VertexSet s = g_.neighbors(order[i]); s; s &= s - 1) row |= singleton(position[lowest(s)]);
      rows[i] = row;
    }
    if (first_order_.empty()) {
      first_order_ = best_order_ = order;
      first_rows_ = best_rows_ = rows;
      return;
    }
    if (rows == first_rows_) {
      record_automorphism(first_order_, order);
      return;
    }
    if (rows > best_rows_) {
      best_rows_ = std::move(rows);
      best_order_ = std::move(order);
    } else if (rows == best_rows_) {
      record_automorphism(best_order_, order);
    }
  }

  void record_automorphism(const std::vector<int>& from, const std::vector<int>& to) {
    std::vector<int> perm(n_);
    for (int i = 0; i < n_; ++i) perm[from[i]] = to[i];
    automorphisms_.push_back(std::move(perm));
  }

  CanonicalCode encode() const {
    std::string bytes(1, static_cast<char>(n_));
    const int bits = n_ * (n_ - 1) / 2;
    bytes.resize(1 + (bits + 7) / 8, '\0');
    int k = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j, ++k)
        if (contains(best_rows_[i], j)) bytes[1 + k / 8] = static_cast<char>(bytes[1 + k / 8] | (1 << (k % 8)));
    return CanonicalCode(std::move(bytes));
  }

  const Graph& g_;
  int n_;
  std::vector<std::vector<int>> automorphisms_;
  std::vector<int> first_order_, best_order_;
  std::vector<VertexSet> first_rows_, best_rows_;
};

}  // namespace

Graph CanonicalCode::graph() const {
  const int n = order();
  std::vector<VertexPair> edges;
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k)
      if ((static_cast<unsigned char>(bytes_[1 + k / 8]) >> (k % 8)) & 1U) edges.push_back({i, j});
  return Graph::from_edges(n, edges);
}

CanonicalLabeling canonical_labeling(const Graph& g) { return Canonizer(g).run(); }

CanonicalCode canonical_code(const Graph& g) { return canonical_labeling(g).code; }

Graph canonical_form(const Graph& g) { return canonical_code(g).graph(); }

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_code(a) == canonical_code(b);
}

}  // namespace sachs
