#include "sachs/families.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace sachs {

namespace {

int total(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

void check_extremal_range(int n, int m) {
  if (n < 6 || n > Graph::kMaxOrder) throw std::invalid_argument("extremal graphs need 6 <= n <= 64");
  if (m < n - 1 || m > 2 * n - 4)
    throw std::invalid_argument("extremal graphs need n-1 <= m <= 2n-4, got m=" + std::to_string(m));
}

}  // namespace

ThresholdVector::ThresholdVector(std::vector<int> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty() || blocks_.size() % 2 != 0)
    throw std::invalid_argument("threshold vector needs an even, nonzero number of blocks");
  for (int h : blocks_)
    if (h < 1) throw std::invalid_argument("threshold vector blocks must be positive");
  if (order() > Graph::kMaxOrder) throw std::invalid_argument("threshold vector exceeds 64 vertices");
}

ThresholdVector ThresholdVector::normalized(std::vector<int> exponents) {
  for (int h : exponents)
    if (h < 0) throw std::invalid_argument("threshold exponents must be non-negative");
  // Tagged blocks: even index = 0, odd index = 1.
  std::vector<std::pair<int, int>> tagged;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    const int tag = static_cast<int>(i % 2);
    if (exponents[i] == 0) continue;
    if (!tagged.empty() && tagged.back().first == tag)
      tagged.back().second += exponents[i];
    else
      tagged.emplace_back(tag, exponents[i]);
  }
  if (!tagged.empty() && tagged.front().first == 1) {
    const int rest = tagged.front().second - 1;
    tagged.erase(tagged.begin());
    if (rest > 0) tagged.insert(tagged.begin(), {1, rest});
    if (!tagged.empty() && tagged.front().first == 0)
      tagged.front().second += 1;
    else
      tagged.insert(tagged.begin(), {0, 1});
  }
  std::vector<int> blocks;
  for (const auto& [tag, size] : tagged) blocks.push_back(size);
  if (!tagged.empty() && tagged.back().first == 0)
    throw std::invalid_argument("threshold vector must end with a dominating block");
  return ThresholdVector(std::move(blocks));
}

int ThresholdVector::order() const { return total(blocks_); }

DifferenceVector::DifferenceVector(std::vector<int> xs, std::vector<int> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
  if (xs_.empty() || xs_.size() != ys_.size())
    throw std::invalid_argument("difference vector needs equal, nonzero block counts");
  for (int s : xs_)
    if (s < 1) throw std::invalid_argument("difference vector blocks must be positive");
  for (int s : ys_)
    if (s < 1) throw std::invalid_argument("difference vector blocks must be positive");
  if (order() > Graph::kMaxOrder) throw std::invalid_argument("difference vector exceeds 64 vertices");
}

DifferenceVector DifferenceVector::normalized(std::vector<int> xs, std::vector<int> ys) {
  if (xs.size() != ys.size() || xs.empty())
    throw std::invalid_argument("difference vector needs equal, nonzero block counts");
  for (;;) {
    const std::size_t k = xs.size();
    bool changed = false;
    // 0-based: X_i ~ Y_j iff i + j <= k - 1.
    for (std::size_t i = 0; i < k && !changed; ++i) {
      if (xs[i] < 0 || ys[i] < 0) throw std::invalid_argument("difference blocks must be non-negative");
      if (xs[i] == 0) {
        if (i == 0) throw std::invalid_argument("empty X_1 leaves Y_k isolated");
        // Y_{k-1-i} and Y_{k-i} now have the same neighbourhood.
        ys[k - 1 - i] += ys[k - i];
        ys.erase(ys.begin() + static_cast<std::ptrdiff_t>(k - i));
        xs.erase(xs.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
      } else if (ys[i] == 0) {
        if (i == 0) throw std::invalid_argument("empty Y_1 leaves X_k isolated");
        xs[k - 1 - i] += xs[k - i];
        xs.erase(xs.begin() + static_cast<std::ptrdiff_t>(k - i));
        ys.erase(ys.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
      }
    }
    if (!changed) break;
  }
  return DifferenceVector(std::move(xs), std::move(ys));
}

int DifferenceVector::order() const { return total(xs_) + total(ys_); }

Graph threshold_from_vector(const ThresholdVector& tv) {
  std::vector<VertexPair> edges;
  int next = 0;
  for (std::size_t b = 0; b < tv.blocks().size(); ++b) {
    const bool dominating = b % 2 == 1;
    for (int i = 0; i < tv.blocks()[b]; ++i, ++next)
      if (dominating)
        for (int w = 0; w < next; ++w) edges.push_back({w, next});
  }
  return Graph::from_edges(tv.order(), edges);
}

namespace {

// Vertex ranges of each block: X blocks first, then Y blocks.
struct BlockLayout {
  std::vector<VertexSet> x, y;
};

BlockLayout layout(const DifferenceVector& dv) {
  BlockLayout out;
  int next = 0;
  for (int s : dv.xs()) {
    out.x.push_back(first_n(next + s) & ~first_n(next));
    next += s;
  }
  for (int s : dv.ys()) {
    out.y.push_back(first_n(next + s) & ~first_n(next));
    next += s;
  }
  return out;
}

Graph join_blocks(int n, const std::vector<VertexSet>& left, const std::vector<VertexSet>& right) {
  const std::size_t k = left.size();
  std::vector<VertexPair> edges;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j + i < k; ++j)
      for (int a : members(left[i]))
        for (int b : members(right[j])) edges.push_back({a, b});
  return Graph::from_edges(n, edges);
}

}  // namespace

Graph difference_from_vector(const DifferenceVector& dv) {
  const auto blocks = layout(dv);
  return join_blocks(dv.order(), blocks.x, blocks.y);
}

Graph difference_from_vector_by_y(const DifferenceVector& dv) {
  const auto blocks = layout(dv);
  return join_blocks(dv.order(), blocks.y, blocks.x);
}

ThresholdVector extremal_G2_vector(int n, int m) {
  check_extremal_range(n, m);
  return ThresholdVector::normalized({m - n + 1, 1, 2 * n - m - 3, 1});
}

DifferenceVector extremal_G3_vector(int n, int m) {
  check_extremal_range(n, m);
  return DifferenceVector::normalized({1, 1}, {m - n + 2, 2 * n - 4 - m});
}

Graph extremal_G1(int n) {
  check_extremal_range(n, n + 2);
  return threshold_from_vector(ThresholdVector({1, 2, n - 4, 1}));
}

Graph extremal_G2(int n, int m) { return threshold_from_vector(extremal_G2_vector(n, m)); }

Graph extremal_G3(int n, int m) { return difference_from_vector(extremal_G3_vector(n, m)); }

Graph complete(int n) {
  std::vector<VertexPair> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

Graph complete_bipartite(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("complete_bipartite needs non-negative sides");
  std::vector<VertexPair> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.push_back({u, a + v});
  return Graph::from_edges(a + b, edges);
}

Graph path(int n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  std::vector<VertexPair> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph::from_edges(n, edges);
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<VertexPair> edges;
  for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Graph::from_edges(n, edges);
}

Graph star(int n) {
  if (n < 1) throw std::invalid_argument("star needs n >= 1");
  return complete_bipartite(1, n - 1);
}

}  // namespace sachs
