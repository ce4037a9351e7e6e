#pragma once

#include <vector>

#include "sachs/graph.hpp"

namespace sachs {

// Build sequence of a connected threshold graph as block sizes
// (0^h1, 1^h2, ..., 0^h_{l-1}, 1^h_l): a 0-block adds isolated vertices, a
// 1-block adds dominating vertices.
class ThresholdVector {
 public:
  // Strict form: l even, every h_i >= 1. Throws std::invalid_argument.
  explicit ThresholdVector(std::vector<int> blocks);

  // Accepts zero-size blocks (dropped, neighbours merged) and a leading
  // 1-block, whose first vertex is equivalent to an isolated start vertex.
  static ThresholdVector normalized(std::vector<int> exponents);

  const std::vector<int>& blocks() const { return blocks_; }
  int order() const;

  friend bool operator==(const ThresholdVector&, const ThresholdVector&) = default;

 private:
  std::vector<int> blocks_;
};

// Block sizes (x_1..x_k; y_1..y_k): block X_i is joined to Y_1 u ... u Y_{k-i+1}.
class DifferenceVector {
 public:
  // Strict form: equal lengths k >= 1, all sizes >= 1.
  DifferenceVector(std::vector<int> xs, std::vector<int> ys);

  // Zero-size blocks merge the two neighbouring blocks of the other side that
  // become duplicates. Throws when x_1 or y_1 is zero (isolated vertices).
  static DifferenceVector normalized(std::vector<int> xs, std::vector<int> ys);

  const std::vector<int>& xs() const { return xs_; }
  const std::vector<int>& ys() const { return ys_; }
  int character() const { return static_cast<int>(xs_.size()); }
  int order() const;

  friend bool operator==(const DifferenceVector&, const DifferenceVector&) = default;

 private:
  std::vector<int> xs_, ys_;
};

// Vertices are numbered in construction order.
Graph threshold_from_vector(const ThresholdVector& tv);
// X vertices first (block by block), then Y vertices.
Graph difference_from_vector(const DifferenceVector& dv);
// Same graph built by joining Y_j to X_1 u ... u X_{k-j+1}.
Graph difference_from_vector_by_y(const DifferenceVector& dv);

// Threshold graph (0^1, 1^2, 0^(n-4), 1^1); n >= 6, n + 2 edges.
Graph extremal_G1(int n);
// Threshold graph (0^(m-n+1), 1^1, 0^(2n-m-3), 1^1); n >= 6, n-1 <= m <= 2n-4.
Graph extremal_G2(int n, int m);
// Difference graph (1,1; m-n+2, 2n-4-m); n >= 6, n-1 <= m <= 2n-4.
Graph extremal_G3(int n, int m);
ThresholdVector extremal_G2_vector(int n, int m);
DifferenceVector extremal_G3_vector(int n, int m);

Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph path(int n);
Graph cycle(int n);
Graph star(int n);  // K_{1,n-1}

}  // namespace sachs
