#pragma once

#include <optional>
#include <vector>

#include "sachs/families.hpp"
#include "sachs/graph.hpp"

namespace sachs {

struct Bipartition {
  VertexSet left = 0;
  VertexSet right = 0;
};

// 2-colouring; each component's smallest vertex goes to `left`.
std::optional<Bipartition> is_bipartite(const Graph& g);

// Neighbourhoods of the vertices in `side` form a chain under inclusion.
bool neighborhoods_nested(const Graph& g, VertexSet side);

// Bipartite with nested neighbourhoods on one side.
bool is_difference(const Graph& g);

bool has_induced_p5(const Graph& g);

// Repeatedly strips an isolated or dominating vertex.
bool is_threshold(const Graph& g);

// Block vector of a connected threshold graph on >= 2 vertices, read off by
// alternately stripping all dominating and all isolated vertices.
std::optional<ThresholdVector> threshold_vector_of(const Graph& g);

// A spanning difference subgraph without isolated vertices exists iff some
// bipartition (left, right) has u in left adjacent to all of right and w in
// right adjacent to all of left; the double star on u, w is then one.
struct SpanningDifferenceWitness {
  Bipartition parts;
  int u = 0;  // in parts.left, adjacent to every vertex of parts.right
  int w = 0;  // in parts.right, adjacent to every vertex of parts.left
};

std::optional<SpanningDifferenceWitness> has_spanning_difference_subgraph(const Graph& g);

// Edge-subset search for a spanning difference subgraph without isolated
// vertices. Throws std::invalid_argument for more than 16 edges.
bool brute_spanning_difference(const Graph& g);
// Every such spanning subgraph, in edge-subset order.
std::vector<Graph> spanning_difference_subgraphs(const Graph& g);

// Duplicate classes of a difference graph with X = `x_side`, ordered so that
// N(X_1) > N(X_2) > ... and N(Y_1) > N(Y_2) > ... strictly.
struct DifferenceBlocks {
  std::vector<VertexSet> x;
  std::vector<VertexSet> y;
};

std::optional<DifferenceBlocks> difference_blocks(const Graph& g, VertexSet x_side);

}  // namespace sachs
