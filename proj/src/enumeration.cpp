#include "sachs/enumeration.hpp"

#include <exception>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include <omp.h>

#include "sachs/canonical.hpp"
#include "sachs/recognition.hpp"

namespace sachs {

void validate(const EnumSpec& spec) {
  if (spec.n < 1 || spec.n > kMaxEnumerationOrder)
    throw std::invalid_argument("enumeration order " + std::to_string(spec.n) + " outside [1, 10]");
  if (spec.m) {
    const int max_edges = spec.n * (spec.n - 1) / 2;
    const int min_edges = spec.connected_only ? spec.n - 1 : 0;
    if (*spec.m < min_edges || *spec.m > max_edges)
      throw std::invalid_argument("edge count " + std::to_string(*spec.m) + " infeasible for order " +
                                  std::to_string(spec.n));
  }
}

namespace {

struct Node {
  Graph graph;
  CanonicalCode code;
};

class Augmenter {
 public:
  explicit Augmenter(const EnumSpec& spec) : spec_(spec) {}

  Node root() const {
    Graph g(1);
    return {g, canonical_code(g)};
  }

  bool accepts_final(const Graph& g) const { return !spec_.m || g.size() == *spec_.m; }

  // Children on k+1 vertices of a parent on k vertices, in subset order.
  template <typename Visit>
  void children(const Node& parent, Visit&& visit) const {
    const Graph& p = parent.graph;
    const int k = p.order();
    const int target_order = k + 1;
    const bool last = target_order == spec_.n;
    const int edges = p.size();

    int min_new = spec_.connected_only ? 1 : 0;
    int max_new = k;
    if (spec_.m) {
      // Each later deletion of a non-cut vertex removes at least one edge.
      const int slack = spec_.connected_only ? spec_.n - target_order : 0;
      max_new = std::min(max_new, *spec_.m - edges - slack);
      if (last) min_new = std::max(min_new, *spec_.m - edges);
    }
    if (max_new < min_new) return;

    std::optional<Bipartition> sides;
    if (spec_.bipartite_only && spec_.connected_only) sides = is_bipartite(p);

    std::unordered_set<CanonicalCode> seen;
    const VertexSet subsets = VertexSet{1} << k;
    for (VertexSet nbrs = 0; nbrs < subsets; ++nbrs) {
      const int d = set_size(nbrs);
      if (d < min_new || d > max_new) continue;
      if (sides && (nbrs & sides->left) && (nbrs & sides->right)) continue;
      Graph child = p.with_vertex(nbrs);
      if (spec_.bipartite_only && !sides && !is_bipartite(child)) continue;

      auto labeling = canonical_labeling(child);
      const VertexSet deletable = spec_.connected_only ? child.non_cut_vertices() : child.vertices();
      int w = -1;
      for (int pos = target_order - 1; pos >= 0; --pos)
        if (contains(deletable, labeling.order[pos])) {
          w = labeling.order[pos];
          break;
        }
      if (w != k && canonical_code(child.without_vertex(w)) != parent.code) continue;
      if (!seen.insert(labeling.code).second) continue;
      visit(Node{std::move(child), std::move(labeling.code)});
    }
  }

  // Depth-first walk below `node`, emitting graphs of the target order.
  template <typename Emit>
  void descend(const Node& node, Emit&& emit) const {
    if (node.graph.order() == spec_.n) {
      if (accepts_final(node.graph)) emit(node.graph);
      return;
    }
    children(node, [&](Node child) { descend(child, emit); });
  }

  // Nodes at `level` in depth-first order.
  std::vector<Node> frontier(int level) const {
    std::vector<Node> out;
    collect_level(root(), level, out);
    return out;
  }

 private:
  void collect_level(const Node& node, int level, std::vector<Node>& out) const {
    if (node.graph.order() == level) {
      out.push_back(node);
      return;
    }
    children(node, [&](Node child) { collect_level(child, level, out); });
  }

  EnumSpec spec_;
};

}  // namespace

void enumerate_serial(const EnumSpec& spec, const GraphSink& sink) {
  validate(spec);
  const Augmenter gen(spec);
  gen.descend(gen.root(), [&](const Graph& g) { sink(g); });
}

void enumerate_parallel(const EnumSpec& spec, const GraphSink& sink, int threads) {
  validate(spec);
  if (spec.n <= 3) {
    enumerate_serial(spec, sink);
    return;
  }
  if (threads <= 0) threads = omp_get_max_threads();
  const Augmenter gen(spec);
  // Prefixes of the augmentation tree; each subtree is expanded into its own
  // buffer and buffers are flushed in prefix order.
  const int split = std::min(spec.n - 1, 7);
  const std::vector<Node> prefixes = gen.frontier(split);
  const std::size_t chunk = static_cast<std::size_t>(threads) * 8;
  const std::size_t n = static_cast<std::size_t>(spec.n);

  std::vector<std::vector<VertexSet>> buffers;
  for (std::size_t begin = 0; begin < prefixes.size(); begin += chunk) {
    const std::size_t end = std::min(prefixes.size(), begin + chunk);
    buffers.assign(end - begin, {});
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::size_t i = begin; i < end; ++i) {
      try {
        auto& out = buffers[i - begin];
        gen.descend(prefixes[i], [&](const Graph& g) {
          const auto rows = g.rows();
          out.insert(out.end(), rows.begin(), rows.end());
        });
      } catch (...) {
#pragma omp critical(sachs_enumeration_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
    for (const auto& out : buffers)
      for (std::size_t off = 0; off < out.size(); off += n)
        sink(Graph::from_rows(std::span<const VertexSet>(out.data() + off, n)));
  }
}

void enumerate(const EnumSpec& spec, const GraphSink& sink, int threads) {
  if (threads == 1)
    enumerate_serial(spec, sink);
  else
    enumerate_parallel(spec, sink, threads);
}

std::vector<Graph> collect(const EnumSpec& spec, int threads) {
  std::vector<Graph> out;
  enumerate(spec, [&](const Graph& g) { out.push_back(g); }, threads);
  return out;
}

std::uint64_t count(const EnumSpec& spec, int threads) {
  std::uint64_t total = 0;
  enumerate(spec, [&](const Graph&) { ++total; }, threads);
  return total;
}

}  // namespace sachs
