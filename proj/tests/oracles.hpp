#pragma once

// Slow reference implementations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "sachs/graph.hpp"
#include "sachs/integer.hpp"

namespace oracle {

using sachs::Graph;
using sachs::Integer;
using sachs::VertexPair;

// det(xI - A) by the permutation expansion. A term survives only when every
// moved point maps to a neighbour; it then contributes sign * (-1)^moved * x^fixed.
inline std::vector<Integer> permutation_char_poly(const Graph& g) {
  const int n = g.order();
  std::vector<Integer> coeffs(n + 1, 0);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int fixed = 0;
    bool alive = true;
    for (int i = 0; i < n && alive; ++i) {
      if (perm[i] == i) ++fixed;
      else alive = g.has_edge(i, perm[i]);
    }
    if (!alive) continue;
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    const int moved = n - fixed;
    const int sign = ((inversions + moved) % 2) ? -1 : 1;
    coeffs[n - fixed] += sign;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return coeffs;
}

inline Integer brute_matchings(const Graph& g, int r) {
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  Integer total = 0;
  std::vector<int> pick;
  auto rec = [&](auto&& self, int start, sachs::VertexSet used) -> void {
    if (static_cast<int>(pick.size()) == r) {
      ++total;
      return;
    }
    for (int e = start; e < m; ++e) {
      const sachs::VertexSet ends = sachs::singleton(edges[e].u) | sachs::singleton(edges[e].v);
      if (used & ends) continue;
      pick.push_back(e);
      self(self, e + 1, used | ends);
      pick.pop_back();
    }
  };
  rec(rec, 0, 0);
  return total;
}

// 4-edge subsets spanning four vertices of degree two that form one cycle.
inline Integer brute_four_cycles(const Graph& g) {
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  Integer total = 0;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      for (int c = b + 1; c < m; ++c)
        for (int d = c + 1; d < m; ++d) {
          std::map<int, int> deg;
          for (int e : {a, b, c, d}) {
            ++deg[edges[e].u];
            ++deg[edges[e].v];
          }
          if (deg.size() != 4) continue;
          if (!std::all_of(deg.begin(), deg.end(), [](auto& kv) { return kv.second == 2; })) continue;
          // 2-regular on four vertices: necessarily C4.
          ++total;
        }
  return total;
}

inline Integer brute_p3(const Graph& g) {
  const auto edges = g.edges();
  Integer total = 0;
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto& e = edges[i];
      const auto& f = edges[j];
      total += (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v);
    }
  return total;
}

inline Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<VertexPair> edges;
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if ((mask >> bit) & 1) edges.push_back({i, j});
  return Graph::from_edges(n, edges);
}

inline std::uint64_t mask_of(const Graph& g) {
  const int n = g.order();
  std::uint64_t mask = 0;
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if (g.has_edge(i, j)) mask |= std::uint64_t{1} << bit;
  return mask;
}

// Smallest edge mask over all relabelings.
inline std::uint64_t brute_canonical_mask(const Graph& g) {
  const int n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, mask_of(g.relabeled(perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool brute_connected(const Graph& g) {
  const int n = g.order();
  std::vector<int> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y = 0; y < n; ++y)
      if (g.has_edge(x, y) && !seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](int s) { return s != 0; });
}

inline bool brute_bipartite(const Graph& g) {
  const int n = g.order();
  for (std::uint64_t colour = 0; colour < (std::uint64_t{1} << n); ++colour) {
    bool ok = true;
    for (const auto& [u, v] : g.edges())
      if (((colour >> u) & 1) == ((colour >> v) & 1)) ok = false;
    if (ok) return true;
  }
  return false;
}

// Isomorphism classes of all labeled graphs on n <= 6 vertices, keyed by the
// brute canonical mask.
inline std::set<std::uint64_t> brute_classes(int n) {
  std::set<std::uint64_t> classes;
  const int pairs = n * (n - 1) / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask)
    classes.insert(brute_canonical_mask(graph_from_mask(n, mask)));
  return classes;
}

// Burnside: number of unlabeled graphs on n vertices as the average over
// vertex permutations of 2^(cycles on unordered pairs).
inline std::uint64_t burnside_graph_count(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t total = 0, perms = 0;
  do {
    ++perms;
    std::vector<std::vector<int>> seen(n, std::vector<int>(n, 0));
    int cycles = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (seen[i][j]) continue;
        ++cycles;
        int a = i, b = j;
        while (!seen[std::min(a, b)][std::max(a, b)]) {
          seen[std::min(a, b)][std::max(a, b)] = 1;
          a = perm[a];
          b = perm[b];
        }
      }
    total += std::uint64_t{1} << cycles;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total / perms;
}

// Connected counts c_1..c_N from all-graph counts g_0..g_N (g_0 = 1) by
// inverting the Euler transform.
inline std::vector<std::int64_t> connected_from_all(const std::vector<std::int64_t>& all) {
  const int N = static_cast<int>(all.size()) - 1;
  // log-derivative form: n g_n = sum_{k=1}^n b_k g_{n-k}, b_k = sum_{d|k} d c_d.
  std::vector<std::int64_t> b(N + 1, 0), c(N + 1, 0);
  for (int n = 1; n <= N; ++n) {
    std::int64_t s = n * all[n];
    for (int k = 1; k < n; ++k) s -= b[k] * all[n - k];
    b[n] = s;
    std::int64_t rest = b[n];
    for (int d = 1; d < n; ++d)
      if (n % d == 0) rest -= d * c[d];
    c[n] = rest / n;
  }
  return c;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution edge(p);
  std::vector<VertexPair> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (edge(rng)) edges.push_back({i, j});
  return Graph::from_edges(n, edges);
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace oracle
