#include "sachs/invariants.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace sachs {

std::string to_string(Integer value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  // Work on the negative side so INT128_MIN does not overflow.
  Integer v = negative ? value : -value;
  std::string digits;
  while (v != 0) {
    digits.push_back(static_cast<char>('0' - static_cast<int>(v % 10)));
    v /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

namespace {

struct SubsetKey {
  VertexSet available;
  int remaining;
  friend bool operator==(const SubsetKey&, const SubsetKey&) = default;
};

struct SubsetKeyHash {
  std::size_t operator()(const SubsetKey& k) const noexcept {
    return std::hash<VertexSet>{}(k.available * 0x9E3779B97F4A7C15ULL + static_cast<VertexSet>(k.remaining));
  }
};

using Memo = std::unordered_map<SubsetKey, Integer, SubsetKeyHash>;

Integer count_matchings(const Graph& g, VertexSet available, int r, Memo& memo) {
  if (r == 0) return 1;
  if (set_size(available) < 2 * r) return 0;
  const SubsetKey key{available, r};
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int v = lowest(available);
  const VertexSet rest = available & ~singleton(v);
  Integer total = count_matchings(g, rest, r, memo);
  for (VertexSet s = g.neighbors(v) & rest; s; s &= s - 1)
    total = checked_add(total, count_matchings(g, rest & ~singleton(lowest(s)), r - 1, memo));
  memo.emplace(key, total);
  return total;
}

// Sachs subgraphs are generated canonically: the smallest available vertex is
// skipped, matched along an edge, or used as the start of a cycle whose second
// vertex is smaller than its last.
class SachsCounter {
 public:
  explicit SachsCounter(const Graph& g) : g_(g) {}

  Integer count(VertexSet available, int remaining) {
    if (remaining == 0) return 1;
    if (set_size(available) < remaining) return 0;
    const SubsetKey key{available, remaining};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int v = lowest(available);
    const VertexSet rest = available & ~singleton(v);
    Integer total = 0;
    if (set_size(rest) >= remaining) total = count(rest, remaining);
    if (remaining >= 2)
      for (VertexSet s = g_.neighbors(v) & rest; s; s &= s - 1)
        total = checked_sub(total, count(rest & ~singleton(lowest(s)), remaining - 2));
    if (remaining >= 3) {
      for (VertexSet s = g_.neighbors(v) & rest; s; s &= s - 1) {
        const int second = lowest(s);
        extend_cycle(v, second, second, singleton(v) | singleton(second), 2, available, remaining, total);
      }
    }
    memo_.emplace(key, total);
    return total;
  }

 private:
  void extend_cycle(int start, int second, int last, VertexSet path, int length, VertexSet available,
                    int remaining, Integer& total) {
    for (VertexSet s = g_.neighbors(last) & available & ~path; s; s &= s - 1) {
      const int next = lowest(s);
      const VertexSet grown = path | singleton(next);
      if (g_.has_edge(next, start) && second < next)
        total = checked_sub(total, checked_mul(2, count(available & ~grown, remaining - length - 1)));
      if (length + 1 < remaining) extend_cycle(start, second, next, grown, length + 1, available, remaining, total);
    }
  }

  const Graph& g_;
  Memo memo_;
};

}  // namespace

Integer matching_count(const Graph& g, int r) {
  if (r < 0) throw std::invalid_argument("matching size must be non-negative");
  Memo memo;
  return count_matchings(g, g.vertices(), r, memo);
}

Integer two_matching_closed_form(const Graph& g) {
  Integer adjacent = 0;
  for (int v = 0; v < g.order(); ++v) adjacent = checked_add(adjacent, choose2(g.degree(v)));
  return checked_sub(choose2(g.size()), adjacent);
}

Integer triangle_count(const Graph& g) {
  Integer total = 0;
  for (int u = 0; u < g.order(); ++u) {
    const VertexSet above_u = ~first_n(u + 1);
    for (VertexSet s = g.neighbors(u) & above_u; s; s &= s - 1) {
      const int v = lowest(s);
      total += set_size(g.neighbors(u) & g.neighbors(v) & ~first_n(v + 1));
    }
  }
  return total;
}

Integer quadrangle_count(const Graph& g) {
  Integer twice = 0;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      twice = checked_add(twice, choose2(set_size(g.neighbors(u) & g.neighbors(v))));
  return twice / 2;
}

Integer p3_count(const Graph& g) {
  Integer total = 0;
  for (int v = 0; v < g.order(); ++v) total = checked_add(total, choose2(g.degree(v)));
  return total;
}

Integer a4_combinatorial(const Graph& g) {
  return checked_sub(two_matching_closed_form(g), checked_mul(2, quadrangle_count(g)));
}

Integer sachs_coefficient(const Graph& g, int i) {
  if (i < 0 || i > g.order())
    throw std::invalid_argument("Sachs index " + std::to_string(i) + " outside [0, n]");
  return SachsCounter(g).count(g.vertices(), i);
}

CoeffVector char_poly(const Graph& g) {
  const int n = g.order();
  if (n > 20) throw std::invalid_argument("char_poly supports orders up to 20");
  // M_1 = I; a_k = -tr(A M_k) / k; M_{k+1} = A M_k + a_k I.
  std::vector<Integer> coeffs(n + 1, 0);
  coeffs[0] = 1;
  std::vector<Integer> m(static_cast<std::size_t>(n) * n, 0), am(m.size(), 0);
  for (int i = 0; i < n; ++i) m[i * n + i] = 1;
  for (int k = 1; k <= n; ++k) {
    Integer trace = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        Integer sum = 0;
        for (VertexSet s = g.neighbors(i); s; s &= s - 1) sum = checked_add(sum, m[lowest(s) * n + j]);
        am[i * n + j] = sum;
      }
      trace = checked_add(trace, am[i * n + i]);
    }
    if (trace % k != 0) throw std::logic_error("trace recurrence produced a non-integral coefficient");
    coeffs[k] = -(trace / k);
    for (int i = 0; i < n; ++i) am[i * n + i] = checked_add(am[i * n + i], coeffs[k]);
    std::swap(m, am);
  }
  return CoeffVector(std::move(coeffs));
}

bool satisfies_low_order_identities(const CoeffVector& p, const Graph& g) {
  const int n = g.order();
  if (p.degree() != n) return false;
  if (p[0] != 1) return false;
  if (n >= 1 && p[1] != 0) return false;
  if (n >= 2 && p[2] != -Integer{g.size()}) return false;
  if (n >= 3 && p[3] != -2 * triangle_count(g)) return false;
  return true;
}

}  // namespace sachs
