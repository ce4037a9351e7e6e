#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sachs/canonical.hpp"
#include "sachs/graph.hpp"
#include "sachs/integer.hpp"
#include "sachs/recognition.hpp"

namespace sachs {

enum class GraphClass { general, bipartite };

std::string_view to_string(GraphClass c);

// Exhaustive minimum of a_4 over the connected (n, m)-graphs of a class.
struct ExtremalReport {
  int n = 0;
  int m = 0;
  GraphClass graph_class = GraphClass::general;
  Integer min_a4 = 0;
  std::vector<CanonicalCode> minimizers;            // sorted
  std::optional<Integer> predicted;                 // absent outside the classified range
  std::vector<CanonicalCode> predicted_minimizers;  // sorted
  std::optional<bool> matches;                      // absent when report-only
  std::uint64_t examined = 0;
};

// General class: n <= 9; bipartite class: n <= 10.
ExtremalReport extremal_search(int n, int m, GraphClass graph_class, int threads = 0);

// min((2n-3-m)(m-n+1), (2n-4-m)(m-n+2)) for n >= 6, n-1 <= m <= 2n-4.
Integer predicted_min(int n, int m);
// (2n-4-m)(m-n+2) for n >= 6, n-1 < m < 2n-4.
Integer predicted_bipartite_min(int n, int m);

// The candidates G1 (m = n+2), G2 and G3 whose a_4 attains predicted_min.
std::vector<Graph> predicted_minimizers(int n, int m);

// Four-term split of a_4(G) along a spanning difference subgraph B whose
// leftover edges E(G) - E(B) all lie inside `u_side`. Throws
// std::invalid_argument when B is not such a subgraph.
Integer decomposition_a4(const Graph& g, const Graph& b, VertexSet u_side);

// Reference 4-cycle count over vertex 4-subsets and their three cyclic orders.
Integer quadrangle_count_brute(const Graph& g);

enum class CheckStatus { pass, fail };

struct Counterexample {
  std::string graph6;
  std::string details;
};

struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::pass;
  std::optional<Counterexample> counterexample;
  std::uint64_t instances = 0;
  std::vector<ExtremalReport> tables;
  std::vector<std::string> notes;
};

// Optional overrides of a check's default ranges.
struct CheckScope {
  std::optional<int> n_min, n_max;
  std::optional<int> m_min, m_max;
  std::uint64_t seed = 20211;
  int threads = 0;
};

// Fixed suite order.
const std::vector<std::string>& check_ids();
bool is_check_id(std::string_view id);

// Throws std::invalid_argument for an unknown id or an unsupported range.
CheckResult run_check(std::string_view id, const CheckScope& scope = {});

}  // namespace sachs
