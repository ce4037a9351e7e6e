#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "sachs/graph.hpp"

namespace sachs {

// Byte string identifying an isomorphism class: the order followed by the
// upper-triangle adjacency bits of the canonical relabeling.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const { return bytes_; }
  int order() const { return bytes_.empty() ? 0 : static_cast<unsigned char>(bytes_[0]); }
  // The canonical representative.
  Graph graph() const;

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;

 private:
  std::string bytes_;
};

struct CanonicalLabeling {
  // order[position] = vertex of the input graph placed at that position.
  std::vector<int> order;
  CanonicalCode code;
};

// Individualization-refinement over equitable partitions; subtrees equivalent
// under an already discovered automorphism are skipped.
CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalCode canonical_code(const Graph& g);
Graph canonical_form(const Graph& g);
bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace sachs

template <>
struct std::hash<sachs::CanonicalCode> {
  std::size_t operator()(const sachs::CanonicalCode& c) const noexcept {
    return std::hash<std::string>{}(c.bytes());
  }
};
