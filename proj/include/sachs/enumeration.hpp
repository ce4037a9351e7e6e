#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sachs/graph.hpp"

namespace sachs {

struct EnumSpec {
  int n = 1;                 // order, 1..10
  std::optional<int> m;      // exact edge count, or every count
  bool connected_only = true;
  bool bipartite_only = false;
};

constexpr int kMaxEnumerationOrder = 10;

// Throws std::invalid_argument for n outside [1, 10] or an infeasible m.
void validate(const EnumSpec& spec);

using GraphSink = std::function<void(const Graph&)>;

// One representative per isomorphism class, generated by canonical vertex
// augmentation. Both variants emit the identical sequence for a given EnumSpec.
void enumerate_serial(const EnumSpec& spec, const GraphSink& sink);
// threads <= 0 uses the OpenMP default.
void enumerate_parallel(const EnumSpec& spec, const GraphSink& sink, int threads = 0);
// threads == 1 runs the serial reference.
void enumerate(const EnumSpec& spec, const GraphSink& sink, int threads = 0);

std::vector<Graph> collect(const EnumSpec& spec, int threads = 0);
std::uint64_t count(const EnumSpec& spec, int threads = 0);

}  // namespace sachs
