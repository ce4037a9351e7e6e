#pragma once

#include <string>
#include <string_view>

#include "sachs/graph.hpp"

namespace sachs {

// graph6: one byte n + 63, then the upper triangle in column order
// (x(0,1), x(0,2), x(1,2), x(0,3), ...) in big-endian 6-bit groups, each
// offset by 63. Orders above 62 are rejected.
std::string g6_encode(const Graph& g);

// Throws std::invalid_argument on malformed input or an unsupported order.
Graph g6_decode(std::string_view text);

}  // namespace sachs
