#include "sachs/graph6.hpp"

#include <stdexcept>
#include <vector>

namespace sachs {

namespace {

constexpr int kMaxG6Order = 62;

int packed_length(int n) { return (n * (n - 1) / 2 + 5) / 6; }

}  // namespace

std::string g6_encode(const Graph& g) {
  const int n = g.order();
  if (n > kMaxG6Order) throw std::invalid_argument("graph6 encoding supports orders up to 62");
  std::string out(1, static_cast<char>(n + 63));
  out.reserve(1 + packed_length(n));
  int group = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

Graph g6_decode(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw std::invalid_argument("empty graph6 string");
  const int head = static_cast<unsigned char>(text[0]);
  if (head == 126) throw std::invalid_argument("graph6 orders above 62 are not supported");
  if (head < 63 || head > 126) throw std::invalid_argument("malformed graph6 order byte");
  const int n = head - 63;
  const std::string_view body = text.substr(1);
  if (static_cast<int>(body.size()) != packed_length(n))
    throw std::invalid_argument("graph6 string has " + std::to_string(body.size()) + " data bytes, expected " +
                                std::to_string(packed_length(n)));

  std::vector<int> bits;
  bits.reserve(body.size() * 6);
  for (char c : body) {
    const int value = static_cast<unsigned char>(c) - 63;
    if (value < 0 || value > 63) throw std::invalid_argument("malformed graph6 data byte");
    for (int b = 5; b >= 0; --b) bits.push_back((value >> b) & 1);
  }
  std::vector<VertexPair> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (bits[k]) edges.push_back({i, j});
  for (; k < bits.size(); ++k)
    if (bits[k]) throw std::invalid_argument("graph6 padding bits must be zero");
  return Graph::from_edges(n, edges);
}

}  // namespace sachs
