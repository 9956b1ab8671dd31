#include "evenspec/graph6.hpp"

namespace evenspec {

Graph6Error::Graph6Error(const std::string& what, std::size_t offset)
    : std::runtime_error("graph6: " + what + " at byte " + std::to_string(offset)),
      offset_(offset) {}

namespace {

constexpr int kBias = 63;

bool printable(char c) { return c >= 63 && c <= 126; }

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw Graph6Error("empty input", 0);
  if (text.front() == '>') throw Graph6Error("header '>>graph6<<' is not supported", 0);
  if (text.front() == '~') throw Graph6Error("long-form order (n > 62) is not supported", 0);
  if (!printable(text.front())) throw Graph6Error("invalid order byte", 0);

  const std::size_t n = static_cast<std::size_t>(text.front() - kBias);
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() < 1 + body) throw Graph6Error("truncated edge data", text.size());
  if (text.size() > 1 + body) throw Graph6Error("trailing garbage", 1 + body);

  Graph g(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const std::size_t offset = 1 + k / 6;
      const char c = text[offset];
      if (!printable(c)) throw Graph6Error("byte out of range", offset);
      if (((c - kBias) >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  for (std::size_t offset = 1; offset < text.size(); ++offset) {
    if (!printable(text[offset])) throw Graph6Error("byte out of range", offset);
  }
  // Padding bits past the last edge bit must be zero.
  if (bits % 6 != 0) {
    const int pad = static_cast<int>(6 - bits % 6);
    if (((text.back() - kBias) & ((1 << pad) - 1)) != 0) {
      throw Graph6Error("nonzero padding bits", text.size() - 1);
    }
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  if (g.has_loops()) throw GraphError("graph6 cannot encode loops");
  const std::size_t n = g.order();
  if (n > kMaxGraph6Order) throw GraphError("graph6 short form supports at most 62 vertices");

  std::string out(1, static_cast<char>(n + kBias));
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

}  // namespace evenspec
