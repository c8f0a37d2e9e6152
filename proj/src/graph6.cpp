#include "bondlab/graph6.hpp"

namespace bondlab {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

bool is_data_byte(unsigned char c) { return c >= 63 && c <= 126; }

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kHeader)) {
    base = kHeader.size();
    text.remove_prefix(kHeader.size());
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Graph6Error(base, "empty input");

  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!is_data_byte(static_cast<unsigned char>(text[i]))) {
      throw Graph6Error(base + i, "byte value " + std::to_string(static_cast<unsigned char>(text[i])) +
                                      " outside 63..126");
    }
  }

  std::size_t pos = 0;
  long n = 0;
  if (static_cast<unsigned char>(text[0]) != 126) {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == 126) {
      throw Graph6Error(base + 1, "eight-byte size prefix not supported");
    }
    if (text.size() < 4) throw Graph6Error(base + text.size(), "truncated size prefix");
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | (text[i] - 63);
    if (n < 63) throw Graph6Error(base + 1, "non-canonical size prefix for order " + std::to_string(n));
    pos = 4;
  }
  if (n > kMaxVertices) {
    throw Graph6Error(base, "order " + std::to_string(n) + " exceeds supported maximum " +
                                std::to_string(kMaxVertices));
  }

  const std::size_t bits = static_cast<std::size_t>(n * (n - 1) / 2);
  const std::size_t body = (bits + 5) / 6;
  if (text.size() < pos + body) throw Graph6Error(base + text.size(), "truncated adjacency data");
  if (text.size() > pos + body) throw Graph6Error(base + pos + body, "trailing bytes after adjacency data");

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.push_back({u, v});
    }
  }
  if (body > 0) {
    int last = text[pos + body - 1] - 63;
    int padding = static_cast<int>(body * 6 - bits);
    if (last & ((1 << padding) - 1)) throw Graph6Error(base + pos + body - 1, "nonzero padding bits");
  }
  return Graph(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxVertices) throw GraphError("graph6: order above supported range");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

std::vector<Graph6Line> read_graph6_stream(std::istream& in) {
  std::vector<Graph6Line> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Graph6Line entry{number, line, std::string{}};
    try {
      entry.parsed = parse_graph6(line);
    } catch (const Graph6Error& e) {
      entry.parsed = std::string(e.what());
    } catch (const GraphError& e) {
      entry.parsed = std::string(e.what());
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace bondlab
