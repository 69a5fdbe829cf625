#include "pnmax/formats.hpp"

#include <cstdint>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace pnmax {

namespace {

bool is_blank(const std::string& line) {
  for (char c : line) {
    if (c != ' ' && c != '\t' && c != '\r') return false;
  }
  return true;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string line;
  int order = -1;
  std::vector<std::pair<int, int>> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank(line) || line[0] == '#') continue;
    std::istringstream ls(line);
    if (order < 0) {
      std::string tag;
      if (!(ls >> tag >> order) || tag != "n" || order < 0) {
        throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                    ": expected header 'n <order>'");
      }
      std::string extra;
      if (ls >> extra) {
        throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                    ": trailing tokens after header");
      }
      continue;
    }
    int u, v;
    if (!(ls >> u >> v)) {
      throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                  ": expected 'u v'");
    }
    std::string extra;
    if (ls >> extra) {
      throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                  ": trailing tokens after edge");
    }
    if (u < 0 || u >= order || v < 0 || v >= order) {
      throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                  ": index out of range");
    }
    edges.emplace_back(u, v);
  }
  if (order < 0) throw std::invalid_argument("edge list: missing 'n <order>' header");
  return Graph(order, edges);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

std::string emit_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  for (const auto& [u, v] : g.edges()) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

namespace {

constexpr int kG6Offset = 63;

int g6_byte(std::string_view s, std::size_t i) {
  if (i >= s.size()) throw std::invalid_argument("graph6: truncated input");
  unsigned char c = static_cast<unsigned char>(s[i]);
  if (c < 63 || c > 126) {
    throw std::invalid_argument("graph6: byte " + std::to_string(i) +
                                " outside the printable range 63..126");
  }
  return c - kG6Offset;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (line.substr(0, kHeader.size()) == kHeader) line.remove_prefix(kHeader.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) {
    line.remove_suffix(1);
  }
  if (line.empty()) throw std::invalid_argument("graph6: empty input");

  std::size_t i = 0;
  long n;
  if (g6_byte(line, 0) < 63) {
    n = g6_byte(line, 0);
    i = 1;
  } else {
    // 126 escape: 18-bit order (126 126 would mean the 36-bit form, far
    // beyond the supported width).
    if (line.size() >= 2 && static_cast<unsigned char>(line[1]) == 126) {
      throw std::invalid_argument("graph6: 36-bit orders not supported");
    }
    n = (static_cast<long>(g6_byte(line, 1)) << 12) |
        (static_cast<long>(g6_byte(line, 2)) << 6) | g6_byte(line, 3);
    i = 4;
  }
  if (n > VertexSet::kMaxVertices) {
    throw std::invalid_argument("graph6: order " + std::to_string(n) +
                                " exceeds the supported width of 128");
  }

  const long bits = n * (n - 1) / 2;
  const std::size_t bytes = static_cast<std::size_t>((bits + 5) / 6);
  if (line.size() - i < bytes) throw std::invalid_argument("graph6: truncated input");
  if (line.size() - i > bytes) {
    throw std::invalid_argument("graph6: unexpected trailing characters");
  }

  std::vector<std::pair<int, int>> edges;
  long k = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row, ++k) {
      const int b = g6_byte(line, i + static_cast<std::size_t>(k / 6));
      if ((b >> (5 - k % 6)) & 1) edges.emplace_back(row, col);
    }
  }
  return Graph(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kG6Offset));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + kG6Offset));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kG6Offset));
    out.push_back(static_cast<char>((n & 63) + kG6Offset));
  }
  int acc = 0;
  int filled = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      acc = (acc << 1) | (g.adjacent(row, col) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kG6Offset));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    acc <<= (6 - filled);
    out.push_back(static_cast<char>(acc + kG6Offset));
  }
  return out;
}

}  // namespace pnmax
