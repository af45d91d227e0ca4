#include "dstar/formats.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>

namespace dstar {

std::string graph6_encode(const Graph& g) {
  int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  unsigned acc = 0;
  int nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1u : 0u);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

Graph graph6_decode(std::string_view line) {
  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= line.size()) throw std::invalid_argument("graph6: truncated input");
    int c = static_cast<unsigned char>(line[pos++]);
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
    return c - 63;
  };
  int n;
  if (!line.empty() && line[0] == '~') {
    ++pos;
    if (pos + 3 > line.size()) throw std::invalid_argument("graph6: truncated order");
    if (line[pos] == '~') throw std::invalid_argument("graph6: order beyond 64 unsupported");
    n = (next() << 12) | (next() << 6) | next();
  } else {
    n = next();
  }
  if (n < 1 || n > Graph::kMaxVertices) throw std::invalid_argument("graph6: order must be 1..64");
  GraphBuilder b(n);
  int acc = 0;
  int nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (nbits == 0) {
        acc = next();
        nbits = 6;
      }
      if (acc & (1 << (nbits - 1))) b.add_edge(i, j);
      --nbits;
    }
  }
  if (pos != line.size()) throw std::invalid_argument("graph6: trailing bytes");
  return b.build();
}

std::vector<Graph> read_graph6(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line == ">>graph6<<") continue;
    if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
    out.push_back(graph6_decode(line));
  }
  return out;
}

std::vector<Graph> read_planar_code(std::istream& in) {
  std::vector<Graph> out;
  int c = in.peek();
  if (c == '>') {
    std::string header;
    header.resize(15);
    in.read(header.data(), 15);
    if (header != ">>planar_code<<") throw std::invalid_argument("planar_code: bad header");
  }
  while (true) {
    int nb = in.get();
    if (nb == std::char_traits<char>::eof()) break;
    int n = nb;
    if (n == 0) throw std::invalid_argument("planar_code: multi-byte orders unsupported");
    if (n > Graph::kMaxVertices) throw std::invalid_argument("planar_code: order beyond 64");
    GraphBuilder b(n);
    for (int v = 0; v < n; ++v) {
      while (true) {
        int w = in.get();
        if (w == std::char_traits<char>::eof()) throw std::invalid_argument("planar_code: truncated");
        if (w == 0) break;
        if (w < 1 || w > n) throw std::invalid_argument("planar_code: neighbor out of range");
        if (w - 1 != v) b.add_edge(v, w - 1);
      }
    }
    out.push_back(b.build());
  }
  return out;
}

void write_dot(const Graph& g, std::ostream& out, std::string_view name) {
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) out << "  " << v << ";\n";
    for (int u : g.neighbors(v)) {
      if (u > v) out << "  " << v << " -- " << u << ";\n";
    }
  }
  out << "}\n";
}

}  // namespace dstar
