#include "bavn/graph_io.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace bavn {

namespace {

int parse_int(std::string_view& s) {
  std::size_t d = 0;
  int v = 0;
  while (d < s.size() && std::isdigit(static_cast<unsigned char>(s[d]))) {
    v = v * 10 + (s[d] - '0');
    ++d;
    if (d > 3) throw std::invalid_argument("graph: number too large");
  }
  if (d == 0) throw std::invalid_argument("graph: expected a number in '" + std::string(s) + "'");
  s.remove_prefix(d);
  return v;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Graph parse_edge_list(std::string_view s) {
  int n = parse_int(s);
  if (n < 1 || n > kMaxVertices) throw std::invalid_argument("graph: vertex count out of range");
  if (s.empty() || s[0] != ';') throw std::invalid_argument("graph: expected ';' after vertex count");
  s.remove_prefix(1);
  Graph g = Graph::empty(n);
  s = strip(s);
  while (!s.empty()) {
    int u = parse_int(s);
    if (s.empty() || s[0] != '-') throw std::invalid_argument("graph: expected '-' in edge");
    s.remove_prefix(1);
    int v = parse_int(s);
    if (u < 1 || u > n || v < 1 || v > n || u == v)
      throw std::invalid_argument("graph: bad edge endpoints");
    g.set_edge(u - 1, v - 1, true);
    if (!s.empty()) {
      if (s[0] != ',') throw std::invalid_argument("graph: expected ',' between edges");
      s.remove_prefix(1);
    }
  }
  return g;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::string_view s = strip(text);
  if (s.empty()) throw std::invalid_argument("graph: empty input");
  if (s.find(';') != std::string_view::npos) return parse_edge_list(s);
  return from_graph6(s);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << int(g.n) << ';';
  bool first = true;
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (g.edge(i, j)) {
        if (!first) out << ',';
        out << (i + 1) << '-' << (j + 1);
        first = false;
      }
  return out.str();
}

Graph from_graph6(std::string_view text) {
  std::string_view s = strip(text);
  const std::string_view header = ">>graph6<<";
  if (s.substr(0, header.size()) == header) s.remove_prefix(header.size());
  if (s.empty()) throw std::invalid_argument("graph6: empty string");
  int n = s[0] - 63;
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("graph6: vertex count out of range (1..8)");
  s.remove_prefix(1);
  int nbits = n * (n - 1) / 2;
  int nbytes = (nbits + 5) / 6;
  if (static_cast<int>(s.size()) != nbytes) throw std::invalid_argument("graph6: bad length");
  Graph g = Graph::empty(n);
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      int byte = bit / 6, off = 5 - bit % 6;
      int c = s[byte] - 63;
      if (c < 0 || c > 63) throw std::invalid_argument("graph6: bad character");
      if ((c >> off) & 1) g.set_edge(i, j, true);
      ++bit;
    }
  return g;
}

std::string to_graph6(const Graph& g) {
  int n = g.n;
  int nbits = n * (n - 1) / 2;
  int nbytes = (nbits + 5) / 6;
  std::string out(1 + nbytes, char(63));
  out[0] = char(63 + n);
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (g.edge(i, j)) out[1 + bit / 6] += char(1 << (5 - bit % 6));
      ++bit;
    }
  return out;
}

std::string to_dot(const Graph& g, std::uint8_t part_a, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.n; ++v) {
    out << "  " << (v + 1);
    if (part_a) {
      bool alice = (part_a >> v) & 1u;
      out << " [party=" << (alice ? "A" : "B") << ", style=filled, fillcolor="
          << (alice ? "lightcoral" : "lightblue") << "]";
    }
    out << ";\n";
  }
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (g.edge(i, j)) out << "  " << (i + 1) << " -- " << (j + 1) << ";\n";
  out << "}\n";
  return out.str();
}

Bipartition parse_partition(std::string_view text, int n) {
  std::string_view s = strip(text);
  if (s.size() < 2 || (s[0] != 'A' && s[0] != 'a') || s[1] != '=')
    throw std::invalid_argument("partition: expected \"A=i,j,...\"");
  s.remove_prefix(2);
  Bipartition part;
  while (!s.empty()) {
    int v = parse_int(s);
    if (v < 1 || v > n) throw std::invalid_argument("partition: vertex out of range");
    if ((part.a_mask >> (v - 1)) & 1u) throw std::invalid_argument("partition: repeated vertex");
    part.a_mask |= std::uint8_t(1u << (v - 1));
    if (!s.empty()) {
      if (s[0] != ',') throw std::invalid_argument("partition: expected ','");
      s.remove_prefix(1);
    }
  }
  if (part.a_mask == 0 || part.a_mask == ((1u << n) - 1u))
    throw std::invalid_argument("partition: Alice's side must be a proper nonempty subset");
  return part;
}

std::string format_partition(const Bipartition& part) {
  std::ostringstream out;
  out << "A=";
  bool first = true;
  for (int v = 0; v < kMaxVertices; ++v)
    if ((part.a_mask >> v) & 1u) {
      if (!first) out << ',';
      out << (v + 1);
      first = false;
    }
  return out.str();
}

}  // namespace bavn
