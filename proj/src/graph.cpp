#include "bavn/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace bavn {

Graph Graph::empty(int n) {
  if (n < 1 || n > kMaxVertices) throw std::invalid_argument("graph: bad vertex count");
  Graph g;
  g.n = static_cast<std::uint8_t>(n);
  return g;
}

void Graph::set_edge(int u, int v, bool present) {
  if (u == v || u < 0 || v < 0 || u >= n || v >= n)
    throw std::invalid_argument("graph: bad edge endpoints");
  if (present) {
    adj[u] |= std::uint8_t(1u << v);
    adj[v] |= std::uint8_t(1u << u);
  } else {
    adj[u] &= std::uint8_t(~(1u << v));
    adj[v] &= std::uint8_t(~(1u << u));
  }
}

int Graph::degree(int v) const { return std::popcount(std::uint32_t(adj[v])); }

int Graph::edge_count() const {
  int s = 0;
  for (int v = 0; v < n; ++v) s += degree(v);
  return s / 2;
}

bool Graph::connected() const {
  if (n <= 1) return true;
  std::uint8_t seen = 1u;
  for (;;) {
    std::uint8_t grow = seen;
    std::uint8_t m = seen;
    while (m) {
      int v = std::countr_zero(std::uint32_t(m));
      m &= std::uint8_t(m - 1);
      grow |= adj[v];
    }
    if (grow == seen) break;
    seen = grow;
  }
  return seen == ((1u << n) - 1u);
}

int pair_slot(int n, int i, int j) {
  // pairs (0,1),(0,2),...,(0,n-1),(1,2),... ; slot 0 is the most significant bit
  return i * n - i * (i + 3) / 2 + j - 1;
}

std::uint32_t Graph::code() const {
  int nslots = n * (n - 1) / 2;
  std::uint32_t c = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (edge(i, j)) c |= 1u << (nslots - 1 - pair_slot(n, i, j));
  return c;
}

Graph Graph::from_code(int n, std::uint32_t code) {
  Graph g = Graph::empty(n);
  int nslots = n * (n - 1) / 2;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((code >> (nslots - 1 - pair_slot(n, i, j))) & 1u) g.set_edge(i, j, true);
  return g;
}

ColoredGraph ColoredGraph::from_code(int n, std::uint64_t code) {
  ColoredGraph cg;
  cg.part_a = static_cast<std::uint8_t>(code & ((1u << n) - 1u));
  cg.graph = Graph::from_code(n, static_cast<std::uint32_t>(code >> n));
  return cg;
}

PermutationTable::PermutationTable(int n) : n_(n), nslots_(n * (n - 1) / 2) {
  if (n < 1 || n > kMaxVertices) throw std::invalid_argument("graph: bad vertex count");
  std::array<std::uint8_t, kMaxVertices> m{};
  std::iota(m.begin(), m.begin() + n, std::uint8_t{0});
  do {
    perms_.push_back(m);
    auto& sm = slot_map_.emplace_back();
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        int a = m[i], b = m[j];
        if (a > b) std::swap(a, b);
        sm[pair_slot(n, i, j)] = static_cast<std::uint8_t>(pair_slot(n, a, b));
      }
  } while (std::next_permutation(m.begin(), m.begin() + n));
}

std::uint32_t PermutationTable::apply(int idx, std::uint32_t code) const {
  const auto& sm = slot_map_[idx];
  std::uint32_t out = 0;
  while (code) {
    int bit = std::countr_zero(code);
    code &= code - 1;
    int slot = nslots_ - 1 - bit;
    out |= 1u << (nslots_ - 1 - sm[slot]);
  }
  return out;
}

std::uint8_t PermutationTable::apply_mask(int idx, std::uint8_t vmask) const {
  const auto& m = perms_[idx];
  std::uint8_t out = 0;
  while (vmask) {
    int v = std::countr_zero(std::uint32_t(vmask));
    vmask &= std::uint8_t(vmask - 1);
    out |= std::uint8_t(1u << m[v]);
  }
  return out;
}

const PermutationTable& PermutationTable::for_n(int n) {
  static const std::array<PermutationTable, kMaxVertices> tables = {
      PermutationTable(1), PermutationTable(2), PermutationTable(3), PermutationTable(4),
      PermutationTable(5), PermutationTable(6), PermutationTable(7), PermutationTable(8)};
  if (n < 1 || n > kMaxVertices) throw std::invalid_argument("graph: bad vertex count");
  return tables[n - 1];
}

Graph canonical_form(const Graph& g) {
  const auto& pt = PermutationTable::for_n(g.n);
  std::uint32_t code = g.code();
  std::uint32_t best = code;
  for (int p = 0; p < pt.size(); ++p) best = std::min(best, pt.apply(p, code));
  return Graph::from_code(g.n, best);
}

bool is_canonical_code(const Graph& g) {
  const auto& pt = PermutationTable::for_n(g.n);
  std::uint32_t code = g.code();
  for (int p = 0; p < pt.size(); ++p)
    if (pt.apply(p, code) < code) return false;
  return true;
}

Graph local_complement(const Graph& g, int v) {
  if (v < 0 || v >= g.n) throw std::invalid_argument("graph: vertex out of range");
  Graph h = g;
  std::uint8_t nv = g.adj[v];
  std::uint8_t m = nv;
  while (m) {
    int u = std::countr_zero(std::uint32_t(m));
    m &= std::uint8_t(m - 1);
    h.adj[u] ^= std::uint8_t(nv & ~(1u << u));
  }
  return h;
}

ColoredGraph canonical_colored(const ColoredGraph& cg, bool allow_party_swap) {
  const int n = cg.graph.n;
  const auto& pt = PermutationTable::for_n(n);
  const std::uint32_t code = cg.graph.code();
  const std::uint8_t full = static_cast<std::uint8_t>((1u << n) - 1u);
  std::uint64_t best = ~std::uint64_t{0};
  for (int p = 0; p < pt.size(); ++p) {
    std::uint64_t a = std::uint64_t(pt.apply(p, code)) << n;
    std::uint8_t colors = pt.apply_mask(p, cg.part_a);
    best = std::min(best, a | colors);
    if (allow_party_swap) best = std::min(best, a | std::uint8_t(full & ~colors));
  }
  return ColoredGraph::from_code(n, best);
}

}  // namespace bavn
