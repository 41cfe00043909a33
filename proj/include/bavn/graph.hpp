// Simple undirected graphs on up to 8 vertices, stored as adjacency bit rows,
// plus two-colored (Alice/Bob) variants. Canonical forms are brute-force
// minima over all vertex permutations of the upper-triangle bit encoding.
//
// Vertices are 0-based everywhere in this library; the text formats in
// graph_io.hpp speak 1-based.

#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace bavn {

inline constexpr int kMaxVertices = 8;

struct Graph {
  std::uint8_t n = 0;
  std::array<std::uint8_t, kMaxVertices> adj{};

  static Graph empty(int n);

  bool edge(int u, int v) const { return (adj[u] >> v) & 1u; }
  void set_edge(int u, int v, bool present);
  std::uint8_t neighbors(int v) const { return adj[v]; }
  int degree(int v) const;
  int edge_count() const;
  bool connected() const;  // flood fill from vertex 0; empty graph is connected iff n <= 1

  // Upper-triangle encoding: pair (i,j), i<j, in lexicographic order, earlier
  // pairs at more significant bits, so numeric order == lexicographic order.
  std::uint32_t code() const;
  static Graph from_code(int n, std::uint32_t code);

  bool operator==(const Graph&) const = default;
  bool operator<(const Graph& o) const { return n != o.n ? n < o.n : code() < o.code(); }
};

struct Bipartition {
  std::uint8_t a_mask = 0;  // bit v set: vertex v belongs to Alice

  std::uint8_t b_mask(int n) const {
    return static_cast<std::uint8_t>(~a_mask & ((1u << n) - 1u));
  }
  bool operator==(const Bipartition&) const = default;
};

struct ColoredGraph {
  Graph graph;
  std::uint8_t part_a = 0;

  // Adjacency code above the color bits, so the adjacency dominates and the
  // underlying graph of a canonical colored graph is itself canonical.
  std::uint64_t code() const {
    return (std::uint64_t(graph.code()) << graph.n) | part_a;
  }
  static ColoredGraph from_code(int n, std::uint64_t code);
  bool operator==(const ColoredGraph&) const = default;
};

// All n! vertex permutations with precomputed edge-slot maps, cached per n.
// A permutation is stored as m where m[v] is the new label of vertex v.
class PermutationTable {
 public:
  explicit PermutationTable(int n);
  int size() const { return static_cast<int>(perms_.size()); }
  const std::array<std::uint8_t, kMaxVertices>& perm(int idx) const { return perms_[idx]; }
  std::uint32_t apply(int idx, std::uint32_t code) const;   // relabeled adjacency code
  std::uint8_t apply_mask(int idx, std::uint8_t vmask) const;
  static const PermutationTable& for_n(int n);

 private:
  int n_;
  int nslots_;
  std::vector<std::array<std::uint8_t, kMaxVertices>> perms_;
  std::vector<std::array<std::uint8_t, 32>> slot_map_;  // per perm: old slot -> new slot
};

int pair_slot(int n, int i, int j);  // index of pair (i,j), i<j, in the code

Graph canonical_form(const Graph& g);
// True iff g.code() is minimal over all relabelings (early-exit scan).
bool is_canonical_code(const Graph& g);
Graph local_complement(const Graph& g, int v);
ColoredGraph canonical_colored(const ColoredGraph& cg, bool allow_party_swap);

}  // namespace bavn
