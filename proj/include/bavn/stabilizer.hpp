// Graph-state stabilizer generators and groups, the balanced-bipartition
// elements-of-reality checker (two independent methods), and element-of-reality
// witness extraction.

#pragma once

#include <vector>

#include "bavn/graph.hpp"
#include "bavn/pauli.hpp"

namespace bavn {

struct StabilizerGroup {
  Graph graph;
  std::vector<PauliOperator> gens;  // gens[i] has X at vertex i, Z at neighbors

  // All 2^n elements; element[m] is the product of gens[i] over bits i of m,
  // so the index doubles as the generator index-set tag I_j. Materialized on
  // first use; materialization is unsynchronized, so concurrent callers each
  // build their own group (which is what every operation here does).
  const std::vector<PauliOperator>& elements() const;

 private:
  mutable std::vector<PauliOperator> elements_;
};

StabilizerGroup generators(const Graph& g);

// Direct check: |A| == |B| and the restriction of the 2^n group
// elements to each side hits every length-n/2 letter string exactly once.
bool permits_bipartite_eor(const Graph& g, Bipartition part);

// Equivalent GF(2)-rank form: the n x n submatrix of the generator matrix
// made of Alice's x- and z-columns must be invertible. Throws
// std::invalid_argument on an unbalanced partition.
bool permits_bipartite_eor_rank(const Graph& g, Bipartition part);

// Rank over GF(2) of the A x B adjacency block (cross-check oracle only).
int cut_rank(const Graph& g, Bipartition part);

struct EoRWitness {
  int qubit = 0;       // 0-based
  Letter letter = Letter::I;
  PauliOperator witness;  // stabilizing operator; own-party restriction is the
                          // weight-1 string with `letter` at `qubit`
};

// All 3n witnesses, qubits ascending, letters X,Y,Z. Throws std::logic_error
// if the checker does not pass on (g, part).
std::vector<EoRWitness> eor_witnesses(const Graph& g, Bipartition part);

// Bit-row Gaussian elimination; rows are little-endian bit masks.
int gf2_rank(std::vector<std::uint32_t> rows);

}  // namespace bavn
