// Exhaustive enumeration of connected graphs up to isomorphism and their
// local-complementation orbits.
//
// Two implementations are kept deliberately: the production kernel is an
// OpenMP scan over all edge subsets testing minimality under relabeling; the
// serial reference sweeps codes in ascending order and marks whole
// permutation orbits in a bitmap. Both return the identical ascending list of
// canonical representatives and are cross-checked in the tests and compared
// in the benchmark.

#pragma once

#include <vector>

#include "bavn/graph.hpp"

namespace bavn {

std::vector<Graph> enumerate_connected(int n);         // parallel kernel
std::vector<Graph> enumerate_connected_serial(int n);  // reference sweep

struct LcOrbit {
  int class_id = 0;
  Graph representative;        // minimal canonical code in the orbit
  std::vector<Graph> members;  // canonical forms, ascending
};

// Partition of enumerate_connected(n) under local complementation +
// isomorphism; class ids ascend with the representative encoding.
std::vector<LcOrbit> lc_orbits(int n);

}  // namespace bavn
