// Dense complex statevector construction of graph states and numeric
// verification of stabilizer eigen-equations; the ground-truth oracle for the
// symplectic machinery. Qubit 1 is the most significant index bit.

#pragma once

#include <array>
#include <complex>
#include <vector>

#include "bavn/graph.hpp"
#include "bavn/pauli.hpp"

namespace bavn {

inline constexpr int kMaxStateQubits = 10;

struct StateVector {
  int n = 0;
  std::vector<std::complex<double>> amps;  // size 2^n

  double norm() const;
};

// |+>^n with a controlled-Z per edge.
StateVector build_state(const Graph& g);
StateVector apply_pauli(const PauliOperator& p, const StateVector& s);
StateVector apply_hadamard(const StateVector& s, int qubit);  // 0-based
std::complex<double> inner(const StateVector& a, const StateVector& b);

// max over all 2^n stabilizing operators of ||s|G> - |G>||.
double verify_stabilizer(const Graph& g);

// The 4-qubit state 1/2(|00>|~0~0> + |01>|~0~1> + |10>|~1~0> - |11>|~1~1>)
// with qubits 1,2 in the sigma_z basis and 3,4 in the sigma_x basis
// (|~0> = (|0>+|1>)/sqrt2, |~1> = (|0>-|1>)/sqrt2). check_psi4a scans all 4!
// labelings of the 4-vertex path and reports the best overlap.
struct Psi4aResult {
  double fidelity = 0.0;            // best |<psi|G>|
  Graph graph;                      // labeled path achieving it
  double second_best = 0.0;         // best overlap among non-matching labelings
};
StateVector psi4a_state();
Psi4aResult check_psi4a();

// Debug dump, one line per amplitude: "bitstring re im" with qubit 1 leftmost.
// Not a stability-guaranteed format.
std::string dump_amplitudes(const StateVector& s);

// Dense 2^n x 2^n realization (row-major) for cross-checking the symplectic
// algebra against literal matrix arithmetic.
using DenseMatrix = std::vector<std::complex<double>>;
DenseMatrix dense_matrix(const PauliOperator& p);
DenseMatrix dense_multiply(const DenseMatrix& a, const DenseMatrix& b, int dim);

}  // namespace bavn
