// Parity-proof certificates: construction of the four-equation contradictions
// that exist on every connected graph of 3+ vertices, a general subset search,
// and two independent unsatisfiability checks (algebraic parity and exhaustive
// value assignment).

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bavn/graph.hpp"
#include "bavn/pauli.hpp"
#include "bavn/stabilizer.hpp"

namespace bavn {

struct ParityProofCertificate {
  // Stabilizer eigen-equations s|G> = |G>, one hermitian operator each; the
  // rendered sign of s is the correlation value the equation asserts.
  std::vector<PauliOperator> equations;
  static constexpr int contradiction_sign = -1;

  // Sorted (qubit, letter) pairs appearing across the equations, I excluded.
  std::vector<std::pair<int, Letter>> observables() const;
};

// A parity proof holds iff (i) every (qubit, letter) pair occurs an even
// number of times across the equations, (ii) the phase-tracked product of all
// equations is exactly +identity, and (iii) the product of the rendered signs
// is -1 — the sign a value assignment would be forced to reproduce as +1.
bool verify_parity(const ParityProofCertificate& cert);

// Exhaustively assigns +-1 to every observable; returns whether some
// assignment satisfies every equation. Throws std::invalid_argument beyond 24
// observables.
bool brute_force_lhv(const ParityProofCertificate& cert);

// Deterministic four-equation certificate from the smallest path or triangle
// i-j-k in vertex order (such a triple exists on every connected graph of 3+
// vertices). Throws no_certificate_error when n < 3 or no such
// triple exists.
struct no_certificate_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
ParityProofCertificate triple_contradiction(const Graph& g);

// All subsets of the non-identity stabilizing operators of size <= m_max that
// pass verify_parity, deduplicated as sets and sorted by (size, index set).
// Requires n <= 6 and m_max <= 6.
std::vector<ParityProofCertificate> find_parity_proofs(const Graph& g, int m_max,
                                                       bool parallel = true);

enum class NoProofReason { unbalanced, rank_deficient, too_few_qubits };
const char* no_proof_reason_text(NoProofReason r);

struct no_proof_error : std::runtime_error {
  NoProofReason reason;
  no_proof_error(NoProofReason r, const std::string& what)
      : std::runtime_error(what), reason(r) {}
};

struct BavnCertificate {
  Graph graph;
  Bipartition part;
  std::vector<EoRWitness> witnesses;  // 3n, qubits ascending
  ParityProofCertificate contradiction;
};

// Bundles the witnesses with a four-equation contradiction; throws
// no_proof_error when (g, part) fails the checker or n < 3. A disconnected
// graph can pass the checker yet have no i-j-k triple; that surfaces as
// no_certificate_error.
BavnCertificate bavn_certificate(const Graph& g, Bipartition part);

}  // namespace bavn
