// Certificate file format and the standalone verification pipeline.
//
//   bavn certificate v1
//   graph: 4;1-2,1-3,2-4
//   partition: A=1,2
//   equations: 4
//   +X1·Z2·Z3·I4
//   ...
//   witnesses: 12
//   qubit 1, letter X: +X1·Z2·Z3·I4
//   ...
//
// Rendering is deterministic; parse(render(c)) reproduces identical
// symplectic data and render(parse(text)) reproduces the text byte for byte.

#pragma once

#include <string>
#include <string_view>

#include "bavn/proofs.hpp"

namespace bavn {

std::string render_certificate(const BavnCertificate& cert);
BavnCertificate parse_certificate(std::string_view text);

struct VerifyReport {
  bool structure_ok = false;   // equations and witnesses are stabilizing operators
  bool parity_ok = false;      // verify_parity on the contradiction
  bool lhv_unsat = false;      // brute-force value assignment finds nothing
  bool witnesses_ok = false;   // 3n witnesses with the right restrictions, covering
                               // every observable of the contradiction
  bool checker_ok = false;     // permits_bipartite_eor on (graph, partition)
  bool eigen_ok = false;       // statevector: s|G> = |G> within tolerance
  double max_eigen_deviation = 0.0;

  bool ok() const {
    return structure_ok && parity_ok && lhv_unsat && witnesses_ok && checker_ok && eigen_ok;
  }
  std::string summary() const;
};

VerifyReport verify_certificate(const BavnCertificate& cert);

}  // namespace bavn
