// Full classification: for every local-complementation class and every
// balanced two-party distribution of its member graphs, decide bipartite
// elements of reality, merge physically equivalent distributions (colored
// isomorphism + party swap + local complementation), and attach a verifiable
// certificate to each survivor.

#pragma once

#include <string>
#include <vector>

#include "bavn/enumerate.hpp"
#include "bavn/proofs.hpp"

namespace bavn {

struct DistributionRecord {
  ColoredGraph canonical;   // minimal colored form in its colored-LC class
  std::string cert_ref;     // e.g. "n6-c03-d00"
  BavnCertificate certificate;
  int merged_cut_count = 0;  // colored forms merged into this distribution
};

struct ClassRow {
  int class_id = 0;
  Graph representative;
  int orbit_size = 0;
  std::vector<DistributionRecord> distributions;
};

struct ClassificationReport {
  int n = 0;
  std::string reason;  // set when no distribution can exist at this n
  std::vector<ClassRow> rows;
  int classes_with_proofs = 0;
  int distinct_distributions = 0;          // party swap allowed
  int distinct_distributions_no_swap = 0;  // Alice/Bob roles kept fixed
  std::string psi4a_note;                  // n == 4 only
};

ClassificationReport classify(int n, bool parallel = true);

}  // namespace bavn
