#include "bavn/classify.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bavn/graph_io.hpp"
#include "bavn/statevector.hpp"

namespace bavn {

namespace {

struct WorkItem {
  std::uint32_t graph_code;
  std::uint8_t a_mask;
};

// Connected components of a set of canonical colored forms under local
// complementation followed by re-canonicalization. Returns the minimal code
// of each component plus its size, ascending.
std::vector<std::pair<std::uint64_t, int>> lc_components(
    int n, const std::vector<std::uint64_t>& forms, bool allow_party_swap) {
  std::unordered_map<std::uint64_t, int> index;
  for (std::size_t i = 0; i < forms.size(); ++i) index.emplace(forms[i], int(i));
  std::vector<bool> visited(forms.size(), false);
  std::vector<std::pair<std::uint64_t, int>> components;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (visited[i]) continue;
    visited[i] = true;
    std::vector<std::uint64_t> queue{forms[i]};
    std::uint64_t min_code = forms[i];
    int size = 0;
    while (!queue.empty()) {
      std::uint64_t code = queue.back();
      queue.pop_back();
      ++size;
      min_code = std::min(min_code, code);
      ColoredGraph cg = ColoredGraph::from_code(n, code);
      for (int v = 0; v < n; ++v) {
        ColoredGraph img = cg;
        img.graph = local_complement(cg.graph, v);
        std::uint64_t icode = canonical_colored(img, allow_party_swap).code();
        auto it = index.find(icode);
        if (it == index.end())
          throw std::logic_error(
              "classify: local complementation left the passing set; the "
              "elements-of-reality verdict was not LC-invariant");
        if (!visited[it->second]) {
          visited[it->second] = true;
          queue.push_back(icode);
        }
      }
    }
    components.emplace_back(min_code, size);
  }
  std::sort(components.begin(), components.end());
  return components;
}

}  // namespace

ClassificationReport classify(int n, bool parallel) {
  if (n < 2 || n > 7) throw std::invalid_argument("classify: n must be in 2..7");

  ClassificationReport report;
  report.n = n;
  if (n % 2 != 0) {
    report.reason = "n_A != n_B for every bipartition of an odd number of qubits";
    return report;
  }

  const std::vector<LcOrbit> orbits = lc_orbits(n);
  std::unordered_map<std::uint32_t, int> class_of;
  for (const auto& orbit : orbits)
    for (const auto& member : orbit.members) class_of.emplace(member.code(), orbit.class_id);

  if (n < 3) {
    report.reason = "no contradiction exists below 3 qubits";
    return report;
  }

  // Every member graph x every balanced cut with vertex 1 on Alice's side
  // (the complement cut is the same distribution with the parties swapped).
  std::vector<WorkItem> items;
  for (const auto& orbit : orbits)
    for (const auto& member : orbit.members)
      for (std::uint8_t a = 1; a < (1u << n); ++a)
        if ((a & 1u) && std::popcount(std::uint32_t(a)) == n / 2)
          items.push_back(WorkItem{member.code(), a});

  std::vector<std::vector<std::uint64_t>> swap_hits(1), noswap_hits(1);

  auto process = [&](const WorkItem& item, std::vector<std::uint64_t>& sw,
                     std::vector<std::uint64_t>& nsw) {
    Graph g = Graph::from_code(n, item.graph_code);
    Bipartition part{item.a_mask};
    if (!permits_bipartite_eor(g, part)) return;
    ColoredGraph cg{g, item.a_mask};
    sw.push_back(canonical_colored(cg, true).code());
    nsw.push_back(canonical_colored(cg, false).code());
    ColoredGraph swapped{g, part.b_mask(n)};
    nsw.push_back(canonical_colored(swapped, false).code());
  };

#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel
    {
#pragma omp single
      {
        swap_hits.resize(omp_get_num_threads());
        noswap_hits.resize(omp_get_num_threads());
      }
#pragma omp for schedule(dynamic)
      for (std::size_t i = 0; i < items.size(); ++i) {
        int t = omp_get_thread_num();
        process(items[i], swap_hits[t], noswap_hits[t]);
      }
    }
  } else
#endif
  {
    (void)parallel;
    for (const auto& item : items) process(item, swap_hits[0], noswap_hits[0]);
  }

  auto flatten = [](std::vector<std::vector<std::uint64_t>>& parts) {
    std::vector<std::uint64_t> all;
    for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
  };
  const std::vector<std::uint64_t> passing_swap = flatten(swap_hits);
  const std::vector<std::uint64_t> passing_noswap = flatten(noswap_hits);

  const auto distributions = lc_components(n, passing_swap, true);
  report.distinct_distributions = static_cast<int>(distributions.size());
  report.distinct_distributions_no_swap =
      static_cast<int>(lc_components(n, passing_noswap, false).size());

  // Only classes with at least one surviving distribution become rows.
  std::map<int, ClassRow> rows_by_class;
  for (const auto& [code, size] : distributions) {
    ColoredGraph rep = ColoredGraph::from_code(n, code);
    auto it = class_of.find(rep.graph.code());
    if (it == class_of.end())
      throw std::logic_error("classify: distribution representative outside the catalog");
    const LcOrbit& orbit = orbits[it->second];

    ClassRow& row = rows_by_class[orbit.class_id];
    row.class_id = orbit.class_id;
    row.representative = orbit.representative;
    row.orbit_size = static_cast<int>(orbit.members.size());

    DistributionRecord rec;
    rec.canonical = rep;
    rec.merged_cut_count = size;
    rec.certificate = bavn_certificate(rep.graph, Bipartition{rep.part_a});
    row.distributions.push_back(std::move(rec));
  }

  for (auto& [class_id, row] : rows_by_class) {
    std::sort(row.distributions.begin(), row.distributions.end(),
              [](const DistributionRecord& a, const DistributionRecord& b) {
                return a.canonical.code() < b.canonical.code();
              });
    for (std::size_t d = 0; d < row.distributions.size(); ++d) {
      std::ostringstream ref;
      ref << "n" << n << "-c" << class_id << "-d" << d;
      row.distributions[d].cert_ref = ref.str();
    }
    report.rows.push_back(std::move(row));
  }
  report.classes_with_proofs = static_cast<int>(report.rows.size());

  if (n == 4) {
    Psi4aResult psi = check_psi4a();
    std::ostringstream note;
    note << "psi4a equals the graph state " << format_edge_list(psi.graph)
         << " (overlap " << psi.fidelity << "); Alice holds qubits 1,2";
    report.psi4a_note = note.str();
  }
  return report;
}

}  // namespace bavn
