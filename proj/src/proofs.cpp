#include "bavn/proofs.hpp"

#include <algorithm>
#include <array>
#include <bit>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bavn {

namespace {

// Per-equation occurrence vector: one bit per (qubit, letter in {X,Y,Z}),
// plus the rendered sign in bit 3n. Parity proofs are exactly the subsets
// whose vectors XOR to "all letters even, total sign -1".
std::uint32_t letter_vector(const PauliOperator& s) {
  std::uint32_t v = 0;
  for (int q = 0; q < s.n; ++q) {
    Letter l = s.letter(q);
    if (l != Letter::I) v |= 1u << (3 * q + (static_cast<int>(l) - 1));
  }
  if (sign_of(s) < 0) v |= 1u << (3 * s.n);
  return v;
}

}  // namespace

std::vector<std::pair<int, Letter>> ParityProofCertificate::observables() const {
  std::vector<std::pair<int, Letter>> out;
  for (const auto& eq : equations)
    for (int q = 0; q < eq.n; ++q) {
      Letter l = eq.letter(q);
      if (l != Letter::I) out.emplace_back(q, l);
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool verify_parity(const ParityProofCertificate& cert) {
  if (cert.equations.empty()) return false;
  const int n = cert.equations.front().n;

  std::array<std::array<int, 3>, kMaxQubits> counts{};
  int sign_product = 1;
  PauliOperator chain = PauliOperator::identity(n);
  for (const auto& eq : cert.equations) {
    if (eq.n != n || !eq.hermitian()) return false;
    for (int q = 0; q < n; ++q) {
      Letter l = eq.letter(q);
      if (l != Letter::I) counts[q][static_cast<int>(l) - 1] += 1;
    }
    sign_product *= sign_of(eq);
    chain = multiply(chain, eq);
  }
  for (int q = 0; q < n; ++q)
    for (int c : counts[q])
      if (c % 2 != 0) return false;
  // With even occurrences the chain collapses to a phase times identity; a
  // consistent set of eigen-equations multiplies to exactly +identity, and
  // the contradiction is that the letterwise sign product is -1 instead of
  // the +1 any value assignment would give.
  if (chain.x_mask != 0 || chain.z_mask != 0 || chain.phase_exp != 0) return false;
  return sign_product == -1;
}

bool brute_force_lhv(const ParityProofCertificate& cert) {
  const auto obs = cert.observables();
  if (obs.size() > 24) throw std::invalid_argument("lhv: more than 24 observables");
  // Equation -> bitmask over observable indices + required sign.
  std::vector<std::uint32_t> masks;
  std::vector<int> want_negative;
  for (const auto& eq : cert.equations) {
    std::uint32_t m = 0;
    for (std::size_t k = 0; k < obs.size(); ++k) {
      auto [q, l] = obs[k];
      if (eq.letter(q) == l) m |= 1u << k;
    }
    masks.push_back(m);
    want_negative.push_back(sign_of(eq) < 0 ? 1 : 0);
  }
  const std::uint32_t limit = 1u << obs.size();
  for (std::uint32_t assign = 0; assign < limit; ++assign) {
    bool ok = true;
    for (std::size_t e = 0; e < masks.size(); ++e) {
      if ((std::popcount(assign & masks[e]) & 1) != want_negative[e]) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

ParityProofCertificate triple_contradiction(const Graph& g) {
  if (g.n < 3) throw no_certificate_error("contradiction: need at least 3 vertices");
  // Smallest (i, j, k) in lexicographic order with i-j and j-k edges, i < k.
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) {
      if (j == i || !g.edge(i, j)) continue;
      for (int k = i + 1; k < g.n; ++k) {
        if (k == j || !g.edge(j, k)) continue;
        StabilizerGroup sg = generators(g);
        const auto& gi = sg.gens[i];
        const auto& gj = sg.gens[j];
        const auto& gk = sg.gens[k];
        ParityProofCertificate cert;
        if (!g.edge(i, k)) {
          cert.equations = {multiply(gi, gj), gj, multiply(gj, gk),
                            multiply(multiply(gi, gj), gk)};
        } else {
          cert.equations = {gi, gj, gk, multiply(multiply(gi, gj), gk)};
        }
        return cert;
      }
    }
  throw no_certificate_error("contradiction: no i-j-k path found (graph disconnected?)");
}

std::vector<ParityProofCertificate> find_parity_proofs(const Graph& g, int m_max,
                                                       bool parallel) {
  if (g.n > 6) throw std::invalid_argument("parity search: n must be <= 6");
  if (m_max < 1 || m_max > 6) throw std::invalid_argument("parity search: m_max must be <= 6");

  StabilizerGroup sg = generators(g);
  const auto& els = sg.elements();
  const int count = static_cast<int>(els.size());

  // Precompute letter vectors; skip the identity (index 0), it contributes
  // no observables.
  std::vector<std::uint32_t> vec(count);
  for (int m = 1; m < count; ++m) vec[m] = letter_vector(els[m]);
  const std::uint32_t target = 1u << (3 * g.n);  // all letters even, sign -1

  std::vector<std::vector<std::vector<int>>> hits(1);

  auto scan_from = [&](int first, std::vector<std::vector<int>>& out) {
    std::array<int, 6> pick{};
    pick[0] = first;
    // Depth-first over ascending index combinations with a running XOR.
    auto rec = [&](auto&& self, int depth, std::uint32_t acc) -> void {
      if (depth >= 2 && acc == target) {
        out.emplace_back(pick.begin(), pick.begin() + depth);
      }
      if (depth == m_max) return;
      for (int next = pick[depth - 1] + 1; next < count; ++next) {
        pick[depth] = next;
        self(self, depth + 1, acc ^ vec[next]);
      }
    };
    rec(rec, 1, vec[first]);
  };

#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel
    {
#pragma omp single
      hits.resize(omp_get_num_threads());
#pragma omp for schedule(dynamic)
      for (int first = 1; first < count; ++first)
        scan_from(first, hits[omp_get_thread_num()]);
    }
  } else
#endif
  {
    (void)parallel;
    for (int first = 1; first < count; ++first) scan_from(first, hits[0]);
  }

  std::vector<std::vector<int>> sets;
  for (auto& part : hits) sets.insert(sets.end(), part.begin(), part.end());
  std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });

  std::vector<ParityProofCertificate> out;
  out.reserve(sets.size());
  for (const auto& s : sets) {
    ParityProofCertificate cert;
    for (int idx : s) cert.equations.push_back(els[idx]);
    out.push_back(std::move(cert));
  }
  return out;
}

const char* no_proof_reason_text(NoProofReason r) {
  switch (r) {
    case NoProofReason::unbalanced: return "unbalanced";
    case NoProofReason::rank_deficient: return "rank-deficient";
    case NoProofReason::too_few_qubits: return "n<3";
  }
  return "?";
}

BavnCertificate bavn_certificate(const Graph& g, Bipartition part) {
  const int n = g.n;
  const int na = std::popcount(std::uint32_t(part.a_mask));
  if (na == 0 || 2 * na != n)
    throw no_proof_error(NoProofReason::unbalanced,
                         "bavn: bipartite elements of reality need n_A = n_B");
  if (!permits_bipartite_eor(g, part))
    throw no_proof_error(NoProofReason::rank_deficient,
                         "bavn: reduced stabilizer misses letter strings on one side");
  if (n < 3)
    throw no_proof_error(NoProofReason::too_few_qubits,
                         "bavn: no contradiction exists below 3 qubits");
  BavnCertificate cert;
  cert.graph = g;
  cert.part = part;
  cert.witnesses = eor_witnesses(g, part);
  cert.contradiction = triple_contradiction(g);
  return cert;
}

}  // namespace bavn
