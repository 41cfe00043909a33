#include "bavn/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bavn {

namespace {

void check_range(int n) {
  if (n < 2 || n > 7) throw std::invalid_argument("enumerate: n must be in 2..7");
}

bool code_connected(int n, std::uint32_t code) {
  // Decode rows inline; cheaper than building a Graph.
  std::uint8_t adj[kMaxVertices] = {};
  int nslots = n * (n - 1) / 2;
  std::uint32_t c = code;
  while (c) {
    int bit = std::countr_zero(c);
    c &= c - 1;
    int slot = nslots - 1 - bit;
    // invert pair_slot: find (i, j) with slot index `slot`
    int i = 0, acc = 0;
    while (acc + (n - 1 - i) <= slot) {
      acc += n - 1 - i;
      ++i;
    }
    int j = i + 1 + (slot - acc);
    adj[i] |= std::uint8_t(1u << j);
    adj[j] |= std::uint8_t(1u << i);
  }
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

// Ascending sweep over the codes in one edge-count bucket. The first unseen
// connected code is the minimum of its isomorphism class (relabeling
// preserves the edge count, so whole orbits live inside the bucket); mark the
// orbit and continue.
void sweep_bucket(int n, int k, const PermutationTable& pt, std::vector<std::uint32_t>& out) {
  const std::uint32_t limit = 1u << (n * (n - 1) / 2);
  std::vector<bool> seen(limit, false);
  std::uint32_t code = (1u << k) - 1u;
  while (code < limit) {
    if (!seen[code] && code_connected(n, code)) {
      out.push_back(code);
      for (int p = 0; p < pt.size(); ++p) seen[pt.apply(p, code)] = true;
    }
    // next code with k bits set (Gosper)
    std::uint32_t c = code & (0u - code);
    std::uint32_t r = code + c;
    code = (((r ^ code) >> 2) / c) | r;
  }
}

}  // namespace

std::vector<Graph> enumerate_connected(int n) {
  check_range(n);
  const auto& pt = PermutationTable::for_n(n);
  const int nslots = n * (n - 1) / 2;

  // Connected graphs need at least n-1 edges; buckets are independent.
  std::vector<std::vector<std::uint32_t>> buckets(nslots + 1);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
  for (int k = n - 1; k <= nslots; ++k) sweep_bucket(n, k, pt, buckets[k]);

  std::vector<std::uint32_t> codes;
  for (const auto& bucket : buckets) codes.insert(codes.end(), bucket.begin(), bucket.end());
  std::sort(codes.begin(), codes.end());

  std::vector<Graph> out;
  out.reserve(codes.size());
  for (std::uint32_t c : codes) out.push_back(Graph::from_code(n, c));
  return out;
}

std::vector<Graph> enumerate_connected_serial(int n) {
  check_range(n);
  const std::uint32_t limit = 1u << (n * (n - 1) / 2);

  // Transparent reference: keep a code iff no relabeling yields a smaller
  // one. Costs a permutation scan per connected code but is obviously exact.
  std::vector<Graph> out;
  for (std::uint32_t code = 1; code < limit; ++code) {
    if (!code_connected(n, code)) continue;
    Graph g = Graph::from_code(n, code);
    if (is_canonical_code(g)) out.push_back(g);
  }
  return out;
}

std::vector<LcOrbit> lc_orbits(int n) {
  std::vector<Graph> reps = enumerate_connected(n);
  std::unordered_map<std::uint32_t, int> index;
  for (std::size_t i = 0; i < reps.size(); ++i) index.emplace(reps[i].code(), int(i));

  std::vector<bool> visited(reps.size(), false);
  std::vector<LcOrbit> orbits;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (visited[i]) continue;
    LcOrbit orbit;
    orbit.class_id = static_cast<int>(orbits.size());
    std::vector<std::uint32_t> queue{reps[i].code()};
    visited[i] = true;
    while (!queue.empty()) {
      std::uint32_t code = queue.back();
      queue.pop_back();
      Graph g = Graph::from_code(n, code);
      orbit.members.push_back(g);
      for (int v = 0; v < n; ++v) {
        Graph image = canonical_form(local_complement(g, v));
        auto it = index.find(image.code());
        if (it == index.end())
          throw std::logic_error("enumerate: LC image missing from the connected catalog");
        if (!visited[it->second]) {
          visited[it->second] = true;
          queue.push_back(image.code());
        }
      }
    }
    std::sort(orbit.members.begin(), orbit.members.end());
    orbit.representative = orbit.members.front();
    orbits.push_back(std::move(orbit));
  }
  // The ascending scan reaches each orbit at its minimal member first, so
  // class ids already ascend with the representative encoding.
  return orbits;
}

}  // namespace bavn
