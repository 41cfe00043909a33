#include "bavn/stabilizer.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace bavn {

namespace {

int side_size(std::uint8_t mask) { return std::popcount(std::uint32_t(mask)); }

// Compress the bits of `mask` selected by `side` into a contiguous low field.
std::uint32_t gather_bits(std::uint8_t mask, std::uint8_t side) {
  std::uint32_t out = 0;
  int pos = 0;
  for (int v = 0; v < kMaxVertices; ++v) {
    if (!((side >> v) & 1u)) continue;
    out |= std::uint32_t((mask >> v) & 1u) << pos;
    ++pos;
  }
  return out;
}

// Restriction map s -> letters-on-side is a bijection onto all 4^{|side|}
// strings iff no two elements restrict identically (counting argument: the
// group has exactly 4^{|side|} elements when the cut is balanced).
bool side_bijective(const StabilizerGroup& sg, std::uint8_t side) {
  const auto& els = sg.elements();
  std::vector<bool> seen(els.size(), false);
  for (const auto& s : els) {
    std::uint32_t rc = restrict_code(s, side);
    if (seen[rc]) return false;
    seen[rc] = true;
  }
  return true;
}

}  // namespace

const std::vector<PauliOperator>& StabilizerGroup::elements() const {
  if (elements_.empty()) {
    const int n = graph.n;
    elements_.resize(std::size_t{1} << n);
    elements_[0] = PauliOperator::identity(n);
    for (std::uint32_t m = 1; m < elements_.size(); ++m) {
      int i = std::countr_zero(m);
      elements_[m] = multiply(elements_[m & (m - 1)], gens[i]);
    }
  }
  return elements_;
}

StabilizerGroup generators(const Graph& g) {
  StabilizerGroup sg;
  sg.graph = g;
  for (int i = 0; i < g.n; ++i) {
    PauliOperator gi = PauliOperator::identity(g.n);
    gi.x_mask = std::uint8_t(1u << i);
    gi.z_mask = g.adj[i];
    sg.gens.push_back(gi);
  }
  return sg;
}

bool permits_bipartite_eor(const Graph& g, Bipartition part) {
  const int n = g.n;
  const std::uint8_t a = part.a_mask;
  const std::uint8_t b = std::uint8_t(~a & ((1u << n) - 1u));
  if (a == 0 || b == 0) return false;
  if (side_size(a) != side_size(b)) return false;
  StabilizerGroup sg = generators(g);
  return side_bijective(sg, a) && side_bijective(sg, b);
}

bool permits_bipartite_eor_rank(const Graph& g, Bipartition part) {
  const int n = g.n;
  const std::uint8_t a = part.a_mask;
  const int na = side_size(a);
  if (na == 0 || na * 2 != n)
    throw std::invalid_argument("stabilizer: rank method needs a balanced partition");
  // Row i: generator g_i's (x, z) coordinates on Alice's qubits.
  std::vector<std::uint32_t> rows(n);
  for (int i = 0; i < n; ++i) {
    std::uint32_t xa = gather_bits(std::uint8_t(1u << i), a);
    std::uint32_t za = gather_bits(g.adj[i], a);
    rows[i] = xa | (za << na);
  }
  return gf2_rank(std::move(rows)) == n;
}

int cut_rank(const Graph& g, Bipartition part) {
  const std::uint8_t a = part.a_mask;
  const std::uint8_t b = part.b_mask(g.n);
  std::vector<std::uint32_t> rows;
  for (int v = 0; v < g.n; ++v)
    if ((a >> v) & 1u) rows.push_back(gather_bits(g.adj[v], b));
  return gf2_rank(std::move(rows));
}

std::vector<EoRWitness> eor_witnesses(const Graph& g, Bipartition part) {
  if (!permits_bipartite_eor(g, part))
    throw std::logic_error("stabilizer: witnesses requested for a non-passing pair");
  const int n = g.n;
  StabilizerGroup sg = generators(g);
  const auto& els = sg.elements();

  std::vector<EoRWitness> out;
  for (std::uint8_t side : {part.a_mask, part.b_mask(n)}) {
    // Invert the (bijective) restriction map for this side.
    std::vector<std::uint32_t> of_code(els.size(), 0);
    std::vector<bool> seen(els.size(), false);
    for (std::uint32_t m = 0; m < els.size(); ++m) {
      std::uint32_t rc = restrict_code(els[m], side);
      if (seen[rc]) throw std::logic_error("stabilizer: restriction map not injective");
      seen[rc] = true;
      of_code[rc] = m;
    }
    int pos = 0;
    for (int q = 0; q < n; ++q) {
      if (!((side >> q) & 1u)) {
        continue;
      }
      for (Letter l : {Letter::X, Letter::Y, Letter::Z}) {
        auto [x, z] = letter_bits(l);
        std::uint32_t rc = (std::uint32_t(x) << (2 * pos)) | (std::uint32_t(z) << (2 * pos + 1));
        out.push_back(EoRWitness{q, l, els[of_code[rc]]});
      }
      ++pos;
    }
  }
  // Report in ascending qubit order regardless of party.
  std::sort(out.begin(), out.end(), [](const EoRWitness& lhs, const EoRWitness& rhs) {
    if (lhs.qubit != rhs.qubit) return lhs.qubit < rhs.qubit;
    return static_cast<int>(lhs.letter) < static_cast<int>(rhs.letter);
  });
  return out;
}

int gf2_rank(std::vector<std::uint32_t> rows) {
  int rank = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r]) continue;
    int pivot = std::countr_zero(rows[r]);
    for (std::size_t s = 0; s < rows.size(); ++s)
      if (s != r && ((rows[s] >> pivot) & 1u)) rows[s] ^= rows[r];
    ++rank;
  }
  return rank;
}

}  // namespace bavn
