#include "bavn/statevector.hpp"

#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace bavn {

namespace {
constexpr std::complex<double> kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

// qubit k (0-based) sits at index bit n-1-k
inline int qubit_bit(int n, int k) { return n - 1 - k; }
}  // namespace

double StateVector::norm() const {
  double s = 0;
  for (const auto& a : amps) s += std::norm(a);
  return std::sqrt(s);
}

StateVector build_state(const Graph& g) {
  const int n = g.n;
  if (n > kMaxStateQubits) throw std::invalid_argument("statevector: too many qubits");
  StateVector s;
  s.n = n;
  const std::size_t dim = std::size_t{1} << n;
  const double amp = 1.0 / std::sqrt(double(dim));
  s.amps.assign(dim, amp);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.edge(i, j)) {
        const std::size_t bi = std::size_t{1} << qubit_bit(n, i);
        const std::size_t bj = std::size_t{1} << qubit_bit(n, j);
        for (std::size_t b = 0; b < dim; ++b)
          if ((b & bi) && (b & bj)) s.amps[b] = -s.amps[b];
      }
  return s;
}

StateVector apply_pauli(const PauliOperator& p, const StateVector& s) {
  if (p.n != s.n) throw std::invalid_argument("statevector: dimension mismatch");
  const int n = s.n;
  const std::size_t dim = std::size_t{1} << n;
  // remap masks from qubit bits to index bits
  std::size_t xm = 0, zm = 0;
  for (int k = 0; k < n; ++k) {
    if ((p.x_mask >> k) & 1u) xm |= std::size_t{1} << qubit_bit(n, k);
    if ((p.z_mask >> k) & 1u) zm |= std::size_t{1} << qubit_bit(n, k);
  }
  const std::complex<double> ph = kPhases[p.phase_exp & 3];
  StateVector out;
  out.n = n;
  out.amps.assign(dim, {0, 0});
  for (std::size_t b = 0; b < dim; ++b) {
    const int zpar = std::popcount(std::size_t(b & zm)) & 1;
    out.amps[b ^ xm] += (zpar ? -ph : ph) * s.amps[b];
  }
  return out;
}

StateVector apply_hadamard(const StateVector& s, int qubit) {
  const int n = s.n;
  if (qubit < 0 || qubit >= n) throw std::invalid_argument("statevector: qubit out of range");
  const std::size_t bit = std::size_t{1} << qubit_bit(n, qubit);
  const double r = 1.0 / std::sqrt(2.0);
  StateVector out = s;
  for (std::size_t b = 0; b < s.amps.size(); ++b) {
    if (b & bit) continue;
    const auto a0 = s.amps[b];
    const auto a1 = s.amps[b | bit];
    out.amps[b] = r * (a0 + a1);
    out.amps[b | bit] = r * (a0 - a1);
  }
  return out;
}

std::complex<double> inner(const StateVector& a, const StateVector& b) {
  if (a.n != b.n) throw std::invalid_argument("statevector: dimension mismatch");
  std::complex<double> s = 0;
  for (std::size_t i = 0; i < a.amps.size(); ++i) s += std::conj(a.amps[i]) * b.amps[i];
  return s;
}

double verify_stabilizer(const Graph& g) {
  if (g.n > kMaxQubits) throw std::invalid_argument("statevector: too many qubits");
  const StateVector psi = build_state(g);
  const int n = g.n;
  std::vector<PauliOperator> gens;
  for (int i = 0; i < n; ++i) {
    PauliOperator gi = PauliOperator::identity(n);
    gi.x_mask = std::uint8_t(1u << i);
    gi.z_mask = g.adj[i];
    gens.push_back(gi);
  }
  double worst = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    PauliOperator s = PauliOperator::identity(n);
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1u) s = multiply(s, gens[i]);
    StateVector sp = apply_pauli(s, psi);
    double dev = 0;
    for (std::size_t b = 0; b < sp.amps.size(); ++b) dev += std::norm(sp.amps[b] - psi.amps[b]);
    worst = std::max(worst, std::sqrt(dev));
  }
  return worst;
}

StateVector psi4a_state() {
  // amplitudes: 1/4 * (-1)^(ab + ac + bd) over index bits (a,b,c,d),
  // from expanding the sigma_x kets of qubits 3 and 4
  StateVector s;
  s.n = 4;
  s.amps.assign(16, {0, 0});
  for (int b = 0; b < 16; ++b) {
    int q1 = (b >> 3) & 1, q2 = (b >> 2) & 1, q3 = (b >> 1) & 1, q4 = b & 1;
    int sign = (q1 * q2 + q1 * q3 + q2 * q4) & 1;
    s.amps[b] = sign ? -0.25 : 0.25;
  }
  return s;
}

Psi4aResult check_psi4a() {
  const StateVector target = psi4a_state();
  Graph path = Graph::empty(4);
  path.set_edge(0, 1, true);
  path.set_edge(1, 2, true);
  path.set_edge(2, 3, true);
  const auto& pt = PermutationTable::for_n(4);
  Psi4aResult best;
  for (int p = 0; p < pt.size(); ++p) {
    Graph h = Graph::from_code(4, pt.apply(p, path.code()));
    double f = std::abs(inner(target, build_state(h)));
    if (f > best.fidelity) {
      best.second_best = best.fidelity;
      best.fidelity = f;
      best.graph = h;
    } else if (h != best.graph) {
      best.second_best = std::max(best.second_best, f);
    }
  }
  return best;
}

std::string dump_amplitudes(const StateVector& s) {
  std::ostringstream out;
  out.precision(17);
  for (std::size_t b = 0; b < s.amps.size(); ++b) {
    for (int k = 0; k < s.n; ++k) out << ((b >> qubit_bit(s.n, k)) & 1u);
    // + 0.0 turns negative zeros into plain zeros
    out << ' ' << s.amps[b].real() + 0.0 << ' ' << s.amps[b].imag() + 0.0 << '\n';
  }
  return out.str();
}

DenseMatrix dense_matrix(const PauliOperator& p) {
  const int n = p.n;
  const std::size_t dim = std::size_t{1} << n;
  // remap to index bits
  std::size_t xm = 0, zm = 0;
  for (int k = 0; k < n; ++k) {
    if ((p.x_mask >> k) & 1u) xm |= std::size_t{1} << qubit_bit(n, k);
    if ((p.z_mask >> k) & 1u) zm |= std::size_t{1} << qubit_bit(n, k);
  }
  const std::complex<double> ph = kPhases[p.phase_exp & 3];
  DenseMatrix m(dim * dim, {0, 0});
  for (std::size_t col = 0; col < dim; ++col) {
    const int zpar = std::popcount(std::size_t(col & zm)) & 1;
    m[(col ^ xm) * dim + col] = zpar ? -ph : ph;
  }
  return m;
}

DenseMatrix dense_multiply(const DenseMatrix& a, const DenseMatrix& b, int dim) {
  DenseMatrix c(std::size_t(dim) * dim, {0, 0});
  for (int i = 0; i < dim; ++i)
    for (int k = 0; k < dim; ++k) {
      const auto aik = a[std::size_t(i) * dim + k];
      if (aik == std::complex<double>{0, 0}) continue;
      for (int j = 0; j < dim; ++j) c[std::size_t(i) * dim + j] += aik * b[std::size_t(k) * dim + j];
    }
  return c;
}

}  // namespace bavn
