#include "bavn/certificate_io.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "bavn/graph_io.hpp"
#include "bavn/statevector.hpp"

namespace bavn {

namespace {

constexpr std::string_view kMagic = "bavn certificate v1";
constexpr double kTol = 1e-10;

std::string_view next_line(std::string_view& text) {
  std::size_t pos = text.find('\n');
  std::string_view line = text.substr(0, pos);
  text.remove_prefix(pos == std::string_view::npos ? text.size() : pos + 1);
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
  return line;
}

std::string_view expect_prefix(std::string_view line, std::string_view prefix) {
  if (line.substr(0, prefix.size()) != prefix)
    throw std::invalid_argument("certificate: expected \"" + std::string(prefix) + "\" line");
  return line.substr(prefix.size());
}

// True iff s is one of the 2^n stabilizing operators of g, sign included.
// The x mask of a product of generators equals its generator subset, so the
// subset is forced and the z mask and phase just have to match.
bool is_stabilizing_operator(const Graph& g, const PauliOperator& s) {
  if (s.n != g.n) return false;
  StabilizerGroup sg = generators(g);
  PauliOperator prod = PauliOperator::identity(g.n);
  for (int i = 0; i < g.n; ++i)
    if ((s.x_mask >> i) & 1u) prod = multiply(prod, sg.gens[i]);
  return prod == s;
}

}  // namespace

std::string render_certificate(const BavnCertificate& cert) {
  std::ostringstream out;
  out << kMagic << '\n';
  out << "graph: " << format_edge_list(cert.graph) << '\n';
  out << "partition: " << format_partition(cert.part) << '\n';
  out << "equations: " << cert.contradiction.equations.size() << '\n';
  for (const auto& eq : cert.contradiction.equations) out << render(eq) << '\n';
  out << "witnesses: " << cert.witnesses.size() << '\n';
  for (const auto& w : cert.witnesses)
    out << "qubit " << (w.qubit + 1) << ", letter " << letter_char(w.letter) << ": "
        << render(w.witness) << '\n';
  return out.str();
}

BavnCertificate parse_certificate(std::string_view text) {
  BavnCertificate cert;
  if (next_line(text) != kMagic)
    throw std::invalid_argument("certificate: missing or unsupported header");
  cert.graph = parse_graph(expect_prefix(next_line(text), "graph: "));
  cert.part = parse_partition(expect_prefix(next_line(text), "partition: "), cert.graph.n);

  std::string_view eqn = expect_prefix(next_line(text), "equations: ");
  int m = std::stoi(std::string(eqn));
  if (m < 1 || m > 64) throw std::invalid_argument("certificate: bad equation count");
  for (int i = 0; i < m; ++i) {
    PauliOperator op = parse_rendered(next_line(text));
    if (op.n != cert.graph.n) throw std::invalid_argument("certificate: equation arity mismatch");
    cert.contradiction.equations.push_back(op);
  }

  std::string_view wit = expect_prefix(next_line(text), "witnesses: ");
  int w = std::stoi(std::string(wit));
  if (w < 0 || w > 3 * kMaxQubits) throw std::invalid_argument("certificate: bad witness count");
  for (int i = 0; i < w; ++i) {
    std::string_view line = expect_prefix(next_line(text), "qubit ");
    std::size_t comma = line.find(',');
    if (comma == std::string_view::npos) throw std::invalid_argument("certificate: bad witness line");
    int qubit = std::stoi(std::string(line.substr(0, comma)));
    line.remove_prefix(comma);
    line = expect_prefix(line, ", letter ");
    if (line.size() < 3 || line[1] != ':' || line[2] != ' ')
      throw std::invalid_argument("certificate: bad witness line");
    char lc = line[0];
    Letter l = lc == 'X'   ? Letter::X
               : lc == 'Y' ? Letter::Y
               : lc == 'Z' ? Letter::Z
                           : Letter::I;
    if (l == Letter::I) throw std::invalid_argument("certificate: bad witness letter");
    EoRWitness ew;
    ew.qubit = qubit - 1;
    ew.letter = l;
    ew.witness = parse_rendered(line.substr(3));
    if (ew.witness.n != cert.graph.n || ew.qubit < 0 || ew.qubit >= cert.graph.n)
      throw std::invalid_argument("certificate: bad witness data");
    cert.witnesses.push_back(ew);
  }
  return cert;
}

std::string VerifyReport::summary() const {
  std::ostringstream out;
  auto line = [&](const char* name, bool pass) {
    out << "  " << name << ": " << (pass ? "ok" : "FAIL") << '\n';
  };
  line("stabilizer membership", structure_ok);
  line("parity contradiction", parity_ok);
  line("value assignments exhausted", lhv_unsat);
  line("witness coverage", witnesses_ok);
  line("bipartite elements of reality", checker_ok);
  out << "  eigen-equations: " << (eigen_ok ? "ok" : "FAIL")
      << " (max deviation " << max_eigen_deviation << ")\n";
  return out.str();
}

VerifyReport verify_certificate(const BavnCertificate& cert) {
  VerifyReport rep;
  const Graph& g = cert.graph;
  const int n = g.n;

  rep.structure_ok = !cert.contradiction.equations.empty();
  for (const auto& eq : cert.contradiction.equations)
    rep.structure_ok = rep.structure_ok && is_stabilizing_operator(g, eq);
  for (const auto& w : cert.witnesses)
    rep.structure_ok = rep.structure_ok && is_stabilizing_operator(g, w.witness);

  rep.parity_ok = verify_parity(cert.contradiction);
  rep.lhv_unsat = !cert.contradiction.equations.empty() && !brute_force_lhv(cert.contradiction);
  rep.checker_ok = permits_bipartite_eor(g, cert.part);

  // Witnesses: one per (qubit, letter), correct own-party restriction, and
  // every observable of the contradiction covered.
  rep.witnesses_ok = static_cast<int>(cert.witnesses.size()) == 3 * n;
  std::array<std::array<bool, 3>, kMaxQubits> have{};
  for (const auto& w : cert.witnesses) {
    if (w.qubit < 0 || w.qubit >= n || w.letter == Letter::I) {
      rep.witnesses_ok = false;
      continue;
    }
    std::uint8_t side = ((cert.part.a_mask >> w.qubit) & 1u) ? cert.part.a_mask
                                                             : cert.part.b_mask(n);
    std::string want;
    for (int q = 0; q < n; ++q) {
      if (!((side >> q) & 1u)) continue;
      want.push_back(q == w.qubit ? letter_char(w.letter) : 'I');
    }
    if (restrict_to(w.witness, side) != want) rep.witnesses_ok = false;
    have[w.qubit][static_cast<int>(w.letter) - 1] = true;
  }
  for (auto [q, l] : cert.contradiction.observables())
    if (!have[q][static_cast<int>(l) - 1]) rep.witnesses_ok = false;

  // Numeric ground truth: every equation and witness stabilizes |G>.
  const StateVector psi = build_state(g);
  auto deviation = [&](const PauliOperator& s) {
    StateVector sp = apply_pauli(s, psi);
    double dev = 0;
    for (std::size_t b = 0; b < sp.amps.size(); ++b) dev += std::norm(sp.amps[b] - psi.amps[b]);
    return std::sqrt(dev);
  };
  for (const auto& eq : cert.contradiction.equations)
    rep.max_eigen_deviation = std::max(rep.max_eigen_deviation, deviation(eq));
  for (const auto& w : cert.witnesses)
    rep.max_eigen_deviation = std::max(rep.max_eigen_deviation, deviation(w.witness));
  rep.eigen_ok = rep.max_eigen_deviation <= kTol;

  return rep;
}

}  // namespace bavn
