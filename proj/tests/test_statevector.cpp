#include <doctest.h>

#include <random>

#include "bavn/enumerate.hpp"
#include "bavn/graph_io.hpp"
#include "bavn/stabilizer.hpp"
#include "bavn/statevector.hpp"
#include "test_util.hpp"

using namespace bavn;
using namespace bavn::test;

TEST_CASE("statevector: graph state construction") {
  StateVector v1 = build_state(Graph::empty(1));
  REQUIRE(v1.amps.size() == 2);
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(v1.amps[0] - r) < 1e-12);
  CHECK(std::abs(v1.amps[1] - r) < 1e-12);

  StateVector edge = build_state(parse_graph("2;1-2"));
  REQUIRE(edge.amps.size() == 4);
  CHECK(std::abs(edge.amps[0] - 0.5) < 1e-12);
  CHECK(std::abs(edge.amps[1] - 0.5) < 1e-12);
  CHECK(std::abs(edge.amps[2] - 0.5) < 1e-12);
  CHECK(std::abs(edge.amps[3] + 0.5) < 1e-12);

  CHECK(std::abs(build_state(path_graph(7)).norm() - 1.0) < 1e-12);
}

TEST_CASE("statevector: pauli application") {
  StateVector zero;
  zero.n = 1;
  zero.amps = {{1, 0}, {0, 0}};
  StateVector one = apply_pauli(PauliOperator::single(1, 0, Letter::X), zero);
  CHECK(std::abs(one.amps[0]) < 1e-12);
  CHECK(std::abs(one.amps[1] - std::complex<double>{1, 0}) < 1e-12);

  StateVector same = apply_pauli(PauliOperator::identity(1), zero);
  CHECK(std::abs(same.amps[0] - std::complex<double>{1, 0}) < 1e-12);

  // g2 of the path 1-2-3 fixes |G>
  Graph p3 = path_graph(3);
  auto sg = generators(p3);
  StateVector psi = build_state(p3);
  StateVector fixed = apply_pauli(sg.gens[1], psi);
  double dev = 0;
  for (std::size_t b = 0; b < psi.amps.size(); ++b)
    dev = std::max(dev, std::abs(fixed.amps[b] - psi.amps[b]));
  CHECK(dev < 1e-10);
}

TEST_CASE("statevector: pauli application is unitary") {
  std::mt19937 rng(31);
  for (int it = 0; it < 100; ++it) {
    int n = 1 + int(rng() % 6);
    Graph g = Graph::from_code(n, rng() & ((1u << (n * (n - 1) / 2)) - 1u));
    StateVector psi = build_state(g);
    PauliOperator p = random_pauli(rng, n);
    CHECK(std::abs(apply_pauli(p, psi).norm() - 1.0) < 1e-12);
  }
}

TEST_CASE("statevector: stabilizer eigen-equations") {
  CHECK(verify_stabilizer(parse_graph("2;1-2")) <= 1e-10);
  for (const auto& g : enumerate_connected(4)) CHECK(verify_stabilizer(g) <= 1e-10);

  // a flipped sign lands in the orthogonal eigenspace: deviation exactly 2
  Graph p3 = path_graph(3);
  auto sg = generators(p3);
  PauliOperator flipped = sg.gens[0];
  flipped.phase_exp = static_cast<std::uint8_t>((flipped.phase_exp + 2) & 3);
  StateVector psi = build_state(p3);
  StateVector out = apply_pauli(flipped, psi);
  double dev = 0;
  for (std::size_t b = 0; b < psi.amps.size(); ++b) dev += std::norm(out.amps[b] - psi.amps[b]);
  CHECK(std::abs(std::sqrt(dev) - 2.0) < 1e-10);
}

TEST_CASE("statevector: psi4a") {
  Psi4aResult res = check_psi4a();
  CHECK(std::abs(res.fidelity - 1.0) <= 1e-10);
  // exactly one labeled path matches; every other labeling stays below 1/2
  CHECK(res.second_best <= 0.5 + 1e-10);
  // the matching labeling is the path 3-1-2-4, and Alice = {1,2} passes
  CHECK(format_edge_list(res.graph) == "4;1-2,1-3,2-4");
  CHECK(permits_bipartite_eor(res.graph, Bipartition{0b0011}));

  // the GHZ state in place of the cluster stays bounded away from 1
  StateVector target = psi4a_state();
  const auto& pt = PermutationTable::for_n(4);
  Graph star = star_graph(4);
  double best = 0;
  for (int p = 0; p < pt.size(); ++p) {
    Graph h = Graph::from_code(4, pt.apply(p, star.code()));
    best = std::max(best, std::abs(inner(target, build_state(h))));
  }
  CHECK(best <= 0.5 + 1e-10);
}

TEST_CASE("statevector: dense product agreement for stabilizer pairs, n <= 5") {
  for (int n = 2; n <= 5; ++n) {
    const int dim = 1 << n;
    for (const auto& g : enumerate_connected(n)) {
      auto sg = generators(g);
      const auto& els = sg.elements();
      std::vector<DenseMatrix> dense;
      dense.reserve(els.size());
      for (const auto& s : els) dense.push_back(dense_matrix(s));
      double worst = 0;
      for (std::size_t a = 0; a < els.size(); ++a)
        for (std::size_t b = 0; b < els.size(); ++b) {
          DenseMatrix direct = dense_multiply(dense[a], dense[b], dim);
          DenseMatrix tracked = dense_matrix(multiply(els[a], els[b]));
          worst = std::max(worst, max_abs_diff(direct, tracked));
        }
      CHECK(worst < 1e-12);
    }
  }
}

TEST_CASE("statevector: amplitude dump") {
  std::string dump = dump_amplitudes(build_state(parse_graph("2;1-2")));
  CHECK(dump.find("00 0.5 0\n") == 0);
  CHECK(dump.find("11 -0.5 0\n") != std::string::npos);
}

TEST_CASE("statevector: size guards") {
  CHECK_THROWS_AS(apply_pauli(PauliOperator::identity(2), build_state(Graph::empty(3))),
                  std::invalid_argument);
}
