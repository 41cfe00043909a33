#include <doctest.h>

#include <algorithm>
#include <set>

#include "bavn/certificate_io.hpp"
#include "bavn/enumerate.hpp"
#include "bavn/graph_io.hpp"
#include "bavn/proofs.hpp"
#include "test_util.hpp"

using namespace bavn;
using namespace bavn::test;

namespace {

std::multiset<std::string> rendered_set(const ParityProofCertificate& cert) {
  std::multiset<std::string> out;
  for (const auto& eq : cert.equations) out.insert(render(eq));
  return out;
}

}  // namespace

TEST_CASE("proofs: triple contradiction on the path") {
  auto cert = triple_contradiction(path_graph(3));
  REQUIRE(cert.equations.size() == 4);
  std::multiset<std::string> want = {"+Y1\xc2\xb7Y2\xc2\xb7Z3", "+Z1\xc2\xb7X2\xc2\xb7Z3",
                                     "+Z1\xc2\xb7Y2\xc2\xb7Y3", "-Y1\xc2\xb7X2\xc2\xb7Y3"};
  CHECK(rendered_set(cert) == want);

  // observables: Y,Z on qubit 1; X,Y on qubit 2; Y,Z on qubit 3
  auto obs = cert.observables();
  std::vector<std::pair<int, Letter>> want_obs = {
      {0, Letter::Y}, {0, Letter::Z}, {1, Letter::X},
      {1, Letter::Y}, {2, Letter::Y}, {2, Letter::Z}};
  CHECK(obs == want_obs);

  CHECK(verify_parity(cert));
  CHECK_FALSE(brute_force_lhv(cert));
}

TEST_CASE("proofs: triple contradiction on the triangle") {
  auto cert = triple_contradiction(triangle_graph());
  REQUIRE(cert.equations.size() == 4);
  std::multiset<std::string> want = {"+X1\xc2\xb7Z2\xc2\xb7Z3", "+Z1\xc2\xb7X2\xc2\xb7Z3",
                                     "+Z1\xc2\xb7Z2\xc2\xb7X3", "-X1\xc2\xb7X2\xc2\xb7X3"};
  CHECK(rendered_set(cert) == want);

  auto obs = cert.observables();
  std::vector<std::pair<int, Letter>> want_obs = {
      {0, Letter::X}, {0, Letter::Z}, {1, Letter::X},
      {1, Letter::Z}, {2, Letter::X}, {2, Letter::Z}};
  CHECK(obs == want_obs);

  CHECK(verify_parity(cert));
  CHECK_FALSE(brute_force_lhv(cert));
}

TEST_CASE("proofs: the contradiction needs three vertices") {
  CHECK_THROWS_AS(triple_contradiction(parse_graph("2;1-2")), no_certificate_error);
}

TEST_CASE("proofs: parity verification rejects damaged certificates") {
  auto cert = triple_contradiction(path_graph(3));

  auto missing = cert;
  missing.equations.pop_back();
  CHECK_FALSE(verify_parity(missing));  // odd occurrences

  auto flipped = cert;
  flipped.equations[3].phase_exp = static_cast<std::uint8_t>((flipped.equations[3].phase_exp + 2) & 3);
  CHECK_FALSE(verify_parity(flipped));  // chain product becomes -identity
  CHECK(brute_force_lhv(flipped));      // and values now exist

  CHECK_FALSE(verify_parity(ParityProofCertificate{}));
}

TEST_CASE("proofs: brute force and parity agree on random stabilizer subsets") {
  // every verify_parity-passing subset must be LHV-unsatisfiable, and
  // every failing subset of even-occurrence equations must be satisfiable
  std::mt19937 rng(41);
  for (const auto& g : enumerate_connected(4)) {
    auto sg = generators(g);
    const auto& els = sg.elements();
    for (int it = 0; it < 50; ++it) {
      ParityProofCertificate cert;
      int size = 2 + int(rng() % 4);
      std::set<int> picked;
      while (int(picked.size()) < size) picked.insert(1 + int(rng() % (els.size() - 1)));
      for (int idx : picked) cert.equations.push_back(els[idx]);
      if (verify_parity(cert)) CHECK_FALSE(brute_force_lhv(cert));
    }
  }
}

TEST_CASE("proofs: subset search") {
  // path 1-2-3: the four triple-contradiction equations appear among the subsets
  auto proofs = find_parity_proofs(path_graph(3), 4);
  CHECK(!proofs.empty());
  auto triple = rendered_set(triple_contradiction(path_graph(3)));
  bool found = false;
  for (const auto& cert : proofs) found = found || rendered_set(cert) == triple;
  CHECK(found);
  for (const auto& cert : proofs) {
    CHECK(cert.equations.size() >= 4);  // nothing smaller can satisfy the parity
    CHECK(verify_parity(cert));
    CHECK_FALSE(brute_force_lhv(cert));
  }

  // a 2-qubit stabilizer admits a value assignment
  CHECK(find_parity_proofs(parse_graph("2;1-2"), 6).empty());

  // 5-vertex graph: nonempty, and serial agrees with parallel
  auto p5 = find_parity_proofs(path_graph(5), 4, true);
  CHECK(!p5.empty());
  auto p5s = find_parity_proofs(path_graph(5), 4, false);
  REQUIRE(p5.size() == p5s.size());
  for (std::size_t i = 0; i < p5.size(); ++i)
    CHECK(rendered_set(p5[i]) == rendered_set(p5s[i]));
  for (const auto& cert : p5) {
    CHECK(verify_parity(cert));
    CHECK_FALSE(brute_force_lhv(cert));
  }

  CHECK_THROWS_AS(find_parity_proofs(path_graph(7), 4), std::invalid_argument);
  CHECK_THROWS_AS(find_parity_proofs(path_graph(5), 7), std::invalid_argument);
}

TEST_CASE("proofs: every found subset survives both checks, exhaustive n <= 5") {
  for (int n = 3; n <= 5; ++n) {
    for (const auto& g : enumerate_connected(n)) {
      auto proofs = find_parity_proofs(g, 4);
      CHECK(!proofs.empty());  // every connected graph on 3+ vertices owns a triple
      bool sound = true;
      for (const auto& cert : proofs)
        sound = sound && verify_parity(cert) && !brute_force_lhv(cert);
      CHECK(sound);
    }
  }
  // sampled at n=6: one representative per LC class, every 7th certificate
  for (const auto& orbit : lc_orbits(6)) {
    auto proofs = find_parity_proofs(orbit.representative, 4);
    CHECK(!proofs.empty());
    bool sound = true;
    for (std::size_t i = 0; i < proofs.size(); i += 7)
      sound = sound && verify_parity(proofs[i]) && !brute_force_lhv(proofs[i]);
    CHECK(sound);
  }
}

TEST_CASE("proofs: bavn certificates") {
  Graph path4 = path_graph(4);
  auto cert = bavn_certificate(path4, Bipartition{0b0101});
  CHECK(cert.witnesses.size() == 12);
  CHECK(cert.contradiction.equations.size() == 4);
  // every observable of the contradiction is covered by a witness
  for (auto [q, l] : cert.contradiction.observables()) {
    bool covered = false;
    for (const auto& w : cert.witnesses) covered = covered || (w.qubit == q && w.letter == l);
    CHECK(covered);
  }

  try {
    bavn_certificate(star_graph(4), Bipartition{0b0011});
    FAIL("expected no_proof_error");
  } catch (const no_proof_error& e) {
    CHECK(e.reason == NoProofReason::rank_deficient);
  }
  try {
    bavn_certificate(path_graph(5), Bipartition{0b00101});
    FAIL("expected no_proof_error");
  } catch (const no_proof_error& e) {
    CHECK(e.reason == NoProofReason::unbalanced);
  }
  try {
    bavn_certificate(parse_graph("2;1-2"), Bipartition{0b01});
    FAIL("expected no_proof_error");
  } catch (const no_proof_error& e) {
    CHECK(e.reason == NoProofReason::too_few_qubits);
  }

  // two disjoint edges pass the checker but admit no contradiction
  Graph disjoint = parse_graph("4;1-2,3-4");
  CHECK(permits_bipartite_eor(disjoint, Bipartition{0b0101}));
  CHECK_THROWS_AS(bavn_certificate(disjoint, Bipartition{0b0101}), no_certificate_error);
}

TEST_CASE("proofs: certificate files round trip") {
  auto cert = bavn_certificate(path_graph(4), Bipartition{0b0101});
  std::string text = render_certificate(cert);
  BavnCertificate parsed = parse_certificate(text);

  CHECK(parsed.graph == cert.graph);
  CHECK(parsed.part == cert.part);
  REQUIRE(parsed.contradiction.equations.size() == cert.contradiction.equations.size());
  for (std::size_t i = 0; i < cert.contradiction.equations.size(); ++i)
    CHECK(parsed.contradiction.equations[i] == cert.contradiction.equations[i]);
  REQUIRE(parsed.witnesses.size() == cert.witnesses.size());
  for (std::size_t i = 0; i < cert.witnesses.size(); ++i) {
    CHECK(parsed.witnesses[i].qubit == cert.witnesses[i].qubit);
    CHECK(parsed.witnesses[i].letter == cert.witnesses[i].letter);
    CHECK(parsed.witnesses[i].witness == cert.witnesses[i].witness);
  }
  CHECK(render_certificate(parsed) == text);  // byte identical

  CHECK(verify_certificate(cert).ok());
  CHECK(verify_certificate(parsed).ok());

  CHECK_THROWS_AS(parse_certificate("not a certificate"), std::invalid_argument);
}

TEST_CASE("proofs: verification catches tampering") {
  auto cert = bavn_certificate(path_graph(4), Bipartition{0b0101});

  auto flipped = cert;
  flipped.contradiction.equations[0].phase_exp =
      static_cast<std::uint8_t>((flipped.contradiction.equations[0].phase_exp + 2) & 3);
  auto rep = verify_certificate(flipped);
  CHECK_FALSE(rep.ok());
  CHECK_FALSE(rep.structure_ok);  // no longer a stabilizing operator
  CHECK_FALSE(rep.parity_ok);

  auto missing = cert;
  missing.contradiction.equations.pop_back();
  CHECK_FALSE(verify_certificate(missing).ok());

  auto bad_witness = cert;
  bad_witness.witnesses[0].witness =
      multiply(bad_witness.witnesses[0].witness, bad_witness.witnesses[1].witness);
  CHECK_FALSE(verify_certificate(bad_witness).ok());
}
