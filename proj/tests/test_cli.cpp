#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
  std::string out_file = "cli_test_output.tmp";
  std::string cmd = std::string(BAVN_CLI_PATH) + " " + args + " > " + out_file + " 2>&1";
  int status = std::system(cmd.c_str());
  std::ifstream in(out_file);
  std::stringstream buf;
  buf << in.rdbuf();
  std::remove(out_file.c_str());
  int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return {code, buf.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

}  // namespace

TEST_CASE("cli: enumerate") {
  auto res = run_cli("enumerate 4");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("connected classes n=4: 6") != std::string::npos);
  CHECK(res.output.find("total 2") != std::string::npos);

  CHECK(run_cli("enumerate 4 --format json").exit_code == 0);
  CHECK(run_cli("enumerate 9").exit_code == 2);
}

TEST_CASE("cli: classify") {
  auto res = run_cli("classify 5");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("distinct_distributions 0") != std::string::npos);

  auto res4 = run_cli("classify 4");
  CHECK(res4.exit_code == 0);
  CHECK(res4.output.find("distinct_distributions 1") != std::string::npos);
}

TEST_CASE("cli: prove and verify round trip") {
  auto res = run_cli("prove \"4;1-2,2-3,3-4\" \"A=1,3\" -o cli_test.cert");
  CHECK(res.exit_code == 0);
  std::string cert = slurp("cli_test.cert");
  CHECK(cert.find("bavn certificate v1") == 0);

  auto ver = run_cli("verify cli_test.cert");
  CHECK(ver.exit_code == 0);
  CHECK(ver.output.find("VALID") != std::string::npos);

  // flip the first sign in the equations block
  std::size_t eq = cert.find("\n+");
  REQUIRE(eq != std::string::npos);
  std::string tampered = cert;
  tampered[eq + 1] = '-';
  spit("cli_test_tampered.cert", tampered);
  auto bad = run_cli("verify cli_test_tampered.cert --quiet");
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("INVALID") != std::string::npos);

  std::remove("cli_test.cert");
  std::remove("cli_test_tampered.cert");
}

TEST_CASE("cli: prove rejects non-passing distributions") {
  auto res = run_cli("prove \"4;1-2,1-3,1-4\" \"A=1,2\"");
  CHECK(res.exit_code == 1);
  CHECK(res.output.find("rank-deficient") != std::string::npos);

  auto odd = run_cli("prove \"5;1-2,2-3,3-4,4-5\" \"A=1,2\"");
  CHECK(odd.exit_code == 1);
  CHECK(odd.output.find("unbalanced") != std::string::npos);
}

TEST_CASE("cli: classify writes certificate files") {
  auto res = run_cli("classify 4 --certs-dir .");
  CHECK(res.exit_code == 0);
  std::string cert = slurp("n4-c1-d0.cert");
  CHECK(cert.find("bavn certificate v1") == 0);
  spit("n4-c1-d0.cert", cert);  // unchanged; just confirm it verifies as written
  CHECK(run_cli("verify n4-c1-d0.cert --quiet").exit_code == 0);
  std::remove("n4-c1-d0.cert");
}

TEST_CASE("cli: export") {
  auto g6 = run_cli("export \"4;1-2,2-3,3-4\" --graph6");
  CHECK(g6.exit_code == 0);
  CHECK(g6.output.find("Ch") != std::string::npos);

  auto dot = run_cli("export Ch --dot");
  CHECK(dot.exit_code == 0);
  CHECK(dot.output.find("1 -- 2;") != std::string::npos);
}

TEST_CASE("cli: usage errors") {
  CHECK(run_cli("prove \"4;1-9\" \"A=1,2\"").exit_code == 2);
  CHECK(run_cli("prove \"4;1-2,2-3,3-4\" \"A=9\"").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
}
