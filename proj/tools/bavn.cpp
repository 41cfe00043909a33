// Command-line front end: enumerate connected classes and LC orbits, classify
// two-party distributions, emit and verify proof certificates, export graphs.
//
// Exit codes: 0 success, 1 no proof / verification failure, 2 usage or input
// errors.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bavn/certificate_io.hpp"
#include "bavn/classify.hpp"
#include "bavn/graph_io.hpp"
#include "bavn/report.hpp"

using namespace bavn;

namespace {

int run_enumerate(int n, const std::string& format) {
  auto orbits = lc_orbits(n);
  auto reps = enumerate_connected(n);
  ReportFormat f = parse_report_format(format);
  if (f == ReportFormat::text)
    std::cout << "connected classes n=" << n << ": " << reps.size() << '\n';
  std::cout << orbit_report_render(n, orbits, f);
  return 0;
}

int run_classify(int n, const std::string& format, const std::string& certs_dir) {
  auto report = classify(n);
  std::cout << report_render(report, parse_report_format(format));
  if (!certs_dir.empty()) {
    for (const auto& row : report.rows)
      for (const auto& rec : row.distributions) {
        std::string path = certs_dir + "/" + rec.cert_ref + ".cert";
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot write " + path);
        out << render_certificate(rec.certificate);
        std::cerr << "wrote " << path << '\n';
      }
  }
  return 0;
}

int run_prove(const std::string& graph_text, const std::string& part_text,
              const std::string& out_path) {
  Graph g = parse_graph(graph_text);
  Bipartition part = parse_partition(part_text, g.n);
  BavnCertificate cert;
  try {
    cert = bavn_certificate(g, part);
  } catch (const no_proof_error& e) {
    std::cerr << "no proof: " << e.what() << " (reason: " << no_proof_reason_text(e.reason)
              << ")\n";
    return 1;
  }
  std::string text = render_certificate(cert);
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + out_path);
    out << text;
    std::cerr << "wrote " << out_path << '\n';
  }
  return 0;
}

int run_verify(const std::string& path, bool quiet) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  BavnCertificate cert = parse_certificate(buf.str());
  VerifyReport rep = verify_certificate(cert);
  if (!quiet) {
    std::cout << "certificate: " << format_edge_list(cert.graph) << "  "
              << format_partition(cert.part) << '\n'
              << rep.summary();
  }
  std::cout << (rep.ok() ? "VALID" : "INVALID") << '\n';
  return rep.ok() ? 0 : 1;
}

int run_export(const std::string& graph_text, bool dot, bool graph6,
               const std::string& part_text) {
  Graph g = parse_graph(graph_text);
  std::uint8_t part_a = 0;
  if (!part_text.empty()) part_a = parse_partition(part_text, g.n).a_mask;
  if (graph6) std::cout << to_graph6(g) << '\n';
  if (dot || !graph6) std::cout << to_dot(g, part_a);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-party all-versus-nothing proof finder for graph states"};
  app.require_subcommand(1);

  int n = 0;
  std::string format = "text";
  std::string certs_dir, graph_text, part_text, out_path, cert_path;
  bool want_dot = false, want_graph6 = false, quiet = false;

  auto* cmd_enum = app.add_subcommand("enumerate", "connected graph classes and LC orbits");
  cmd_enum->add_option("n", n, "number of qubits (2..7)")->required();
  cmd_enum->add_option("--format", format, "text|json|dot");

  auto* cmd_classify = app.add_subcommand("classify", "find all two-party distributions");
  cmd_classify->add_option("n", n, "number of qubits (2..7)")->required();
  cmd_classify->add_option("--format", format, "text|json|dot");
  cmd_classify->add_option("--certs-dir", certs_dir, "write one certificate file per distribution");

  auto* cmd_prove = app.add_subcommand("prove", "emit a proof certificate for (graph, partition)");
  cmd_prove->add_option("graph", graph_text, "\"n;u-v,...\" or graph6")->required();
  cmd_prove->add_option("partition", part_text, "\"A=i,j,...\"")->required();
  cmd_prove->add_option("-o,--out", out_path, "output file (default: stdout)");

  auto* cmd_verify = app.add_subcommand("verify", "re-check a certificate file from scratch");
  cmd_verify->add_option("file", cert_path, "certificate file")->required();
  cmd_verify->add_flag("--quiet", quiet, "print only VALID/INVALID");

  auto* cmd_export = app.add_subcommand("export", "convert a graph to DOT or graph6");
  cmd_export->add_option("graph", graph_text, "\"n;u-v,...\" or graph6")->required();
  cmd_export->add_flag("--dot", want_dot, "emit DOT (default)");
  cmd_export->add_flag("--graph6", want_graph6, "emit graph6");
  cmd_export->add_option("--partition", part_text, "color the DOT output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (cmd_enum->parsed()) return run_enumerate(n, format);
    if (cmd_classify->parsed()) return run_classify(n, format, certs_dir);
    if (cmd_prove->parsed()) return run_prove(graph_text, part_text, out_path);
    if (cmd_verify->parsed()) return run_verify(cert_path, quiet);
    if (cmd_export->parsed()) return run_export(graph_text, want_dot, want_graph6, part_text);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
