// Wall-clock comparison of the OpenMP kernels against their serial reference
// implementations. Each pair is checked for identical output before timing is
// reported, so a speedup here is never bought with a wrong answer.
//
//   ./bavn_bench [repeats]

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bavn/classify.hpp"
#include "bavn/graph_io.hpp"
#include "bavn/report.hpp"

using namespace bavn;
using Clock = std::chrono::steady_clock;

namespace {

template <typename F>
double time_best_of(int repeats, F&& f) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    auto t0 = Clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(Clock::now() - t0).count());
  }
  return best;
}

void row(const std::string& name, double serial, double parallel, bool equal) {
  std::cout << std::left << std::setw(34) << name << std::right << std::fixed
            << std::setprecision(4) << std::setw(10) << serial << " s" << std::setw(10)
            << parallel << " s" << std::setw(9) << std::setprecision(2) << serial / parallel
            << "x   " << (equal ? "outputs match" : "OUTPUT MISMATCH") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
  if (repeats < 1) repeats = 1;

#ifdef _OPENMP
  std::cout << "threads: " << omp_get_max_threads() << ", repeats: " << repeats << "\n\n";
#else
  std::cout << "built without OpenMP; both columns run serial code\n\n";
#endif
  std::cout << std::left << std::setw(34) << "kernel" << std::right << std::setw(12) << "serial"
            << std::setw(12) << "parallel" << std::setw(10) << "speedup" << '\n';

  bool all_equal = true;

  for (int n : {6, 7}) {
    auto serial_out = enumerate_connected_serial(n);
    auto parallel_out = enumerate_connected(n);
    bool equal = serial_out == parallel_out;
    all_equal = all_equal && equal;
    double ts = time_best_of(repeats, [&] { enumerate_connected_serial(n); });
    double tp = time_best_of(repeats, [&] { enumerate_connected(n); });
    row("enumerate_connected n=" + std::to_string(n), ts, tp, equal);
  }

  {
    bool equal = report_render(classify(6, false), ReportFormat::json) ==
                 report_render(classify(6, true), ReportFormat::json);
    all_equal = all_equal && equal;
    double ts = time_best_of(repeats, [&] { classify(6, false); });
    double tp = time_best_of(repeats, [&] { classify(6, true); });
    row("classify n=6", ts, tp, equal);
  }

  {
    Graph g = canonical_form(parse_graph("6;1-2,2-3,3-4,4-5,5-6"));
    auto serial_out = find_parity_proofs(g, 5, false);
    auto parallel_out = find_parity_proofs(g, 5, true);
    bool equal = serial_out.size() == parallel_out.size();
    for (std::size_t i = 0; equal && i < serial_out.size(); ++i)
      equal = serial_out[i].equations == parallel_out[i].equations;
    all_equal = all_equal && equal;
    double ts = time_best_of(repeats, [&] { find_parity_proofs(g, 5, false); });
    double tp = time_best_of(repeats, [&] { find_parity_proofs(g, 5, true); });
    row("parity proof scan n=6 m<=5", ts, tp, equal);
  }

  return all_equal ? 0 : 1;
}
