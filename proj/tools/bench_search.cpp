// Times the naive reference engine against the run-length orbit engine (serial
// and parallel) on induced colourings, and cross-checks their answers.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <optional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "aplab/construction.hpp"
#include "aplab/cyclic.hpp"

using namespace aplab;

namespace {

double time_ms(const std::function<void()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  long prime = 2003;
  int depth = 8;
  long a = 14, b = 14;
  for (int i = 1; i + 1 < argc; i += 2) {
    if (!std::strcmp(argv[i], "--prime")) prime = std::atol(argv[i + 1]);
    else if (!std::strcmp(argv[i], "--depth")) depth = std::atoi(argv[i + 1]);
    else if (!std::strcmp(argv[i], "--a")) a = std::atol(argv[i + 1]);
    else if (!std::strcmp(argv[i], "--b")) b = std::atol(argv[i + 1]);
    else {
      std::fprintf(stderr, "usage: bench_search [--prime P] [--depth D] [--a A] [--b B]\n");
      return 2;
    }
  }
  const PatternSpec spec{a, b};

  std::printf("inducing ap1414 colouring: p=%ld depth=%d\n", prime, depth);
  CyclicColouring colouring;
  const double induce_ms =
      time_ms([&] { colouring = induce(ConstructionId::Ap1414, prime, depth, Colour::Blue); });
  std::printf("  induce: %.1f ms\n", induce_ms);

  std::optional<APWitness> w_naive, w_orbit;
  SearchCertificate cert;
  const double naive_ms = time_ms([&] { w_naive = find_pattern_naive(colouring, spec); });
  const double orbit_ms = time_ms([&] { w_orbit = find_pattern_orbit(colouring, spec); });
  const double par_ms = time_ms([&] { cert = verify_no_pattern(colouring, spec); });

  const bool agree =
      w_naive.has_value() == w_orbit.has_value() &&
      (!w_naive || (w_naive->start == w_orbit->start && w_naive->d == w_orbit->d)) &&
      w_naive.has_value() != cert.verified &&
      (cert.verified || (cert.counterexample->start == w_naive->start &&
                         cert.counterexample->d == w_naive->d));

  std::printf("pattern (%ld,%ld) on p=%ld:\n", a, b, prime);
  std::printf("  %-22s %10.1f ms\n", "naive (serial)", naive_ms);
  std::printf("  %-22s %10.1f ms\n", "orbit (serial)", orbit_ms);
  std::printf("  %-22s %10.1f ms  (pairs=%lld)\n", "orbit (parallel)", par_ms,
              cert.pairs_scanned);
  if (w_naive)
    std::printf("  witness: start=%ld d=%ld\n", w_naive->start, w_naive->d);
  else
    std::printf("  witness: none\n");
  std::printf("  engines agree: %s\n", agree ? "yes" : "NO");
  return agree ? 0 : 1;
}
