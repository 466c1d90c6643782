// Times the serial reference implementation of the oracle kernels against
// the OpenMP path and checks that both produce identical results. --quick
// shrinks the problem sizes so the comparison stays cheap in CI.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sl2aut/oracle.hpp"

using namespace sl2aut;

namespace {

double best_of(int runs, const std::function<void()>& f) {
  double best = 1e300;
  for (int i = 0; i < runs; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

void report(const char* name, std::int64_t p, double ts, double tp) {
  std::printf("%-16s p=%-2lld  serial %8.4fs  parallel %8.4fs  speedup %.2fx\n",
              name, static_cast<long long>(p), ts, tp, ts / tp);
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
  int runs = quick ? 1 : 3;

#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not available; parallel falls back to serial\n");
#endif

  {
    std::int64_t p = quick ? 13 : 31;
    ModCtx ctx(p);
    std::map<std::int64_t, std::vector<Code>> serial, parallel;
    double ts = best_of(runs, [&] {
      serial = enumerate_finite_order(ctx, Domain::Pure, 2 * p + 2,
                                      Exec::Serial);
    });
    double tp = best_of(runs, [&] {
      parallel = enumerate_finite_order(ctx, Domain::Pure, 2 * p + 2,
                                        Exec::Parallel);
    });
    if (serial != parallel) {
      std::printf("FAIL: enumerate_finite_order serial != parallel\n");
      return 1;
    }
    report("enumerate", p, ts, tp);
  }

  {
    std::int64_t p = quick ? 7 : 13;
    ModCtx ctx(p);
    for (Domain d : {Domain::Pure, Domain::Twisted}) {
      auto codes = domain_matrices(ctx, d);
      OrbitPartition serial, parallel;
      double ts = best_of(
          runs, [&] { serial = orbit_partition(ctx, d, codes, Exec::Serial); });
      double tp = best_of(runs, [&] {
        parallel = orbit_partition(ctx, d, codes, Exec::Parallel);
      });
      if (serial.orbits != parallel.orbits) {
        std::printf("FAIL: orbit_partition serial != parallel\n");
        return 1;
      }
      report(d == Domain::Pure ? "orbits/pure" : "orbits/twisted", p, ts, tp);
    }
  }

  {
    std::int64_t p = quick ? 5 : 7;
    TraceCriterionReport serial, parallel;
    double ts =
        best_of(runs, [&] { serial = verify_trace_criterion(p, Exec::Serial); });
    double tp = best_of(
        runs, [&] { parallel = verify_trace_criterion(p, Exec::Parallel); });
    if (!serial.ok || !parallel.ok ||
        serial.pairs_checked != parallel.pairs_checked) {
      std::printf("FAIL: verify_trace_criterion serial != parallel\n");
      return 1;
    }
    report("trace-criterion", p, ts, tp);
  }

  std::printf("all serial/parallel results identical\n");
  return 0;
}
