#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>

#include <CLI11.hpp>

#include "trotterlab/battery.hpp"
#include "trotterlab/evolution.hpp"
#include "trotterlab/rng.hpp"
#include "trotterlab/trotter.hpp"

namespace {

double best_of(int repeats, const std::function<void()>& body) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    body();
    auto t1 = std::chrono::steady_clock::now();
    best = std::min(best,
                    std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

void print_row(const char* name, double serial_ms, double parallel_ms,
               double max_diff) {
  std::printf("%-18s %12.2f %12.2f %9.2fx %12.3g\n", name, serial_ms,
              parallel_ms, serial_ms / parallel_ms, max_diff);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Timing comparison: serial reference vs OpenMP kernels"};
  int repeats = 3;
  long dim = 8;
  int cases = 12;
  long grid = 192;
  app.add_option("--repeats", repeats, "timed repetitions, best one kept")
      ->check(CLI::PositiveNumber);
  app.add_option("--dim", dim, "matrix dimension for the operator kernels");
  app.add_option("--cases", cases, "battery cases");
  app.add_option("--grid", grid, "triangular grid density for the sweep");
  CLI11_PARSE(app, argc, argv);

  using namespace trotterlab;
  std::printf("%-18s %12s %12s %10s %12s\n", "kernel", "serial ms",
              "parallel ms", "speedup", "max |diff|");

  {
    SplitMix64 rng(4242);
    GeneratorPair pair = random_pair(dim, rng);
    std::vector<long> ns;
    for (long n = 2; n <= 4096; n *= 2) ns.push_back(n);
    ErrorCurve serial, parallel;
    double t_serial = best_of(repeats, [&] {
      serial = trotter_error_curve_serial(pair.a, pair.b, 1.0, ns,
                                          Ordering::ba, NormKind::p2);
    });
    double t_parallel = best_of(repeats, [&] {
      parallel = trotter_error_curve(pair.a, pair.b, 1.0, ns, Ordering::ba,
                                     NormKind::p2, true);
    });
    double diff = 0.0;
    for (std::size_t i = 0; i < serial.errors.size(); ++i)
      diff = std::max(diff, std::abs(serial.errors[i] - parallel.errors[i]));
    print_row("trotter_curve", t_serial, t_parallel, diff);
  }

  {
    ScalarPotential q = ScalarPotential::weierstrass(0.5);
    double serial = 0.0, parallel = 0.0;
    double t_serial = best_of(
        repeats, [&] { serial = sup_riemann_error_serial(q, 64, grid); });
    double t_parallel =
        best_of(repeats, [&] { parallel = sup_riemann_error(q, 64, grid, true); });
    print_row("riemann_sweep", t_serial, t_parallel,
              std::abs(serial - parallel));
  }

  {
    std::vector<BoundCheckReport> serial, parallel;
    double t_serial = best_of(
        repeats, [&] { serial = inequality_battery_serial(cases, dim, 4242); });
    double t_parallel = best_of(
        repeats, [&] { parallel = inequality_battery(cases, dim, 4242, true); });
    double diff = 0.0;
    if (serial.size() != parallel.size()) diff = 1e300;
    for (std::size_t i = 0; diff < 1e300 && i < serial.size(); ++i)
      diff = std::max(diff, std::abs(serial[i].lhs - parallel[i].lhs) +
                                std::abs(serial[i].rhs - parallel[i].rhs));
    print_row("battery", t_serial, t_parallel, diff);
  }
  return 0;
}
