// Compares the serial reference path against the OpenMP path for the two
// data-parallel workloads: strata evaluation and the verification sweeps.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "knspec/report.hpp"
#include "knspec/spectra.hpp"
#include "knspec/verify.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double time_ms(const std::function<void()>& f, int reps) {
  // warm-up run populates the cyclotomic cache
  f();
  auto t0 = Clock::now();
  for (int i = 0; i < reps; ++i) f();
  auto t1 = Clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

void row(const std::string& name, double serial, double parallel) {
  std::cout << std::left << std::setw(34) << name << std::right << std::fixed
            << std::setprecision(1) << std::setw(10) << serial << " ms"
            << std::setw(10) << parallel << " ms" << std::setw(9)
            << std::setprecision(2) << serial / parallel << "x\n";
}

} // namespace

int main() {
  std::cout << std::left << std::setw(34) << "workload" << std::right
            << std::setw(13) << "serial" << std::setw(13) << "parallel"
            << std::setw(10) << "speedup\n";

  for (int n : {2, 3}) {
    knspec::Config cfg;
    cfg.n = n;
    auto group = knspec::build_group(cfg);
    double s = time_ms([&] { knspec::full_report(group, n, 1); }, n == 2 ? 5 : 2);
    double p = time_ms([&] { knspec::full_report(group, n, 0); }, n == 2 ? 5 : 2);
    row("full_report n=" + std::to_string(n) + " (generic)", s, p);

    std::ostringstream sink;
    double vs = time_ms(
        [&] { knspec::run_verify(group, n, 3, {"trace", "normal", "assoc"}, 1, sink); },
        1);
    double vp = time_ms(
        [&] { knspec::run_verify(group, n, 3, {"trace", "normal", "assoc"}, 0, sink); },
        1);
    row("verify sweeps n=" + std::to_string(n), vs, vp);
  }
  return 0;
}
