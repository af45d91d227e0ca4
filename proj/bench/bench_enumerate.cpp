// Compares the serial enumeration kernel against the OpenMP-parallel one
// on representative workloads and prints a speedup table.

#include <chrono>
#include <cstdio>
#include <string>

#include "dstar/enumerate.hpp"
#include "dstar/turan.hpp"

using namespace dstar;

namespace {

double run_ms(const std::function<EnumStats()>& fn, EnumStats* out) {
  auto t0 = std::chrono::steady_clock::now();
  *out = fn();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void bench(const char* name, const EnumConstraints& c, int workers) {
  EnumStats serial_stats, par_stats;
  double serial = run_ms([&] { return enumerate_graphs(c); }, &serial_stats);
  double par = run_ms([&] { return enumerate_parallel(c, workers); }, &par_stats);
  bool same = serial_stats == par_stats;
  std::printf("%-34s emitted=%9llu  serial %8.1f ms  parallel(%d) %8.1f ms  x%.2f  %s\n", name,
              static_cast<unsigned long long>(serial_stats.emitted), serial, workers, par,
              serial / par, same ? "identical stats" : "STATS MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  int workers = argc > 1 ? std::atoi(argv[1]) : default_workers();

  EnumConstraints all8;
  all8.n = 8;
  bench("n=8 unconstrained", all8, workers);

  EnumConstraints planar9;
  planar9.n = 9;
  planar9.require_planar = true;
  bench("n=9 planar", planar9, workers);

  EnumConstraints corpus9;
  corpus9.n = 9;
  corpus9.require_planar = true;
  corpus9.forbid = PatternSpec::of(3, 3);
  bench("n=9 planar S33-free", corpus9, workers);

  EnumConstraints level10;
  level10.n = 10;
  level10.require_planar = true;
  level10.forbid = PatternSpec::of(3, 3);
  level10.min_edges = 20;
  level10.max_edges = 20;
  bench("n=10 planar S33-free, 20 edges", level10, workers);

  auto t0 = std::chrono::steady_clock::now();
  TuranResult r = compute_planar_turan(10, PatternSpec::of(3, 3), workers);
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%-34s value=%d  parallel(%d) %8.1f ms\n", "ex_P(10, S_{3,3}) full sweep", r.value,
              workers, ms);
  return 0;
}
