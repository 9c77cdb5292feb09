// Serial reference against the OpenMP kernel on whole suites.

#include <benchmark/benchmark.h>

#include "kgconf/harness.hpp"

namespace {

using namespace kgconf;

void run(benchmark::State& state, const char* suite, Execution exec, DiffMode mode) {
  SuiteParams p;
  p.nmax = 3;
  p.random_fields = 20;
  p.exec = exec;
  const DiffConfig cfg = mode == DiffMode::exact ? DiffConfig::exact() : DiffConfig::stencil();
  for (auto _ : state) {
    ResidualReport r = run_suite(suite, p, cfg);
    benchmark::DoNotOptimize(r);
  }
}

void oscillator_x(benchmark::State& s) {
  run(s, "oscillator-x", s.range(0) ? Execution::parallel : Execution::serial,
      s.range(1) ? DiffMode::stencil : DiffMode::exact);
}
void coulomb_z(benchmark::State& s) {
  run(s, "coulomb-z", s.range(0) ? Execution::parallel : Execution::serial,
      s.range(1) ? DiffMode::stencil : DiffMode::exact);
}
void operator_identities(benchmark::State& s) {
  run(s, "operator-identities", s.range(0) ? Execution::parallel : Execution::serial,
      s.range(1) ? DiffMode::stencil : DiffMode::exact);
}

}  // namespace

BENCHMARK(oscillator_x)->ArgsProduct({{0, 1}, {0, 1}})->ArgNames({"parallel", "stencil"})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(coulomb_z)->ArgsProduct({{0, 1}, {0, 1}})->ArgNames({"parallel", "stencil"})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(operator_identities)->ArgsProduct({{0, 1}, {0, 1}})
    ->ArgNames({"parallel", "stencil"})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
