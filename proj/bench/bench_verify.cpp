// Serial reference loop vs the OpenMP loop on the heavier checks.
//
//   ./build/bench/bench_verify --benchmark_filter=Theorem

#include <benchmark/benchmark.h>

#include "rademacher/verify.hpp"

namespace {

using namespace rademacher;

VerifyOptions options(bool parallel, int threads) {
  VerifyOptions o;
  o.parallel = parallel;
  o.threads = threads;
  o.trials = 500;
  o.log_pairs = 200;
  return o;
}

// args: p, q, threads (0 = serial reference)
template <class Check>
void run(benchmark::State& state, Check check) {
  const TriangleGroup group(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const int threads = static_cast<int>(state.range(2));
  const VerifyOptions o = options(threads > 0, threads);
  std::size_t checks = 0;
  for (auto _ : state) {
    const CheckResult r = check(group, o);
    if (!r.passed()) state.SkipWithError(r.name.c_str());
    checks += r.checks;
    benchmark::DoNotOptimize(r.failures);
  }
  state.counters["checks/s"] = benchmark::Counter(static_cast<double>(checks), benchmark::Counter::kIsRate);
}

void Theorem(benchmark::State& state) {
  run(state, [](const TriangleGroup& g, const VerifyOptions& o) { return check_theorem(g, 3, o); });
}
void Conjugacy(benchmark::State& state) {
  run(state, [](const TriangleGroup& g, const VerifyOptions& o) { return check_conjugacy(g, o); });
}
void LogDefinition(benchmark::State& state) {
  run(state, [](const TriangleGroup& g, const VerifyOptions& o) { return check_log_definition(g, o); });
}
void RoundTrip(benchmark::State& state) {
  run(state, [](const TriangleGroup& g, const VerifyOptions& o) { return check_roundtrip(g, 4, o); });
}

void SignOf(benchmark::State& state) {
  const TriangleGroup group(4, 5);
  const Word w = parse_word("S^3 U^2 S U S^2 U^4 S U^3");
  const GroupMatrix m = word_to_matrix(w, group);
  for (auto _ : state) benchmark::DoNotOptimize(trace_sign(m));
}

void Args(benchmark::internal::Benchmark* b) {
  for (auto [p, q] : {std::pair{2, 3}, {3, 5}, {4, 5}})
    for (int threads : {0, 1, 2, 4}) b->Args({p, q, threads});
  b->ArgNames({"p", "q", "threads"})->Unit(benchmark::kMillisecond)->UseRealTime();
}

}  // namespace

BENCHMARK(Theorem)->Apply(Args);
BENCHMARK(Conjugacy)->Apply(Args);
BENCHMARK(LogDefinition)->Apply(Args);
BENCHMARK(RoundTrip)->Apply(Args);
BENCHMARK(SignOf);

BENCHMARK_MAIN();
