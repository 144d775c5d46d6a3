#include <benchmark/benchmark.h>

#include <random>

#include "hyp5/bitmatrix.hpp"
#include "hyp5/codes17.hpp"
#include "hyp5/coloring.hpp"
#include "hyp5/f5.hpp"
#include "hyp5/f5_fixtures.hpp"
#include "hyp5/f5graph.hpp"
#include "hyp5/goodsets.hpp"
#include "hyp5/long_graph.hpp"
#include "hyp5/toddcoxeter.hpp"

namespace {

using namespace hyp5;

const LongGraphBundle& long_bundle() {
  static LongGraphBundle b = build_long_graph();
  return b;
}

const F5GraphBundle& f5_bundle() {
  static F5GraphBundle b = build_f5_graph();
  return b;
}

BitMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng() & 1);
  return m;
}

void BM_rref_256x512(benchmark::State& state) {
  BitMatrix m = random_matrix(256, 512, 0xBE7C4);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m).rank);
}
BENCHMARK(BM_rref_256x512);

void BM_min_distance_code17(benchmark::State& state) {
  const QrCodeTables& t = qr_tables();
  for (auto _ : state) benchmark::DoNotOptimize(min_distance(t.A));
}
BENCHMARK(BM_min_distance_code17);

void BM_todd_coxeter_170(benchmark::State& state) {
  Presentation p = Presentation::coxeter(CoxeterDiagram::path({5, 3, 3, 3}));
  std::vector<std::vector<int>> sub;
  for (const char* w : {"ac", "ae", "decd", "bacbab"}) sub.push_back(parse_word(w, 5));
  for (auto _ : state) benchmark::DoNotOptimize(todd_coxeter(p, sub).cosets);
}
BENCHMARK(BM_todd_coxeter_170);

void BM_long_graph_build(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_long_graph().graph.n);
}
BENCHMARK(BM_long_graph_build)->Unit(benchmark::kMillisecond);

void BM_good_set_census(benchmark::State& state) {
  const LongGraphBundle& b = long_bundle();
  for (auto _ : state)
    benchmark::DoNotOptimize(count_good_sets(b.graph, b.psi, int(state.range(0))));
}
BENCHMARK(BM_good_set_census)->Arg(1)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_sample_good_sets_100(benchmark::State& state) {
  const LongGraphBundle& b = long_bundle();
  for (auto _ : state)
    benchmark::DoNotOptimize(sample_good_sets(b.graph, b.psi, 100, 0x5eed).size());
}
BENCHMARK(BM_sample_good_sets_100)->Unit(benchmark::kMillisecond);

void BM_f5_orbit_125(benchmark::State& state) {
  const F5Fixtures& fx = f5_fixtures();
  for (auto _ : state) {
    F5Closure l({fx.L1, fx.L2}, 500);
    benchmark::DoNotOptimize(l.orbit(F5Vec{0, 0, 0, 0, 1}).size());
  }
}
BENCHMARK(BM_f5_orbit_125);

void BM_clique_census(benchmark::State& state) {
  const F5GraphBundle& b = f5_bundle();
  for (auto _ : state) benchmark::DoNotOptimize(five_clique_census(b).total);
}
BENCHMARK(BM_clique_census)->Unit(benchmark::kMillisecond);

void BM_validate_qr(benchmark::State& state) {
  const LongGraphBundle& b = long_bundle();
  auto I = sample_good_sets(b.graph, b.psi, 1, 0x5eed).front();
  Coloring proto = qr_coloring(b.graph, b.psi, I, 1);
  for (auto _ : state) {
    Coloring c = proto;
    benchmark::DoNotOptimize(validate_coloring(b.graph, c).valid);
  }
}
BENCHMARK(BM_validate_qr);

void BM_first_betti_qr(benchmark::State& state) {
  const LongGraphBundle& b = long_bundle();
  auto I = sample_good_sets(b.graph, b.psi, 1, 0x5eed).front();
  Coloring c = qr_coloring(b.graph, b.psi, I, 1);
  validate_coloring(b.graph, c);
  for (auto _ : state) benchmark::DoNotOptimize(first_betti(b.graph, c));
}
BENCHMARK(BM_first_betti_qr);

}  // namespace

BENCHMARK_MAIN();
