// Parallel kernels against their serial references.
#include <benchmark/benchmark.h>

#include "opvg/atfree.hpp"
#include "opvg/io.hpp"
#include "opvg/oracle.hpp"

using namespace opvg;

namespace {

Graph path_of_triangles(int k) {
  Graph g(2 * k + 1);
  for (int i = 0; i + 1 < g.order(); ++i) g.add_edge(i, i + 1);
  for (int i = 0; i + 2 < g.order(); i += 2) g.add_edge(i, i + 2);
  return g;
}

Graph sun3() {
  return parse_graph("0 1\n1 2\n2 0\n0 3\n1 3\n1 4\n2 4\n2 5\n0 5\n", GraphFormat::EdgeList);
}

void BM_Enumerate(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_outerplanar(static_cast<int>(st.range(0))));
}
void BM_EnumerateSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_outerplanar_serial(static_cast<int>(st.range(0))));
}

void BM_AsteroidalTriple(benchmark::State& st) {
  auto g = path_of_triangles(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(find_asteroidal_triple(g));
}
void BM_AsteroidalTripleSerial(benchmark::State& st) {
  auto g = path_of_triangles(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(find_asteroidal_triple_serial(g));
}

void BM_B0Oracle(benchmark::State& st) {
  auto g = sun3();
  for (auto _ : st) benchmark::DoNotOptimize(brute_force_b0(g));
}
void BM_B0OracleSerial(benchmark::State& st) {
  auto g = sun3();
  for (auto _ : st) benchmark::DoNotOptimize(brute_force_b0_serial(g));
}

}  // namespace

BENCHMARK(BM_Enumerate)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateSerial)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AsteroidalTriple)->Arg(20)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AsteroidalTripleSerial)->Arg(20)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_B0Oracle)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_B0OracleSerial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
