#include <benchmark/benchmark.h>

#include "switchchain/canonical_path.hpp"
#include "switchchain/chain.hpp"
#include "switchchain/encoding.hpp"
#include "switchchain/enumeration.hpp"

using namespace swc;

static void BM_Enumerate(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0)), d = static_cast<int>(st.range(1));
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_omega(n, d).size());
}
BENCHMARK(BM_Enumerate)->Args({5, 2})->Args({6, 1})->Args({6, 2})->Unit(benchmark::kMillisecond);

static void BM_ChainStep(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0)), d = static_cast<int>(st.range(1));
  Rng rng(1);
  Digraph g = circulant(n, d);
  for (auto _ : st) {
    g = step(g, rng);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_ChainStep)->Args({8, 2})->Args({32, 4})->Args({64, 8});

static void BM_Spectrum(benchmark::State& st) {
  const StateSpace s = enumerate_omega(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
  const TransitionMatrix p(s, build_metagraph(s));
  for (auto _ : st) benchmark::DoNotOptimize(spectrum(p).lambda1());
}
BENCHMARK(BM_Spectrum)->Args({5, 2})->Args({6, 1})->Unit(benchmark::kMillisecond);

static void BM_CanonicalPath(benchmark::State& st) {
  const StateSpace s = enumerate_omega(5, 2);
  const Digraph &g = s.states.front(), &g2 = s.states.back();
  const Pairing psi = pairing_at(sym_diff(g, g2), 0);
  const PathOptions opt{st.range(0) != 0};
  for (auto _ : st) benchmark::DoNotOptimize(build_canonical_path(g, g2, psi, opt).length());
}
BENCHMARK(BM_CanonicalPath)->Arg(0)->Arg(1);

static void BM_Repair(benchmark::State& st) {
  const StateSpace s = enumerate_omega(5, 2);
  const Digraph &g = s.states.front(), &g2 = s.states.back();
  const PathTrace tr = build_canonical_path(g, g2, pairing_at(sym_diff(g, g2), 0));
  const Digraph& z = tr.states[tr.states.size() / 2];
  const Encoding l = encoding_of(g, g2, z);
  for (auto _ : st) benchmark::DoNotOptimize(repair(l, z).switches.size());
}
BENCHMARK(BM_Repair);
BENCHMARK_MAIN();
