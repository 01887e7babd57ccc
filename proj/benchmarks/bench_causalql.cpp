#include <benchmark/benchmark.h>

#include <string>

#include "causalql/closure.hpp"
#include "causalql/lattice.hpp"
#include "causalql/logic.hpp"
#include "causalql/net.hpp"
#include "causalql/poset.hpp"

using namespace causalql;

namespace {

// `chains` independent chains c -> t -> c -> ..., each with `events` events.
// Cuts pick one element per chain, so their number grows as (2*events+1)^chains.
Poset parallel_chains(int chains, int events) {
  NetDescription d;
  for (int k = 0; k < chains; ++k) {
    const std::string tag = "k" + std::to_string(k) + "_";
    for (int i = 0; i <= events; ++i) d.conditions.push_back(tag + "c" + std::to_string(i));
    for (int i = 0; i < events; ++i) {
      const std::string t = tag + "t" + std::to_string(i);
      d.events.push_back(t);
      d.arcs.push_back({tag + "c" + std::to_string(i), t});
      d.arcs.push_back({t, tag + "c" + std::to_string(i + 1)});
    }
  }
  return derive_poset(validate_net(d));
}

// The fork/join example: p, q -> e -> r, s, repeated `stages` times.
Poset fork_join(int stages) {
  NetDescription d;
  d.conditions = {"a0", "b0"};
  for (int i = 0; i < stages; ++i) {
    const auto n = std::to_string(i + 1);
    const auto e = "e" + std::to_string(i);
    d.conditions.push_back("a" + n);
    d.conditions.push_back("b" + n);
    d.events.push_back(e);
    d.arcs.push_back({"a" + std::to_string(i), e});
    d.arcs.push_back({"b" + std::to_string(i), e});
    d.arcs.push_back({e, "a" + n});
    d.arcs.push_back({e, "b" + n});
  }
  return derive_poset(validate_net(d));
}

void BM_EnumerateCuts(benchmark::State& state) {
  const Poset p = parallel_chains(static_cast<int>(state.range(0)), 3);
  std::size_t cuts = 0;
  for (auto _ : state) {
    auto c = enumerate_cuts(p);
    cuts = c.size();
    benchmark::DoNotOptimize(c);
  }
  state.counters["elements"] = static_cast<double>(p.size());
  state.counters["cuts"] = static_cast<double>(cuts);
}
BENCHMARK(BM_EnumerateCuts)->DenseRange(2, 5);

void BM_ClosureSweep(benchmark::State& state) {
  const Poset p = fork_join(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(closures_coincide(p));
  state.counters["elements"] = static_cast<double>(p.size());
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << p.size()));
}
BENCHMARK(BM_ClosureSweep)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_BuildLattice(benchmark::State& state) {
  const Poset p = parallel_chains(static_cast<int>(state.range(0)), 2);
  std::size_t size = 0;
  for (auto _ : state) {
    auto l = build_lattice(p);
    size = l.size();
    benchmark::DoNotOptimize(l);
  }
  state.counters["elements"] = static_cast<double>(p.size());
  state.counters["lattice"] = static_cast<double>(size);
}
BENCHMARK(BM_BuildLattice)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);

void BM_Orthomodular(benchmark::State& state) {
  const Lattice l = build_lattice(parallel_chains(static_cast<int>(state.range(0)), 2));
  for (auto _ : state) benchmark::DoNotOptimize(check_orthomodular(l));
  state.counters["lattice"] = static_cast<double>(l.size());
}
BENCHMARK(BM_Orthomodular)->DenseRange(1, 4);

void BM_SatisfactionLaws(benchmark::State& state) {
  const Lattice l = build_lattice(fork_join(1));
  LawCheckOptions opts;
  opts.max_depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_satisfaction_laws(l, opts));
}
BENCHMARK(BM_SatisfactionLaws)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
