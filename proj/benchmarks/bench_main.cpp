#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "sfcrel/placement.hpp"
#include "sfcrel/rng.hpp"
#include "sfcrel/simulate.hpp"
#include "sfcrel/structure.hpp"

using namespace sfcrel;

namespace {

struct Instance {
  std::vector<PlacementRequest> requests;
  std::vector<SubstrateNode> nodes;
};

Instance make_instance(int count, std::uint64_t seed) {
  Instance in;
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    in.requests.push_back(
        {"s" + std::to_string(i + 1), rng.uniform_int(20, 40), "web"});
  }
  for (int i = 0; i < 400; ++i) {
    in.nodes.push_back(SubstrateNode::make("n" + std::to_string(i + 1), 56, 0.999));
  }
  return in;
}

void BM_Place(benchmark::State& state, PlacementMethod method) {
  const auto in = make_instance(static_cast<int>(state.range(0)), 2024);
  for (auto _ : state) {
    benchmark::DoNotOptimize(place(method, in.requests, in.nodes));
  }
  state.SetComplexityN(state.range(0));
}

void BM_Exact(benchmark::State& s) { BM_Place(s, PlacementMethod::ExactILP); }
void BM_Mma(benchmark::State& s) { BM_Place(s, PlacementMethod::MMA); }
void BM_Mdm(benchmark::State& s) { BM_Place(s, PlacementMethod::MDM); }

void BM_Des(benchmark::State& state) {
  DesConfig cfg;
  cfg.setting = state.range(0) == 0 ? QueueSetting::MM1 : QueueSetting::MMM;
  cfg.stages.assign(5, 200.0);
  cfg.arrival_rate = 100.0;
  cfg.subchains = 3;
  cfg.arrivals = 100'000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(des_tandem(cfg));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(cfg.arrivals));
}

void BM_Enumerate(benchmark::State& state) {
  const int copies = static_cast<int>(state.range(0));
  const std::vector<double> p(5, 0.9);
  const std::vector<double> node{0.999};
  const auto s = make_pooled_stages(p, std::vector<int>(5, copies), node);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_structure_reliability(s));
  }
  state.counters["components"] = static_cast<double>(s.component_count());
}

}  // namespace

BENCHMARK(BM_Exact)->DenseRange(10, 60, 10)->Complexity();
BENCHMARK(BM_Mma)->DenseRange(10, 60, 10)->Complexity();
BENCHMARK(BM_Mdm)->DenseRange(10, 60, 10)->Complexity();
BENCHMARK(BM_Des)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Enumerate)->DenseRange(1, 4, 1)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
