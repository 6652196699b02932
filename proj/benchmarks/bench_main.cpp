#include <bhc/constructor.hpp>
#include <bhc/fault_model.hpp>
#include <bhc/generators.hpp>
#include <bhc/oracles.hpp>
#include <benchmark/benchmark.h>

using namespace bhc;

namespace {

// A fixed pool of instances meeting the preconditions.
std::vector<FaultSet> pool(int n, Generator g, int count, std::size_t size) {
    const auto& t = topology_for(n);
    std::vector<FaultSet> out;
    for (std::uint64_t id = 0; out.size() < size && id < size * 50; ++id) {
        auto rng = instance_rng(99, id);
        FaultSet f(t, generate_faults(g, t, count, rng));
        if (check_preconditions(t, f).ok()) out.push_back(std::move(f));
    }
    return out;
}

void BM_BuildDirect(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(Topology::build_direct(n));
}
BENCHMARK(BM_BuildDirect)->DenseRange(2, 5);

void BM_F4Scan(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto& t = topology_for(n);
    const auto faults = pool(n, Generator::uniform, 5 * n - 7, 16);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(find_f4_cycles(t, faults[i++ % faults.size()]));
}
BENCHMARK(BM_F4Scan)->DenseRange(2, 4);

void BM_OracleCycle(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto& t = topology_for(n);
    const auto faults = pool(n, Generator::uniform, 5 * n - 7, 16);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(ham_cycle(t, faults[i++ % faults.size()]));
}
BENCHMARK(BM_OracleCycle)->DenseRange(2, 3)->Unit(benchmark::kMicrosecond);

void BM_Construct(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto g = static_cast<Generator>(state.range(1));
    const auto& t = topology_for(n);
    const auto faults = pool(n, g, 5 * n - 7, 16);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(construct(t, faults[i++ % faults.size()]));
    state.SetLabel(to_string(g));
}
BENCHMARK(BM_Construct)
    ->ArgsProduct({{3, 4}, {static_cast<long>(Generator::uniform), static_cast<long>(Generator::star),
                            static_cast<long>(Generator::subcube_heavy)}})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
