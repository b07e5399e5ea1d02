// Copyright 2026 The hepgrover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hepgrover/encoding.hpp"
#include "hepgrover/grover.hpp"
#include "hepgrover/noise.hpp"
#include "hepgrover/sampling.hpp"
#include "hepgrover/state_vector.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace hepgrover;

StateVector spread_state(std::size_t n) {
    return uniform_superposition(n);
}

void BM_Hadamard(benchmark::State &st) {
    const auto n = static_cast<std::size_t>(st.range(0));
    auto s = spread_state(n);
    const Gate g = Gate::h(n / 2);
    for (auto _ : st) {
        s.apply(g);
        benchmark::DoNotOptimize(s.amplitudes().data());
    }
    st.SetItemsProcessed(st.iterations() * std::int64_t(s.size()));
}
BENCHMARK(BM_Hadamard)->DenseRange(10, 22, 4);

void BM_Toffoli(benchmark::State &st) {
    const auto n = static_cast<std::size_t>(st.range(0));
    auto s = spread_state(n);
    const Gate g = Gate::ccx(0, n - 1, n / 2);
    for (auto _ : st) {
        s.apply(g);
        benchmark::DoNotOptimize(s.amplitudes().data());
    }
    st.SetItemsProcessed(st.iterations() * std::int64_t(s.size()));
}
BENCHMARK(BM_Toffoli)->DenseRange(10, 22, 4);

void BM_MultiControlledZ(benchmark::State &st) {
    const auto n = static_cast<std::size_t>(st.range(0));
    auto s = spread_state(n);
    std::vector<Qubit> controls(n - 1);
    std::iota(controls.begin(), controls.end(), Qubit{0});
    const Gate g = Gate::mcz(controls, n - 1);
    for (auto _ : st) {
        s.apply(g);
        benchmark::DoNotOptimize(s.amplitudes().data());
    }
    st.SetItemsProcessed(st.iterations() * std::int64_t(s.size()));
}
BENCHMARK(BM_MultiControlledZ)->DenseRange(10, 22, 4);

void BM_GroverOptimal(benchmark::State &st) {
    const auto n = static_cast<std::size_t>(st.range(0));
    const GroverProblem problem{n, {1}, optimal_iterations(n, 1)};
    const Circuit c = build_grover(problem);
    for (auto _ : st) {
        auto s = apply_circuit(StateVector(n), c);
        benchmark::DoNotOptimize(s[1]);
    }
    st.counters["gates"] = double(c.size());
}
BENCHMARK(BM_GroverOptimal)->DenseRange(4, 14, 2)->Unit(benchmark::kMicrosecond);

void BM_Sample(benchmark::State &st) {
    const auto s = spread_state(10);
    for (auto _ : st) {
        benchmark::DoNotOptimize(sample(s, kDefaultShots, 1));
    }
    st.SetItemsProcessed(st.iterations() * std::int64_t(kDefaultShots));
}
BENCHMARK(BM_Sample)->Unit(benchmark::kMicrosecond);

void BM_NoisySchemeTwo(benchmark::State &st) {
    std::vector<LeptonRecord> recs;
    for (std::size_t i = 0; i < 8; ++i) {
        recs.push_back({std::int64_t(i), 1, i == 5 ? 3 : 1, 30.0});
    }
    const auto plan = plan_group(group_records(recs, 8).front(), Scheme::BinaryIndex).front();
    const auto profile = *builtin_profile(st.range(0) == 0 ? "vigo-like" : "melbourne-like");
    for (auto _ : st) {
        benchmark::DoNotOptimize(
            noisy_run(plan.circuit, plan.marked, profile, kDefaultShots, 3));
    }
    st.SetItemsProcessed(st.iterations() * std::int64_t(kDefaultShots));
}
BENCHMARK(BM_NoisySchemeTwo)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
