// Copyright 2026 The povmclone Authors
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

#include <benchmark/benchmark.h>

#include <numbers>

#include "povmclone/cloning.hpp"
#include "povmclone/constructions.hpp"
#include "povmclone/linalg.hpp"
#include "povmclone/measures.hpp"
#include "povmclone/random.hpp"

using namespace povmclone;

namespace {

ComplexMatrix seeded_hermitian(std::size_t d) {
    Rng rng(1234);
    ComplexMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i, j) = rng.complex_gaussian();
    return hermitian_part(m);
}

void BM_HermitianEig(benchmark::State& state) {
    const ComplexMatrix m = seeded_hermitian(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(hermitian_eig(m));
}
BENCHMARK(BM_HermitianEig)->Arg(4)->Arg(8)->Arg(16);

void BM_Fidelity(benchmark::State& state) {
    const std::size_t d = static_cast<std::size_t>(state.range(0));
    Rng rng(99);
    const DensityOperator rho = random_state(d, d, rng);
    const DensityOperator omega = random_state(d, d, rng);
    for (auto _ : state) benchmark::DoNotOptimize(fidelity(rho, omega));
}
BENCHMARK(BM_Fidelity)->Arg(2)->Arg(4)->Arg(8);

void BM_RunScenario(benchmark::State& state) {
    const double eta = std::numbers::pi / 8;
    const CloneExampleParams params = solve_clone_angles(eta);
    const CloningScenario scenario{
        Pvm::computational(2).to_povm(),
        KrausChannel::unitary(clone_unitary_computational(params)),
        DensityOperator::pure(clone_state_eta(eta)),
        {DensityOperator::pure(clone_state_eta(eta)),
         DensityOperator::pure(clone_state_phi(params))}};
    for (auto _ : state) benchmark::DoNotOptimize(run_scenario(scenario));
}
BENCHMARK(BM_RunScenario);

void BM_SaturatingPureState(benchmark::State& state) {
    Rng rng(55);
    const std::vector<std::size_t> ranks = {2, 2};
    const Pvm pvm = random_pvm(4, ranks, rng);
    const PureState psi = random_pure_state(4, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(construct_saturating_pure_state(pvm, psi, 0.9));
}
BENCHMARK(BM_SaturatingPureState);

void BM_SearchObjectiveUnitary(benchmark::State& state) {
    std::array<double, 15> angles{};
    for (std::size_t i = 0; i < angles.size(); ++i) angles[i] = 0.1 * static_cast<double>(i);
    for (auto _ : state) benchmark::DoNotOptimize(two_qubit_unitary(angles));
}
BENCHMARK(BM_SearchObjectiveUnitary);

}  // namespace

BENCHMARK_MAIN();
