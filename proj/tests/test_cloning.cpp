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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "povmclone/cloning.hpp"
#include "povmclone/constructions.hpp"
#include "povmclone/errors.hpp"
#include "povmclone/properties.hpp"
#include "povmclone/random.hpp"

using namespace povmclone;

namespace {

ComplexMatrix swap_unitary() {
    ComplexMatrix s(4, 4);
    s(0, 0) = 1.0;
    s(1, 2) = 1.0;
    s(2, 1) = 1.0;
    s(3, 3) = 1.0;
    return s;
}

}  // namespace

TEST_CASE("swap channel with a preloaded probe clones one repeated input") {
    Rng rng(21);
    const DensityOperator rho = random_state(2, 2, rng);
    CloningScenario scenario{Pvm::computational(2).to_povm(),
                             KrausChannel::unitary(swap_unitary()), rho, {rho}};
    const CloningReport report = run_scenario(scenario);
    REQUIRE(report.inputs.size() == 1);
    const InputRecord& rec = report.inputs.front();
    for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 2; ++k)
            CHECK(std::abs(rec.t(j, k) - rec.p[j] * rec.p[k]) < 1e-12);
    CHECK(report.merit_hb < 1e-12);
}

TEST_CASE("identity channel leaves the probe wire deterministic") {
    Rng rng(22);
    const DensityOperator rho = random_state(2, 2, rng);
    const DensityOperator probe = DensityOperator::pure(PureState::basis_state(2, 0));
    CloningScenario scenario{Pvm::computational(2).to_povm(), KrausChannel::identity(4), probe,
                             {rho}};
    // probe |0><0| under the sharp measurement: r = [1, 0], t = p x [1, 0]
    CloningScenario with_input = scenario;
    with_input.probe_init = probe;
    const CloningReport report = run_scenario(with_input);
    const InputRecord& rec = report.inputs.front();
    CHECK(rec.r[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rec.r[1] == doctest::Approx(0.0).epsilon(1e-12));
    for (std::size_t j = 0; j < 2; ++j) {
        CHECK(std::abs(rec.t(j, 0) - rec.p[j]) < 1e-12);
        CHECK(std::abs(rec.t(j, 1)) < 1e-12);
    }
}

TEST_CASE("constructed cloner scenario reaches zero merit") {
    const CloningReport report = verify_perfect_cloning(std::numbers::pi / 8);
    CHECK(report.merit_hb <= 1e-9);
}

TEST_CASE("broadcasting residual: factorized, correlated and self-consistent joints") {
    const ProbDist p({0.6, 0.4});
    const JointDist factorized(2, 2, {0.36, 0.24, 0.24, 0.16});
    CHECK(check_broadcasting(factorized, p) < 1e-15);

    // diagonal joint with the right marginals broadcasts but does not clone
    const JointDist diagonal(2, 2, {0.6, 0.0, 0.0, 0.4});
    CHECK(check_broadcasting(diagonal, p) < 1e-15);
    CHECK(relative_entropy(diagonal, factorized) > 0.1);

    CHECK_THROWS_AS(check_broadcasting(diagonal, ProbDist({1.0, 0.0, 0.0})), LengthMismatch);
}

TEST_CASE("no-cloning verdicts for B92, identical and tolerant pairs") {
    const double eta = std::numbers::pi / 8;
    const Povm povm = b92_povm(eta);
    const B92States st = b92_states(eta);
    const DensityOperator plus = DensityOperator::pure(st.eta_plus);
    const DensityOperator minus = DensityOperator::pure(st.eta_minus);

    const NoCloningCheck b92 = check_no_cloning_condition(povm, plus, minus);
    CHECK(b92.verdict == CloningVerdict::intolerant);
    CHECK(b92.fidelity_value == doctest::Approx(0.70710678).epsilon(1e-6));
    const double fcl2 = b92.classical_fidelity_value * b92.classical_fidelity_value;
    CHECK(fcl2 == doctest::Approx(0.5).epsilon(1e-9));
    CHECK_FALSE(b92.degenerate);

    const NoCloningCheck same = check_no_cloning_condition(povm, plus, plus);
    CHECK(same.verdict == CloningVerdict::inconclusive);
    CHECK(same.degenerate);

    // the tolerant pair of the cloning example: |<eta|phi>| <= Fcl^2, so the
    // condition cannot fire, and a perfect cloner indeed exists
    const CloneExampleParams params = solve_clone_angles(eta);
    const Povm sharp = Pvm::computational(2).to_povm();
    const NoCloningCheck tolerant = check_no_cloning_condition(
        sharp, DensityOperator::pure(clone_state_eta(eta)),
        DensityOperator::pure(clone_state_phi(params)));
    CHECK(tolerant.verdict == CloningVerdict::inconclusive);
    CHECK(tolerant.fidelity_value <=
          tolerant.classical_fidelity_value * tolerant.classical_fidelity_value + 1e-10);
}

TEST_CASE("partial no-cloning check: k = 0 reduction and the B92 report") {
    const double eta = std::numbers::pi / 8;
    const Povm povm = b92_povm(eta);
    const B92States st = b92_states(eta);
    const DensityOperator plus = DensityOperator::pure(st.eta_plus);
    const DensityOperator minus = DensityOperator::pure(st.eta_minus);

    const PartialNoCloningCheck base = check_no_cloning_partial(povm, plus, minus, 0);
    CHECK(base.kappa == 0);
    const NoCloningCheck full = check_no_cloning_condition(povm, plus, minus);
    CHECK(base.classical_partial ==
          doctest::Approx(full.classical_fidelity_value).epsilon(1e-12));
    CHECK(base.quantum_partial == doctest::Approx(full.fidelity_value).epsilon(1e-12));
    CHECK(base.predicate_holds);  // same strict inequality as the full check

    // k = 1, n = 4 gives kappa = 7, beyond the qubit dimension: report only
    const PartialNoCloningCheck k1 = check_no_cloning_partial(povm, plus, minus, 1);
    CHECK(k1.kappa == 7);
    CHECK(k1.quantum_partial == 0.0);
    CHECK(k1.exploratory);

    CHECK_THROWS_AS(check_no_cloning_partial(povm, plus, minus, 4), InvalidParameter);
}

TEST_CASE("partial no-cloning sweep is report-only") {
    Rng rng(23);
    const Povm povm = random_povm(2, 3, rng);
    const DensityOperator a = random_state(2, 2, rng);
    const DensityOperator b = random_state(2, 2, rng);
    for (std::size_t k = 0; k < povm.size(); ++k) {
        const PartialNoCloningCheck check = check_no_cloning_partial(povm, a, b, k);
        CHECK(check.exploratory);
        CHECK(check.classical_partial >= 0.0);
        CHECK(check.quantum_partial >= 0.0);
    }
}

TEST_CASE("two_qubit_unitary is unitary for random angles") {
    Rng rng(24);
    for (int c = 0; c < 20; ++c) {
        std::array<double, 15> angles;
        for (double& a : angles) a = (2.0 * rng.uniform() - 1.0) * std::numbers::pi;
        CHECK(unitarity_defect(two_qubit_unitary(angles)) < 1e-12);
    }
}

TEST_CASE("cloner search succeeds on identical states with a small budget") {
    Rng rng(25);
    const DensityOperator rho = DensityOperator::pure(random_pure_state(2, rng));
    SearchBudget budget{40, 150, 1e-10};
    const SearchResult result =
        search_perfect_cloner(Pvm::computational(2).to_povm(), rho, rho, budget, 0xB92);
    CHECK(result.merit_hb < 1e-6);
}

TEST_CASE("cloner search rejects non-qubit input") {
    Rng rng(26);
    const DensityOperator big = random_state(3, 3, rng);
    CHECK_THROWS_AS(
        search_perfect_cloner(Pvm::computational(3).to_povm(), big, big, SearchBudget{}, 1),
        InvalidParameter);
}

TEST_CASE("registered cloning properties pass at reduced case counts") {
    for (const char* name :
         {"contrapositive", "proof_chain", "broadcast_consistency", "merit_permutation"}) {
        const PropertyResult r = run_property(name, 40, kDefaultSeed);
        INFO(name, " worst=", r.worst);
        CHECK(r.failures == 0);
    }
}
