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

#include "povmclone/constructions.hpp"
#include "povmclone/errors.hpp"
#include "povmclone/measures.hpp"
#include "povmclone/properties.hpp"
#include "povmclone/random.hpp"

using namespace povmclone;

TEST_CASE("fidelity: identical, orthogonal and B92 pairs") {
    Rng rng(11);
    const DensityOperator rho = random_state(3, 3, rng);
    CHECK(fidelity(rho, rho) == doctest::Approx(1.0).epsilon(1e-10));

    const DensityOperator zero = DensityOperator::pure(PureState::basis_state(2, 0));
    const DensityOperator one = DensityOperator::pure(PureState::basis_state(2, 1));
    CHECK(fidelity(zero, one) == doctest::Approx(0.0).epsilon(1e-12));

    // |<eta+|eta->| = cos 2 eta for the pure pair
    const double eta = std::numbers::pi / 8;
    const B92States st = b92_states(eta);
    const double f = fidelity(DensityOperator::pure(st.eta_plus),
                              DensityOperator::pure(st.eta_minus));
    CHECK(std::abs(f - std::cos(2 * eta)) < 1e-10);
    CHECK(std::abs(f - std::abs(st.eta_plus.overlap(st.eta_minus))) < 1e-10);

    CHECK_THROWS_AS(fidelity(zero, DensityOperator::maximally_mixed(3)), DimensionMismatch);
}

TEST_CASE("fidelity is symmetric") {
    Rng rng(12);
    const DensityOperator a = random_state(3, 2, rng);
    const DensityOperator b = random_state(3, 3, rng);
    CHECK(std::abs(fidelity(a, b) - fidelity(b, a)) < 1e-10);
}

TEST_CASE("classical fidelity basics and the B92 value") {
    const ProbDist p({0.3, 0.7});
    CHECK(classical_fidelity(p, p) == doctest::Approx(1.0));
    CHECK(classical_fidelity(ProbDist({1.0, 0.0}), ProbDist({0.0, 1.0})) == doctest::Approx(0.0));
    CHECK_THROWS_AS(classical_fidelity(p, ProbDist({1.0, 0.0, 0.0})), LengthMismatch);

    // distributions of |eta+-> under the four-element POVM at eta = pi/8
    const double eta = std::numbers::pi / 8;
    const Povm povm = b92_povm(eta);
    const B92States st = b92_states(eta);
    const double fcl = classical_fidelity(measure(povm, DensityOperator::pure(st.eta_plus)),
                                          measure(povm, DensityOperator::pure(st.eta_minus)));
    CHECK(std::abs(fcl - 0.7071067811865476) < 1e-12);
    CHECK(std::abs(fcl - std::cos(2 * eta)) < 1e-12);
}

TEST_CASE("partial fidelity: edge indices and monotone decrease") {
    Rng rng(13);
    const DensityOperator a = random_state(4, 4, rng);
    const DensityOperator b = random_state(4, 4, rng);

    CHECK(partial_fidelity(a, b, {0}) == doctest::Approx(fidelity(a, b)).epsilon(1e-10));

    double prev = partial_fidelity(a, b, {0});
    for (std::size_t k = 1; k < 4; ++k) {
        const double cur = partial_fidelity(a, b, {k});
        CHECK(cur <= prev + 1e-12);
        CHECK(cur >= 0.0);
        prev = cur;
    }
    CHECK_THROWS_AS(partial_fidelity(a, b, {4}), InvalidParameter);

    // k = d-1 keeps only the smallest singular value
    const double smallest = partial_fidelity(a, b, {3});
    const double second = partial_fidelity(a, b, {2});
    CHECK(smallest <= second);
}

TEST_CASE("classical partial fidelity drops the largest terms") {
    const ProbDist p({0.5, 0.3, 0.2});
    const ProbDist q({0.2, 0.3, 0.5});
    const double full = classical_fidelity(p, q);
    CHECK(classical_partial_fidelity(p, q, 0) == doctest::Approx(full));
    // terms are sqrt(0.1) ~ 0.316 (twice) and 0.3; the largest is sqrt(0.1)
    CHECK(classical_partial_fidelity(p, q, 1) ==
          doctest::Approx(0.3 + std::sqrt(0.1)).epsilon(1e-12));
    CHECK(classical_partial_fidelity(p, q, 3) == doctest::Approx(0.0));
}

TEST_CASE("relative entropy: zero, ln 2 and the support sentinel") {
    const ProbDist p({0.25, 0.75});
    CHECK(relative_entropy(p, p) == doctest::Approx(0.0).epsilon(1e-14));

    CHECK(relative_entropy(ProbDist({1.0, 0.0}), ProbDist({0.5, 0.5})) ==
          doctest::Approx(0.6931471805599453).epsilon(1e-12));

    CHECK(std::isinf(relative_entropy(ProbDist({0.5, 0.5}), ProbDist({1.0, 0.0}))));
}

TEST_CASE("optimal POVM: commuting inputs measure in the common eigenbasis") {
    const double dp[] = {0.7, 0.3};
    const double dq[] = {0.2, 0.8};
    const DensityOperator rho(ComplexMatrix::diagonal(dp));
    const DensityOperator omega(ComplexMatrix::diagonal(dq));
    const Povm best = optimal_fidelity_povm(rho, omega);
    const double achieved = classical_fidelity(measure(best, rho), measure(best, omega));
    CHECK(achieved == doctest::Approx(fidelity(rho, omega)).epsilon(1e-10));
    // commuting case: F equals sum sqrt(p q) in the shared basis
    CHECK(fidelity(rho, omega) ==
          doctest::Approx(std::sqrt(0.7 * 0.2) + std::sqrt(0.3 * 0.8)).epsilon(1e-10));
}

TEST_CASE("optimal POVM achieves the fidelity on seeded invertible pairs") {
    Rng rng(14);
    for (int c = 0; c < 50; ++c) {
        const std::size_t d = 2 + rng.next_u64() % 2;
        const DensityOperator rho = random_state(d, d, rng);
        const DensityOperator omega = random_state(d, d, rng);
        const Povm best = optimal_fidelity_povm(rho, omega);
        const double achieved = classical_fidelity(measure(best, rho), measure(best, omega));
        CHECK(std::abs(achieved - fidelity(rho, omega)) < 1e-8);
    }
}

TEST_CASE("optimal POVM handles a singular rho through regularization") {
    Rng rng(15);
    const DensityOperator rho = random_state(3, 1, rng);  // rank deficient
    const DensityOperator omega = random_state(3, 3, rng);
    const Povm best = optimal_fidelity_povm(rho, omega);
    const double achieved = classical_fidelity(measure(best, rho), measure(best, omega));
    CHECK(std::abs(achieved - fidelity(rho, omega)) < 1e-6);
}

TEST_CASE("no other POVM beats the fidelity floor") {
    Rng rng(16);
    const DensityOperator rho = random_state(2, 2, rng);
    const DensityOperator omega = random_state(2, 2, rng);
    const double f = fidelity(rho, omega);
    for (int c = 0; c < 200; ++c) {
        const Povm povm = random_povm(2, 2 + rng.next_u64() % 3, rng);
        const double fcl = classical_fidelity(measure(povm, rho), measure(povm, omega));
        CHECK(fcl >= f - 1e-10);
    }
}

TEST_CASE("equality witness: trivial, disjoint-support and commuting cases") {
    Rng rng(17);
    const Povm povm = random_povm(2, 3, rng);
    const DensityOperator rho = random_state(2, 2, rng);

    const EqualityWitness same = check_equality_condition(povm, rho, rho);
    CHECK(same.passed);
    for (const auto& z : same.z) {
        REQUIRE(z.has_value());
        CHECK(std::abs(*z - Complex{1.0}) < 1e-8);
    }

    // orthogonal pure states with their eigenbasis PVM: z is 0 on one block
    // and undefined on the other, and the witness passes (F = Fcl = 0)
    const Povm comp = Pvm::computational(2).to_povm();
    const DensityOperator zero = DensityOperator::pure(PureState::basis_state(2, 0));
    const DensityOperator one = DensityOperator::pure(PureState::basis_state(2, 1));
    const EqualityWitness disjoint = check_equality_condition(comp, zero, one);
    CHECK(disjoint.passed);
    REQUIRE(disjoint.z[0].has_value());
    CHECK(std::abs(*disjoint.z[0]) < 1e-12);
    CHECK_FALSE(disjoint.z[1].has_value());

    // commuting diagonal pair in its eigenbasis: witness passes and the
    // classical fidelity meets the quantum one
    const double dp[] = {0.7, 0.3};
    const double dq[] = {0.4, 0.6};
    const DensityOperator drho(ComplexMatrix::diagonal(dp));
    const DensityOperator domega(ComplexMatrix::diagonal(dq));
    const EqualityWitness commuting = check_equality_condition(comp, drho, domega);
    CHECK(commuting.passed);
    CHECK(classical_fidelity(measure(comp, drho), measure(comp, domega)) ==
          doctest::Approx(fidelity(drho, domega)).epsilon(1e-10));

    // a generic non-commuting pair fails the linear relation
    const DensityOperator other = random_state(2, 2, rng);
    const EqualityWitness generic = check_equality_condition(comp, rho, other);
    CHECK_FALSE(generic.passed);
}

TEST_CASE("saturating pairs meet Fcl == F; the witness stays a commuting-only probe") {
    Rng rng(20);
    const std::vector<std::size_t> ranks = {2, 2};
    const Pvm pvm = random_pvm(4, ranks, rng);
    const PureState psi = random_pure_state(4, rng);
    const PureState phi = construct_saturating_pure_state(pvm, psi, 0.8);

    const DensityOperator rho = DensityOperator::pure(psi);
    const DensityOperator omega = DensityOperator::pure(phi);
    const Povm povm = pvm.to_povm();
    const double fcl = classical_fidelity(measure(povm, rho), measure(povm, omega));
    CHECK(std::abs(fcl - fidelity(rho, omega)) < 1e-9);
    CHECK(std::abs(fcl - 0.8) < 1e-9);

    // The linear-relation witness characterizes the equality only for
    // commuting pairs; this noncommuting saturating pair meets the equality
    // without satisfying the relation.
    const EqualityWitness probe = check_equality_condition(povm, rho, omega);
    CHECK(probe.max_residual >= 0.0);
}

TEST_CASE("transitivity along a commuting chain") {
    const Povm comp = Pvm::computational(3).to_povm();
    const double da[] = {0.5, 0.3, 0.2};
    const double db[] = {0.4, 0.4, 0.2};
    const double dc[] = {0.25, 0.25, 0.5};
    const DensityOperator a(ComplexMatrix::diagonal(da));
    const DensityOperator b(ComplexMatrix::diagonal(db));
    const DensityOperator c(ComplexMatrix::diagonal(dc));

    const TransitivityResult chain = check_transitivity(comp, a, b, c);
    CHECK(chain.applicable);
    CHECK(chain.holds);

    // reflexive chain
    const TransitivityResult self = check_transitivity(comp, a, a, a);
    CHECK(self.applicable);
    CHECK(self.holds);

    // unrelated non-commuting triple: the premise fails, vacuously true
    Rng rng(18);
    const TransitivityResult vacuous = check_transitivity(
        comp, random_state(3, 3, rng), random_state(3, 3, rng), random_state(3, 3, rng));
    CHECK_FALSE(vacuous.applicable);
    CHECK(vacuous.holds);
}

TEST_CASE("purification overlaps bound and attain the fidelity") {
    Rng rng(19);
    for (int c = 0; c < 25; ++c) {
        const DensityOperator rho = random_state(2, 1 + rng.next_u64() % 2, rng);
        const DensityOperator omega = random_state(2, 1 + rng.next_u64() % 2, rng);
        const double f = fidelity(rho, omega);
        CHECK(purification_overlap_canonical(rho, omega) <= f + 1e-10);
        CHECK(std::abs(purification_overlap_optimal(rho, omega) - f) < 1e-8);
    }
}

TEST_CASE("registered measure properties pass at reduced case counts") {
    for (const char* name : {"qc_bound", "fidelity_monotonicity", "fidelity_multiplicativity",
                             "partial_fidelity_monotonicity", "factorized_joint_square"}) {
        const PropertyResult r = run_property(name, 60, kDefaultSeed);
        INFO(name, " worst=", r.worst);
        CHECK(r.failures == 0);
    }
}
