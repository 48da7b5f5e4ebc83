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
#include "povmclone/linalg.hpp"
#include "povmclone/qtypes.hpp"
#include "povmclone/random.hpp"

using namespace povmclone;

TEST_CASE("type constructors enforce the physical invariants") {
    CHECK_THROWS_AS(PureState({Complex{0.5}, Complex{0.5}}), NotNormalized);

    CHECK_THROWS_AS((DensityOperator(ComplexMatrix::identity(2))), NotNormalized);

    const double indefinite[] = {1.5, -0.5};
    CHECK_THROWS_AS(DensityOperator(ComplexMatrix::diagonal(indefinite)), NotPsd);

    // POVM elements must sum to the identity
    ComplexMatrix half = ComplexMatrix::identity(2);
    half *= Complex{0.5};
    CHECK_THROWS_AS(Povm({half}), NotNormalized);
    CHECK_NOTHROW(Povm({half, half}));

    // Pvm additionally needs projectors
    CHECK_THROWS_AS(Pvm({half, half}), InvalidParameter);
    CHECK_NOTHROW(Pvm::computational(3));

    // Kraus operators must be trace preserving
    CHECK_THROWS_AS(KrausChannel({half}), NotNormalized);
    CHECK_NOTHROW(KrausChannel::identity(2));

    CHECK_THROWS_AS(ProbDist({0.5, 0.4}), NotNormalized);
    CHECK_THROWS_AS(ProbDist({1.5, -0.5}), InvalidParameter);
    // tiny negative round-off is clamped
    const ProbDist clamped({1.0, -1e-12});
    CHECK(clamped[1] == 0.0);
}

TEST_CASE("measure on sharp and B92 measurements") {
    const Povm comp = Pvm::computational(2).to_povm();
    const ProbDist p = measure(comp, DensityOperator::pure(PureState::basis_state(2, 0)));
    CHECK(p[0] == doctest::Approx(1.0));
    CHECK(p[1] == doctest::Approx(0.0));

    // B92 POVM on |eta+> at eta = pi/8: {1/2, 0, cos^2(2 eta)/2, sin^2(2 eta)/2}
    const double eta = std::numbers::pi / 8;
    const Povm b92 = b92_povm(eta);
    const B92States st = b92_states(eta);
    const ProbDist q = measure(b92, DensityOperator::pure(st.eta_plus));
    CHECK(std::abs(q[0] - 0.5) < 1e-12);
    CHECK(std::abs(q[1] - 0.0) < 1e-12);
    CHECK(std::abs(q[2] - 0.25) < 1e-12);
    CHECK(std::abs(q[3] - 0.25) < 1e-12);
}

TEST_CASE("measure of the maximally mixed state gives trace/d") {
    Rng rng(111);
    const Povm povm = random_povm(3, 4, rng);
    const ProbDist p = measure(povm, DensityOperator::maximally_mixed(3));
    for (std::size_t m = 0; m < povm.size(); ++m)
        CHECK(p[m] == doctest::Approx(povm.element(m).trace().real() / 3.0).epsilon(1e-10));
}

TEST_CASE("measure rejects mismatched dimensions") {
    const Povm comp = Pvm::computational(2).to_povm();
    CHECK_THROWS_AS(measure(comp, DensityOperator::maximally_mixed(3)), DimensionMismatch);
}

TEST_CASE("apply_channel identity, unitary and random channels") {
    Rng rng(222);
    const DensityOperator rho = random_state(2, 2, rng);

    const DensityOperator same = apply_channel(KrausChannel::identity(2), rho);
    CHECK(max_abs_diff(same.matrix(), rho.matrix()) < 1e-14);

    // unitary conjugation preserves the spectrum
    const ComplexMatrix u = random_unitary(2, rng);
    const DensityOperator rotated = apply_channel(KrausChannel::unitary(u), rho);
    EigResult before = hermitian_eig(rho.matrix());
    EigResult after = hermitian_eig(rotated.matrix());
    for (std::size_t i = 0; i < 2; ++i)
        CHECK(before.eigenvalues[i] == doctest::Approx(after.eigenvalues[i]).epsilon(1e-10));

    const KrausChannel noisy = random_channel(2, 2, 3, rng);
    const DensityOperator out = apply_channel(noisy, rho);
    CHECK(std::abs(out.matrix().trace().real() - 1.0) < 1e-12);
}

TEST_CASE("joint distribution of a product state factorizes") {
    Rng rng(333);
    const Povm povm = random_povm(2, 3, rng);
    const DensityOperator a = random_state(2, 2, rng);
    const DensityOperator b = random_state(2, 1, rng);
    const DensityOperator joint(hermitian_part(kron(a.matrix(), b.matrix())));
    const JointDist t = joint_distribution(povm, joint);
    const ProbDist pa = measure(povm, a);
    const ProbDist pb = measure(povm, b);
    for (std::size_t j = 0; j < povm.size(); ++j)
        for (std::size_t k = 0; k < povm.size(); ++k)
            CHECK(std::abs(t(j, k) - pa[j] * pb[k]) < 1e-12);
}

TEST_CASE("joint distribution of the Bell state under the sharp measurement") {
    // |Phi+> = (|00> + |11>)/sqrt(2); hand evaluation gives t = [[.5,0],[0,.5]]
    const double inv = 1.0 / std::sqrt(2.0);
    const PureState bell({Complex{inv}, Complex{}, Complex{}, Complex{inv}});
    const JointDist t =
        joint_distribution(Pvm::computational(2).to_povm(), DensityOperator::pure(bell));
    CHECK(t(0, 0) == doctest::Approx(0.5));
    CHECK(t(0, 1) == doctest::Approx(0.0));
    CHECK(t(1, 0) == doctest::Approx(0.0));
    CHECK(t(1, 1) == doctest::Approx(0.5));
}

TEST_CASE("joint marginals agree with single-wire measurements") {
    Rng rng(444);
    const Povm povm = random_povm(2, 4, rng);
    const DensityOperator omega = random_state(4, 3, rng);
    const JointDist t = joint_distribution(povm, omega);
    const ProbDist q = t.row_marginal();
    const DensityOperator omega_a(hermitian_part(partial_trace(omega.matrix(), 2, 2, Subsystem::A)));
    const ProbDist q2 = measure(povm, omega_a);
    for (std::size_t m = 0; m < q.size(); ++m) CHECK(std::abs(q[m] - q2[m]) < 1e-12);
}

TEST_CASE("purify: pure input, maximally mixed input, seeded round trips") {
    const PureState psi = PureState::basis_state(2, 1);
    const PureState lifted = purify(DensityOperator::pure(psi));
    CHECK(max_abs_diff(partial_trace(lifted.projector(), 2, 2, Subsystem::A), psi.projector()) <
          1e-12);

    // Schmidt coefficients of the purified maximally mixed qubit are 1/sqrt(2)
    const PureState bellish = purify(DensityOperator::maximally_mixed(2));
    ComplexMatrix reshaped(2, 2);
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) reshaped(a, b) = bellish.amplitudes()[a * 2 + b];
    const std::vector<double> schmidt = singular_values(reshaped);
    CHECK(schmidt[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-10));
    CHECK(schmidt[1] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-10));

    Rng rng(555);
    for (std::size_t d : {2, 3, 5}) {
        const DensityOperator rho = random_state(d, d, rng);
        const PureState big = purify(rho);
        CHECK(max_abs_diff(partial_trace(big.projector(), d, d, Subsystem::A), rho.matrix()) <
              1e-9);
    }
}

TEST_CASE("random generators satisfy their invariants and are seed stable") {
    const DensityOperator pure_state = random_state(2, 1, std::uint64_t{42});
    CHECK((pure_state.matrix() * pure_state.matrix()).trace().real() ==
          doctest::Approx(1.0).epsilon(1e-10));

    Rng rng(42);
    const Povm povm = random_povm(2, 4, rng);
    ComplexMatrix sum(2, 2);
    for (const ComplexMatrix& e : povm.elements()) sum += e;
    CHECK(max_abs_diff(sum, ComplexMatrix::identity(2)) < 1e-10);

    const KrausChannel ch = random_channel(2, 2, 3, std::uint64_t{42});
    ComplexMatrix acc(2, 2);
    for (const ComplexMatrix& k : ch.kraus_ops()) acc += k.adjoint() * k;
    CHECK(max_abs_diff(acc, ComplexMatrix::identity(2)) < 1e-10);

    // determinism per seed
    const DensityOperator r1 = random_state(3, 2, std::uint64_t{7});
    const DensityOperator r2 = random_state(3, 2, std::uint64_t{7});
    CHECK(max_abs_diff(r1.matrix(), r2.matrix()) == 0.0);

    CHECK_THROWS_AS(random_state(2, 3, std::uint64_t{1}), InvalidParameter);
    CHECK_THROWS_AS(random_channel(4, 1, 2, std::uint64_t{1}), InvalidParameter);
}

TEST_CASE("unistochastic channels are unital") {
    Rng rng(666);
    const KrausChannel ch = random_unistochastic_channel(3, 3, rng);
    const DensityOperator out = apply_channel(ch, DensityOperator::maximally_mixed(3));
    CHECK(max_abs_diff(out.matrix(), DensityOperator::maximally_mixed(3).matrix()) < 1e-12);
}
