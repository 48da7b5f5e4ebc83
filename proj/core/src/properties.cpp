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

#include "povmclone/properties.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "povmclone/cloning.hpp"
#include "povmclone/constructions.hpp"
#include "povmclone/errors.hpp"
#include "povmclone/linalg.hpp"
#include "povmclone/measures.hpp"
#include "povmclone/qtypes.hpp"
#include "povmclone/random.hpp"

namespace povmclone {

namespace {

// Shared bookkeeping: track the largest margin violation and count failures.
struct Tally {
    PropertyResult result;

    explicit Tally(std::string name) { result.name = std::move(name); }

    void check(double violation, double margin) {
        ++result.cases;
        if (violation > margin) {
            ++result.failures;
            result.worst = std::max(result.worst, violation);
        }
    }

    // Record a value without judging it (report-only entries).
    void observe(double value) {
        ++result.cases;
        result.worst = std::max(result.worst, value);
    }
};

ComplexMatrix random_hermitian(std::size_t d, Rng& rng) {
    ComplexMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i, j) = rng.complex_gaussian();
    return hermitian_part(m);
}

std::size_t draw_dim(Rng& rng, std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(rng.next_u64() % (hi - lo + 1));
}

ComplexMatrix swap_unitary(std::size_t d) {
    ComplexMatrix s(d * d, d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) s(i * d + j, j * d + i) = 1.0;
    return s;
}

// ---- numerics ----

PropertyResult prop_eig_reconstruction(std::size_t cases, std::uint64_t seed,
                                       const Tolerances& tol) {
    Tally tally("eig_reconstruction");
    Rng rng(seed);
    for (std::size_t c = 0; c < cases; ++c) {
        const std::size_t d = draw_dim(rng, 2, 16);
        const ComplexMatrix m = random_hermitian(d, rng);
        EigResult eig = hermitian_eig(m, tol);
        ComplexMatrix scaled = eig.eigenvectors;
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t i = 0; i < d; ++i) scaled(i, j) *= eig.eigenvalues[j];
        const double recon = max_abs_diff(scaled * eig.eigenvectors.adjoint(), m);
        const double unit = unitarity_defect(eig.eigenvectors);
        double order = 0.0;
        for (std::size_t j = 0; j + 1 < d; ++j)
            order = std::max(order, eig.eigenvalues[j + 1] - eig.eigenvalues[j]);
        tally.check(std::max({recon, unit, order}), 1e-10);
    }
    return tally.result;
}

PropertyResult prop_sqrt_psd_composition(std::size_t cases, std::uint64_t seed,
                                         const Tolerances& tol) {
    Tally tally("sqrt_psd_composition");
    Rng rng(seed);
    for (std::size_t c = 0; c < cases; ++c) {
        const std::size_t d = draw_dim(rng, 2, 8);
        ComplexMatrix b(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) b(i, j) = rng.complex_gaussian();
        const ComplexMatrix a = hermitian_part(b.adjoint() * b);
        const ComplexMatrix s = sqrt_psd(a, tol);
        const double square_back = max_abs_diff(s * s, a);
        const double idempotent = max_abs_diff(sqrt_psd(hermitian_part(s * s), tol), s);
        tally.check(std::max(square_back, idempotent), 1e-9 * std::max(1.0, a.max_abs()));
    }
    return tally.result;
}

PropertyResult prop_singular_values_adjoint(std::size_t cases, std::uint64_t seed,
                                            const Tolerances& tol) {
    Tally tally("singular_values_adjoint");
    Rng rng(seed);
    for (std::size_t c = 0; c < cases; ++c) {
        const std::size_t r = draw_dim(rng, 2, 6);
        const std::size_t cc = draw_dim(rng, 2, 6);
        ComplexMatrix x(r, cc);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < cc; ++j) x(i, j) = rng.complex_gaussian();
        const std::vector<double> s1 = singular_values(x, tol);
        const std::vector<double> s2 = singular_values(x.adjoint(), tol);
        double diff = 0.0;
        for (std::size_t i = 0; i < s1.size(); ++i) diff = std::max(diff, std::abs(s1[i] - s2[i]));
        double trace_gap = 0.0;
        double sum2 = 0.0;
        for (double s : s1) sum2 += s * s;
        trace_gap = std::abs(sum2 - (x.adjoint() * x).trace().real());
        tally.check(std::max(diff, trace_gap), 1e-10 * std::max(1.0, sum2));
    }
    return tally.result;
}

PropertyResult prop_kron_mixed_product(std::size_t cases, std::uint64_t seed,
                                       const Tolerances& tol) {
    (void)tol;
    Tally tally("kron_mixed_product");
    Rng rng(seed);
    for (std::size_t c = 0; c < cases; ++c) {
        const std::size_t d = draw_dim(rng, 2, 4);
        auto draw = [&] {
            ComplexMatrix m(d, d);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) m(i, j) = rng.complex_gaussian();
            return m;
        };
        const ComplexMatrix a = draw(), b = draw(), u = draw(), v = draw();
        const double mixed = max_abs_diff(kron(a, b) * kron(u, v), kron(a * u, b * v));
        const double assoc = max_abs_diff(kron(kron(a, b), u), kron(a, kron(b, u)));
        const double scale = std::max(1.0, kron(a, b).max_abs() * kron(u, v).max_abs());
        tally.check(std::max(mixed, assoc), 1e-10 * scale);
    }
    return tally.result;
}

PropertyResult prop_partial_trace_product(std::size_t cases, std::uint64_t seed,
                                          const Tolerances& tol) {
    Tally tally("partial_trace_product");
    Rng rng(seed);
    for (std::size_t c = 0; c < cases; ++c) {
        const std::size_t da = draw_dim(rng, 2, 4);
        const std::size_t db = draw_dim(rng, 2, 4);
        const DensityOperator a = random_state(da, da, rng, tol);
        const DensityOperator b = random_state(db, db, rng, tol);
        const ComplexMatrix joint = kron(a.matrix(), b.matrix());
        const double product =
            max_abs_diff(partial_trace(joint, da, db, Subsystem::A), a.matrix());
        ComplexMatrix big(da * db, da * db);
        for (std::size_t i = 0; i < big.rows(); ++i)
            for (std::size_t j = 0; j < big.cols(); ++j) big(i, j) = rng.complex_gaussian();
        const double trace_gap =
            std::abs((partial_trace(big, da, db, Subsystem::A).trace() - big.trace()).real()) +
            std::abs((partial_trace(big, da, db, Subsystem::B).trace() - big.trace()).real());
        tally.check(std::max(product, trace_gap), 1e-12 * std::max(1.0, big.max_abs() * da * db));
    }
    return tally.result;
}

// ---- qtypes ----

PropertyResult prop_measure_valid(std::size_t cases, std::uint64_t seed, const Tolerances& tol) {
    Tally tally("measure_valid");
    Rng rng(seed);
    for (std::size_t c = 0; c < cases; ++c) {
        const std::size_t d = draw_dim(rng, 2, 4);
        const std::size_t n = draw_dim(rng, 2, 5);
        const Povm povm = random_povm(d, n, rng, tol);
        const DensityOperator rho = random_state(d, draw_dim(rng, 1, d), rng, tol);
        const ProbDist p = measure(povm, rho, tol);
        double sum = 0.0;
        double bad = 0.0;
        for (std::size_t m = 0; m < p.size(); ++m) {
            sum += p[m];
            bad = std::max(bad, std::max(-p[m], p[m] - 1.0));
        }
        tally.check(std::max(bad, std::abs(sum - 1.0)), tol.norm);
    }
    return tally.result;
}

PropertyResult prop_joint_marginals(std::size_t cases, std::uint64_t seed, const Tolerances& tol) {
    Tally tally("joint_marginals");
    Rng rng(seed);
    for (std::size_t c = 0; c < cases; ++c) {
        const std::size_t d = 2;
        const Povm povm = random_povm(d, draw_dim(rng, 2, 4), rng, tol);
        const DensityOperator omega = random_state(d * d, draw_dim(rng, 1, d * d), rng, tol);
        const JointDist t = joint_distribution(povm, omega, tol);

        // Marginals of t against the single-wire reductions of omega.
        const DensityOperator omega_a(
            hermitian_part(partial_trace(omega.matrix(), d, d, Subsystem::A)), tol);
        const DensityOperator omega_t(
            hermitian_part(partial_trace(omega.matrix(), d, d, Subsystem::B)), tol);
        const ProbDist q = measure(povm, omega_a, tol);
        const ProbDist r = measure(povm, omega_t, tol);
        const ProbDist qm = t.row_marginal(tol);
        const ProbDist rm = t.col_marginal(tol);
        double gap = 0.0;
        for (std::size_t m = 0; m < q.size(); ++m) {
            gap = std::max(gap, std::abs(q[m] - qm[m]));
            gap = std::max(gap, std::abs(r[m] - rm[m]));
        }
        tally.check(gap, tol.marginal);
    }
    return tally.result;
}

PropertyResult prop_channel_trace_positivity(std::size_t cases, std::uint64_t seed,
                                             const Tolerances& tol) {
    Tally tally("channel_trace_positivity");
    Rng rng(seed);
    for (std::size_t c = 0; c < cases; ++c) {
        const std::size_t din = draw_dim(rng, 2, 4);
        const std::size_t dout = draw_dim(rng, 2, 4);
        const std::size_t min_kraus = (din + dout - 1) / dout;
        const KrausChannel ch = random_channel(din, dout, draw_dim(rng, min_kraus, min_kraus + 2), rng, tol);
        const DensityOperator rho = random_state(din, draw_dim(rng, 1, din), rng, tol);
        const DensityOperator out = apply_channel(ch, rho, tol);
        const double trace_gap = std::abs(out.matrix().trace().real() - 1.0);
        EigResult eig = hermitian_eig(out.matrix(), tol);
        const double negativity = std::max(0.0, -eig.eigenvalues.back());
        tally.check(std::max(trace_gap, negativity), 1e-10);
    }
    return tally.result;
}

PropertyResult prop_purify_roundtrip(std::size_t cases, std::uint64_t seed,
                                     const Tolerances& tol) {
    Tally tally("purify_roundtrip");
    Rng rng(seed);
    for (std::size_t c = 0; c < cases; ++c) {
        const std::size_t d = draw_dim(rng, 2, 6);
        const DensityOperator rho = random_state(d, draw_dim(rng, 1, d), rng, tol);
        const PureState psi = purify(rho, tol);
        const double gap =
            max_abs_diff(partial_trace(psi.projector(), d, d, Subsystem::A), rho.matrix());
        tally.check(gap, 1e-9);
    }
    return tally.result;
}

// ---- measures ----

PropertyResult prop_qc_bound(std::size_t cases, std::uint64_t seed, const Tolerances& tol) {
    Tally tally("qc_bound");
    Rng rng(seed);
    for (std::size_t c = 0; c < cases; ++c) {
        const std::size_t d = draw_dim(rng, 2, 3);
        const Povm povm = random_povm(d, draw_dim(rng, 2, 5), rng, tol);
        const DensityOperator rho = random_state(d, draw_dim(rng, 1, d), rng, tol);
        const DensityOperator omega = random_state(d, draw_dim(rng, 1, d), rng, tol);
        const double f = fidelity(rho, omega, tol);
        const double fcl = classical_fidelity(measure(povm, rho, tol), measure(povm, omega, tol));
        tally.check(f - fcl, tol.qc_bound);
    }
    return tally.result;
}

PropertyResult prop_fidelity_monotonicity(std::size_t cases, std::uint64_t seed,
                                          const Tolerances& tol) {
    Tally tally("fidelity_monotonicity");
    Rng rng(seed);
    for (std::size_t c = 0; c < cases; ++c) {
        const std::size_t d = draw_dim(rng, 2, 3);
        const KrausChannel ch = random_channel(d, d, draw_dim(rng, 1, 3), rng, tol);
        const DensityOperator rho = random_state(d, draw_dim(rng, 1, d), rng, tol);
        const DensityOperator omega = random_state(d, draw_dim(rng, 1, d), rng, tol);
        const double before = fidelity(rho, omega, tol);
        const double after = fidelity(apply_channel(ch, rho, tol), apply_channel(ch, omega, tol), tol);
        tally.check(before - after, tol.monotonicity);
    }
    return tally.result;
}

PropertyResult prop_fidelity_multiplicativity(std::size_t cases, std::uint64_t seed,
                                              const Tolerances& tol) {
    Tally tally("fidelity_multiplicativity");
    Rng rng(seed);
    for (std::size_t c = 0; c < cases; ++c) {
        const DensityOperator a = random_state(2, draw_dim(rng, 1, 2), rng, tol);
        const DensityOperator b = random_state(2, draw_dim(rng, 1, 2), rng, tol);
        const DensityOperator a2 = random_state(2, draw_dim(rng, 1, 2), rng, tol);
        const DensityOperator b2 = random_state(2, draw_dim(rng, 1, 2), rng, tol);
        const DensityOperator ab(hermitian_part(kron(a.matrix(), b.matrix())), tol);
        const DensityOperator ab2(hermitian_part(kron(a2.matrix(), b2.matrix())), tol);
        const double lhs = fidelity(ab, ab2, tol);
        const double rhs = fidelity(a, a2, tol) * fidelity(b, b2, tol);
        tally.check(std::abs(lhs - rhs), tol.multiplicativity);
    }
    return tally.result;
}

PropertyResult prop_purification_overlap(std::size_t cases, std::uint64_t seed,
                                         const Tolerances& tol) {
    Tally tally("purification_overlap");
    Rng rng(seed);
    for (std::size_t c = 0; c < cases; ++c) {
        const DensityOperator rho = random_state(2, draw_dim(rng, 1, 2), rng, tol);
        const DensityOperator omega = random_state(2, draw_dim(rng, 1, 2), rng, tol);
        const double f = fidelity(rho, omega, tol);
        const double canonical = purification_overlap_canonical(rho, omega, tol);
        const double optimal = purification_overlap_optimal(rho, omega, tol);
        const double bound_violation = canonical - f;
        const double equality_gap = std::abs(optimal - f);
        tally.check(std::max(bound_violation - 1e-12, equality_gap), tol.purification);
    }
    return tally.result;
}

PropertyResult prop_partial_fidelity_monotonicity(std::size_t cases, std::uint64_t seed,
                                                  const Tolerances& tol) {
    Tally tally("partial_fidelity_monotonicity");
    Rng rng(seed);
    for (std::size_t c = 0; c < cases; ++c) {
        const std::size_t d = draw_dim(rng, 2, 3);
        const DensityOperator rho = random_state(d, draw_dim(rng, 1, d), rng, tol);
        const DensityOperator omega = random_state(d, draw_dim(rng, 1, d), rng, tol);
        const KrausChannel ch = random_unistochastic_channel(d, draw_dim(rng, 2, 4), rng, tol);
        const DensityOperator rho2 = apply_channel(ch, rho, tol);
        const DensityOperator omega2 = apply_channel(ch, omega, tol);
        double decrease = 0.0;
        for (std::size_t k = 0; k < d; ++k) {
            const double before = partial_fidelity(rho, omega, {k}, tol);
            const double after = partial_fidelity(rho2, omega2, {k}, tol);
            decrease = std::max(decrease, before - after);
        }
        tally.check(decrease, tol.partial_mono);
    }
    return tally.result;
}

PropertyResult prop_factorized_joint_square(std::size_t cases, std::uint64_t seed,
                                            const Tolerances& tol) {
    Tally tally("factorized_joint_square");
    Rng rng(seed);
    for (std::size_t c = 0; c < cases; ++c) {
        const std::size_t d = draw_dim(rng, 2, 3);
        const Povm povm = random_povm(d, draw_dim(rng, 2, 4), rng, tol);
        const ProbDist p = measure(povm, random_state(d, d, rng, tol), tol);
        const ProbDist q = measure(povm, random_state(d, d, rng, tol), tol);
        const std::size_t n = p.size();
        std::vector<double> tp(n * n), tq(n * n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                tp[j * n + k] = p[j] * p[k];
                tq[j * n + k] = q[j] * q[k];
            }
        const double joint = classical_fidelity(JointDist(n, n, std::move(tp), tol),
                                                JointDist(n, n, std::move(tq), tol));
        const double single = classical_fidelity(p, q);
        tally.check(std::abs(joint - single * single), 1e-12);
    }
    return tally.result;
}

PropertyResult prop_optimal_povm_equality(std::size_t cases, std::uint64_t seed,
                                          const Tolerances& tol) {
    Tally tally("optimal_povm_equality");
    Rng rng(seed);
    for (std::size_t c = 0; c < cases; ++c) {
        const std::size_t d = draw_dim(rng, 2, 3);
        const DensityOperator rho = random_state(d, d, rng, tol);  // full rank
        const DensityOperator omega = random_state(d, d, rng, tol);
        const Povm best = optimal_fidelity_povm(rho, omega, tol);
        const double achieved =
            classical_fidelity(measure(best, rho, tol), measure(best, omega, tol));
        tally.check(std::abs(achieved - fidelity(rho, omega, tol)), tol.povm_optimality);
    }
    return tally.result;
}

PropertyResult prop_optimal_povm_minimality(std::size_t cases, std::uint64_t seed,
                                            const Tolerances& tol) {
    Tally tally("optimal_povm_minimality");
    Rng rng(seed);
    const DensityOperator rho = random_state(2, 2, rng, tol);
    const DensityOperator omega = random_state(2, 2, rng, tol);
    const double f = fidelity(rho, omega, tol);
    for (std::size_t c = 0; c < cases; ++c) {
        const Povm povm = random_povm(2, draw_dim(rng, 2, 5), rng, tol);
        const double fcl = classical_fidelity(measure(povm, rho, tol), measure(povm, omega, tol));
        tally.check(f - fcl, tol.qc_bound);
    }
    return tally.result;
}

// ---- cloning ----

PropertyResult prop_contrapositive(std::size_t cases, std::uint64_t seed, const Tolerances& tol) {
    Tally tally("contrapositive");
    Rng rng(seed);
    std::size_t cloned = 0;
    for (std::size_t c = 0; c < cases; ++c) {
        CloningScenario scenario{Pvm::computational(2).to_povm(tol), KrausChannel::identity(4),
                                 DensityOperator::maximally_mixed(2), {}};
        if (c % 5 == 0) {
            // A known perfect cloner: the constructed pair really factorizes.
            const double eta = 0.05 + 0.7 * rng.uniform();
            const CloneExampleParams params = solve_clone_angles(eta, tol);
            scenario.channel = KrausChannel::unitary(clone_unitary_computational(params, tol), tol);
            scenario.probe_init = DensityOperator::pure(clone_state_eta(eta, tol), tol);
            scenario.input_set = {DensityOperator::pure(clone_state_eta(eta, tol), tol),
                                  DensityOperator::pure(clone_state_phi(params, tol), tol)};
        } else if (c % 5 == 1) {
            // Swap with a preloaded probe clones a single repeated input.
            const DensityOperator rho = random_state(2, draw_dim(rng, 1, 2), rng, tol);
            scenario.channel = KrausChannel::unitary(swap_unitary(2), tol);
            scenario.probe_init = rho;
            scenario.input_set = {rho, rho};
        } else {
            scenario.povm = random_povm(2, draw_dim(rng, 2, 4), rng, tol);
            scenario.channel = random_channel(4, 4, draw_dim(rng, 1, 3), rng, tol);
            scenario.probe_init = random_state(2, draw_dim(rng, 1, 2), rng, tol);
            scenario.input_set = {random_state(2, draw_dim(rng, 1, 2), rng, tol),
                                  random_state(2, draw_dim(rng, 1, 2), rng, tol)};
        }

        const CloningReport report = run_scenario(scenario, tol);
        bool factorized = true;
        for (const InputRecord& rec : report.inputs) {
            double gap = 0.0;
            const std::size_t n = rec.p.size();
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    gap = std::max(gap, std::abs(rec.t(j, k) - rec.p[j] * rec.p[k]));
            if (gap > tol.factorized) factorized = false;
        }
        if (!factorized) {
            tally.check(0.0, 1.0);  // premise not met, nothing to verify
            continue;
        }
        ++cloned;
        const double f = fidelity(scenario.input_set[0], scenario.input_set[1], tol);
        const double fcl = classical_fidelity(measure(scenario.povm, scenario.input_set[0], tol),
                                              measure(scenario.povm, scenario.input_set[1], tol));
        tally.check(f - fcl * fcl, tol.contrapositive);
    }
    tally.result.note = std::to_string(cloned) + " factorized cases";
    return tally.result;
}

PropertyResult prop_proof_chain(std::size_t cases, std::uint64_t seed, const Tolerances& tol) {
    Tally tally("proof_chain");
    Rng rng(seed);
    for (std::size_t c = 0; c < cases; ++c) {
        const Povm povm = random_povm(2, draw_dim(rng, 2, 3), rng, tol);
        const KrausChannel ch = random_channel(4, 4, draw_dim(rng, 1, 3), rng, tol);
        const DensityOperator probe = random_state(2, draw_dim(rng, 1, 2), rng, tol);

        std::vector<ComplexMatrix> product_elements;
        for (std::size_t j = 0; j < povm.size(); ++j)
            for (std::size_t k = 0; k < povm.size(); ++k)
                product_elements.push_back(kron(povm.element(j), povm.element(k)));
        const Povm product_povm(std::move(product_elements), tol);

        auto output = [&](const DensityOperator& rho) {
            return apply_channel(
                ch, DensityOperator(hermitian_part(kron(rho.matrix(), probe.matrix())), tol), tol);
        };
        const DensityOperator out1 = output(random_state(2, draw_dim(rng, 1, 2), rng, tol));
        const DensityOperator out2 = output(random_state(2, draw_dim(rng, 1, 2), rng, tol));
        const double f = fidelity(out1, out2, tol);
        const double fcl = classical_fidelity(measure(product_povm, out1, tol),
                                              measure(product_povm, out2, tol));
        tally.check(f - fcl, tol.proof_chain);
    }
    return tally.result;
}

PropertyResult prop_broadcast_consistency(std::size_t cases, std::uint64_t seed,
                                          const Tolerances& tol) {
    Tally tally("broadcast_consistency");
    Rng rng(seed);
    const ComplexMatrix swap = swap_unitary(2);
    for (std::size_t c = 0; c < cases; ++c) {
        const Povm povm = random_povm(2, draw_dim(rng, 2, 4), rng, tol);
        // Symmetrize the joint state so both wires share one marginal; the
        // residual against that marginal must vanish by construction.
        const DensityOperator raw = random_state(4, draw_dim(rng, 1, 4), rng, tol);
        ComplexMatrix sym = raw.matrix() + swap * raw.matrix() * swap.adjoint();
        sym *= Complex{0.5};
        const DensityOperator omega(hermitian_part(sym), tol);
        const JointDist t = joint_distribution(povm, omega, tol);
        tally.check(check_broadcasting(t, t.row_marginal(tol)), tol.broadcast);
    }
    return tally.result;
}

PropertyResult prop_merit_permutation(std::size_t cases, std::uint64_t seed,
                                      const Tolerances& tol) {
    Tally tally("merit_permutation");
    Rng rng(seed);
    for (std::size_t c = 0; c < cases; ++c) {
        CloningScenario scenario{random_povm(2, 2, rng, tol),
                                 random_channel(4, 4, draw_dim(rng, 1, 2), rng, tol),
                                 random_state(2, draw_dim(rng, 1, 2), rng, tol),
                                 {random_state(2, 2, rng, tol), random_state(2, 2, rng, tol),
                                  random_state(2, 1, rng, tol)}};
        const double merit = run_scenario(scenario, tol).merit_hb;
        std::reverse(scenario.input_set.begin(), scenario.input_set.end());
        const double reversed = run_scenario(scenario, tol).merit_hb;
        const double gap = (std::isinf(merit) && std::isinf(reversed))
                               ? 0.0
                               : std::abs(merit - reversed);
        tally.check(gap, 0.0);
    }
    return tally.result;
}

// ---- constructions ----

PropertyResult prop_b92_survey_grid(std::size_t cases, std::uint64_t seed, const Tolerances& tol) {
    (void)seed;
    Tally tally("b92_survey_grid");
    const double lo = 0.02;
    const double hi = 0.78;
    const std::size_t n = std::max<std::size_t>(cases, 2);
    for (std::size_t i = 0; i < n; ++i) {
        const double eta = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
        const IntoleranceSurvey survey = intolerance_survey(eta, tol);
        tally.check(survey.all_intolerant ? 0.0 : 1.0, 0.5);
    }
    return tally.result;
}

PropertyResult prop_lemma2_range(std::size_t cases, std::uint64_t seed, const Tolerances& tol) {
    Tally tally("lemma2_range");
    Rng rng(seed);
    for (std::size_t c = 0; c < cases; ++c) {
        const std::size_t d = draw_dim(rng, 2, 4);
        std::vector<std::size_t> ranks;
        std::size_t left = d;
        while (left > 0) {
            const std::size_t r = 1 + rng.next_u64() % std::min<std::size_t>(left, 2);
            ranks.push_back(r);
            left -= r;
        }
        const Pvm pvm = random_pvm(d, ranks, rng, tol);
        const PureState psi = random_pure_state(d, rng, tol);

        const ProbDist p = measure(pvm.to_povm(tol), DensityOperator::pure(psi, tol), tol);
        double min_p = 2.0;
        for (std::size_t m = 0; m < p.size(); ++m)
            if (p[m] > tol.zero) min_p = std::min(min_p, p[m]);
        const double floor = std::sqrt(min_p);

        double worst = 0.0;
        const std::size_t f_count = 20;
        for (std::size_t i = 0; i < f_count; ++i) {
            const double f =
                floor + (1.0 - floor) * static_cast<double>(i) / static_cast<double>(f_count - 1);
            const PureState phi = construct_saturating_pure_state(pvm, psi, f, tol);
            const ProbDist q = measure(pvm.to_povm(tol), DensityOperator::pure(phi, tol), tol);
            worst = std::max(worst, std::abs(std::abs(psi.overlap(phi)) - f));
            worst = std::max(worst, std::abs(classical_fidelity(p, q) - f));
        }
        tally.check(worst, tol.lemma2);
    }
    return tally.result;
}

PropertyResult prop_lemma2_blockwise_saturation(std::size_t cases, std::uint64_t seed,
                                                const Tolerances& tol) {
    Tally tally("lemma2_blockwise_saturation");
    Rng rng(seed);
    for (std::size_t c = 0; c < cases; ++c) {
        const std::size_t d = 4;
        const std::vector<std::size_t> ranks = {2, 2};
        const Pvm pvm = random_pvm(d, ranks, rng, tol);
        const PureState psi = random_pure_state(d, rng, tol);
        const ProbDist p = measure(pvm.to_povm(tol), DensityOperator::pure(psi, tol), tol);
        double min_p = 2.0;
        for (std::size_t m = 0; m < p.size(); ++m)
            if (p[m] > tol.zero) min_p = std::min(min_p, p[m]);
        const double f = 0.5 * (std::sqrt(min_p) + 1.0);
        const PureState phi = construct_saturating_pure_state(pvm, psi, f, tol);

        // Per-block Cauchy-Schwarz saturation: sum |c_n||b_n| == ||c|| ||b||.
        double worst = 0.0;
        for (const ComplexMatrix& basis : pvm.block_bases(tol)) {
            const std::vector<Complex> cvec = mat_vec(basis.adjoint(), psi.amplitudes());
            const std::vector<Complex> bvec = mat_vec(basis.adjoint(), phi.amplitudes());
            double dot = 0.0;
            for (std::size_t i = 0; i < cvec.size(); ++i)
                dot += std::abs(cvec[i]) * std::abs(bvec[i]);
            worst = std::max(worst, std::abs(dot - norm2(cvec) * norm2(bvec)));
        }
        tally.check(worst, 1e-10);
    }
    return tally.result;
}

PropertyResult prop_clone_unitary_grid(std::size_t cases, std::uint64_t seed,
                                       const Tolerances& tol) {
    (void)seed;
    Tally tally("clone_unitary_grid");
    const double lo = 0.02;
    const double hi = 0.78;
    const std::size_t n = std::max<std::size_t>(cases, 2);
    for (std::size_t i = 0; i < n; ++i) {
        const double eta = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
        const CloneExampleParams params = solve_clone_angles(eta, tol);
        const ComplexMatrix u = build_cloning_unitary(params, tol);
        double worst = unitarity_defect(u);

        // alpha == alpha'^2 for the symmetric choice.
        const Complex alpha = eta_theta_coefficients(eta, params.phi).alpha;
        const Complex alpha1 = eta_theta_coefficients(eta, params.phi1).alpha;
        worst = std::max(worst, std::abs(alpha - alpha1 * alpha1));
        tally.check(worst, 1e-10);
    }
    return tally.result;
}

PropertyResult prop_published_matrix_report(std::size_t cases, std::uint64_t seed,
                                            const Tolerances& tol) {
    (void)seed;
    Tally tally("published_matrix_report");
    const double lo = 0.05;
    const double hi = 0.75;
    const std::size_t n = std::max<std::size_t>(cases, 2);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double eta = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
        const PublishedMatrixComparison cmp =
            compare_published_matrix(solve_clone_angles(eta, tol), tol);
        worst = std::max({worst, cmp.published_unitarity_defect, cmp.fixed_column_defect,
                          cmp.complement_span_defect});
        tally.observe(0.0);
    }
    tally.result.note = "report-only, max deviation " + std::to_string(worst);
    tally.result.worst = worst;
    return tally.result;
}

}  // namespace

const std::vector<PropertyCheck>& all_properties() {
    static const std::vector<PropertyCheck> registry = {
        {"eig_reconstruction", 50, prop_eig_reconstruction},
        {"sqrt_psd_composition", 50, prop_sqrt_psd_composition},
        {"singular_values_adjoint", 50, prop_singular_values_adjoint},
        {"kron_mixed_product", 50, prop_kron_mixed_product},
        {"partial_trace_product", 50, prop_partial_trace_product},
        {"measure_valid", 1000, prop_measure_valid},
        {"joint_marginals", 200, prop_joint_marginals},
        {"channel_trace_positivity", 200, prop_channel_trace_positivity},
        {"purify_roundtrip", 100, prop_purify_roundtrip},
        {"qc_bound", 1000, prop_qc_bound},
        {"fidelity_monotonicity", 500, prop_fidelity_monotonicity},
        {"fidelity_multiplicativity", 200, prop_fidelity_multiplicativity},
        {"purification_overlap", 100, prop_purification_overlap},
        {"partial_fidelity_monotonicity", 200, prop_partial_fidelity_monotonicity},
        {"factorized_joint_square", 200, prop_factorized_joint_square},
        {"optimal_povm_equality", 200, prop_optimal_povm_equality},
        {"optimal_povm_minimality", 200, prop_optimal_povm_minimality},
        {"contrapositive", 500, prop_contrapositive},
        {"proof_chain", 200, prop_proof_chain},
        {"broadcast_consistency", 200, prop_broadcast_consistency},
        {"merit_permutation", 50, prop_merit_permutation},
        {"b92_survey_grid", 50, prop_b92_survey_grid},
        {"lemma2_range", 20, prop_lemma2_range},
        {"lemma2_blockwise_saturation", 20, prop_lemma2_blockwise_saturation},
        {"clone_unitary_grid", 50, prop_clone_unitary_grid},
        {"published_matrix_report", 10, prop_published_matrix_report},
    };
    return registry;
}

PropertyResult run_property(const std::string& name, std::size_t cases, std::uint64_t seed,
                            const Tolerances& tol) {
    for (const PropertyCheck& check : all_properties()) {
        if (check.name == name)
            return check.run(cases == 0 ? check.default_cases : cases, seed, tol);
    }
    throw InvalidParameter("unknown property: " + name);
}

}  // namespace povmclone
