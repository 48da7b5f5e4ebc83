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

#include "povmclone/cloning.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "povmclone/errors.hpp"
#include "povmclone/linalg.hpp"
#include "povmclone/random.hpp"

namespace povmclone {

CloningReport run_scenario(const CloningScenario& s, const Tolerances& tol) {
    const std::size_t d = s.povm.dim();
    if (s.channel.din() != d * d || s.channel.dout() != d * d)
        throw DimensionMismatch("channel must act on the carrier-probe pair");
    if (s.probe_init.dim() != d) throw DimensionMismatch("probe dimension mismatch");

    CloningReport report;
    report.inputs.reserve(s.input_set.size());
    for (std::size_t idx = 0; idx < s.input_set.size(); ++idx) {
        const DensityOperator& rho = s.input_set[idx];
        if (rho.dim() != d) throw DimensionMismatch("input dimension mismatch");

        const DensityOperator joint_in(
            hermitian_part(kron(rho.matrix(), s.probe_init.matrix())), tol);
        const DensityOperator omega = apply_channel(s.channel, joint_in, tol);

        ProbDist p = measure(s.povm, rho, tol);
        JointDist t = joint_distribution(s.povm, omega, tol);
        ProbDist q = t.row_marginal(tol);
        ProbDist r = t.col_marginal(tol);

        const std::size_t n = p.size();
        std::vector<double> pp(n * n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) pp[j * n + k] = p[j] * p[k];
        const JointDist product(n, n, std::move(pp), tol);

        InputRecord rec{std::move(p), std::move(q), std::move(r), std::move(t), 0.0, 0.0};
        rec.relative_entropy = relative_entropy(rec.t, product, tol);
        rec.broadcast_residual = check_broadcasting(rec.t, rec.p);
        if (std::isinf(rec.relative_entropy) && !report.infinite_input)
            report.infinite_input = idx;
        report.merit_hb = std::max(report.merit_hb, rec.relative_entropy);
        report.inputs.push_back(std::move(rec));
    }
    return report;
}

double check_broadcasting(const JointDist& t, const ProbDist& p) {
    if (t.rows() != p.size() || t.cols() != p.size())
        throw LengthMismatch("joint shape does not match the distribution");
    double residual = 0.0;
    for (std::size_t j = 0; j < t.rows(); ++j) {
        double row = 0.0;
        for (std::size_t k = 0; k < t.cols(); ++k) row += t(j, k);
        residual = std::max(residual, std::abs(row - p[j]));
    }
    for (std::size_t k = 0; k < t.cols(); ++k) {
        double col = 0.0;
        for (std::size_t j = 0; j < t.rows(); ++j) col += t(j, k);
        residual = std::max(residual, std::abs(col - p[k]));
    }
    return residual;
}

NoCloningCheck check_no_cloning_condition(const Povm& povm, const DensityOperator& rho,
                                          const DensityOperator& omega, const Tolerances& tol) {
    NoCloningCheck check;
    check.fidelity_value = fidelity(rho, omega, tol);
    check.classical_fidelity_value =
        classical_fidelity(measure(povm, rho, tol), measure(povm, omega, tol));
    check.degenerate =
        check.fidelity_value <= tol.norm || check.fidelity_value >= 1.0 - tol.norm;
    const double fcl2 = check.classical_fidelity_value * check.classical_fidelity_value;
    check.verdict = (fcl2 < check.fidelity_value - tol.strict) ? CloningVerdict::intolerant
                                                               : CloningVerdict::inconclusive;
    return check;
}

PartialNoCloningCheck check_no_cloning_partial(const Povm& povm, const DensityOperator& rho,
                                               const DensityOperator& omega, std::size_t k,
                                               const Tolerances& tol) {
    const std::size_t n = povm.size();
    if (k >= n) throw InvalidParameter("k must be below the POVM element count");
    PartialNoCloningCheck check;
    check.k = k;
    check.kappa = (2 * n - k) * k;
    if (check.kappa >= n * n)
        throw InvalidParameter("kappa exceeds the joint term count");

    check.classical_partial =
        classical_partial_fidelity(measure(povm, rho, tol), measure(povm, omega, tol), k);
    // F_kappa is an empty sum once kappa reaches the state dimension.
    check.quantum_partial =
        check.kappa < rho.dim()
            ? partial_fidelity(rho, omega, PartialFidelitySpec{check.kappa}, tol)
            : 0.0;
    check.predicate_holds =
        check.classical_partial * check.classical_partial < check.quantum_partial - tol.strict;
    return check;
}

namespace {

ComplexMatrix su2(double a, double b, double c) {
    // Rz(a) Ry(b) Rz(c)
    const Complex ea = std::polar(1.0, -0.5 * a);
    const Complex ec = std::polar(1.0, -0.5 * c);
    const double cb = std::cos(0.5 * b);
    const double sb = std::sin(0.5 * b);
    ComplexMatrix u(2, 2);
    u(0, 0) = ea * cb * ec;
    u(0, 1) = -ea * sb * std::conj(ec);
    u(1, 0) = std::conj(ea) * sb * ec;
    u(1, 1) = std::conj(ea) * cb * std::conj(ec);
    return u;
}

// exp(i c P⊗P) = cos(c) 1 + i sin(c) P⊗P for a Pauli P.
ComplexMatrix pauli_pair_exponent(double c, const ComplexMatrix& pp) {
    ComplexMatrix out = ComplexMatrix::identity(4);
    out *= Complex{std::cos(c)};
    ComplexMatrix second = pp;
    second *= Complex{0.0, std::sin(c)};
    out += second;
    return out;
}

struct PauliPairs {
    ComplexMatrix xx, yy, zz;
    PauliPairs() {
        const ComplexMatrix x = ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
        const ComplexMatrix y =
            ComplexMatrix::from_rows({{0.0, Complex{0.0, -1.0}}, {Complex{0.0, 1.0}, 0.0}});
        const ComplexMatrix z = ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
        xx = kron(x, x);
        yy = kron(y, y);
        zz = kron(z, z);
    }
};

const PauliPairs& pauli_pairs() {
    static const PauliPairs pairs;
    return pairs;
}

}  // namespace

ComplexMatrix two_qubit_unitary(const std::array<double, 15>& t) {
    const PauliPairs& pp = pauli_pairs();
    const ComplexMatrix pre = kron(su2(t[0], t[1], t[2]), su2(t[3], t[4], t[5]));
    const ComplexMatrix post = kron(su2(t[6], t[7], t[8]), su2(t[9], t[10], t[11]));
    const ComplexMatrix core = pauli_pair_exponent(t[12], pp.xx) *
                               pauli_pair_exponent(t[13], pp.yy) *
                               pauli_pair_exponent(t[14], pp.zz);
    return post * core * pre;
}

namespace {

// Raw scenario evaluation used inside the search loop: no validating
// constructors, everything is a 4x4 matrix-product pipeline.
struct SearchObjective {
    std::vector<ComplexMatrix> joint_elements;  // M_j ⊗ M_k
    std::vector<ComplexMatrix> joint_inputs;    // rho ⊗ |0><0|
    std::vector<std::vector<double>> originals;  // p per input
    std::size_t n = 0;
    double support_cutoff = 1e-12;

    double operator()(const ComplexMatrix& u) const {
        const ComplexMatrix udag = u.adjoint();
        double merit = 0.0;
        for (std::size_t idx = 0; idx < joint_inputs.size(); ++idx) {
            const ComplexMatrix omega = u * joint_inputs[idx] * udag;
            const std::vector<double>& p = originals[idx];
            double h = 0.0;
            for (std::size_t j = 0; j < n && std::isfinite(h); ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    double tjk = (joint_elements[j * n + k] * omega).trace().real();
                    if (tjk < 0.0) tjk = 0.0;
                    if (tjk <= support_cutoff) continue;
                    const double target = p[j] * p[k];
                    if (target <= support_cutoff) {
                        h = std::numeric_limits<double>::infinity();
                        break;
                    }
                    h += tjk * std::log(tjk / target);
                }
            if (h < 0.0 && h > -1e-12) h = 0.0;
            merit = std::max(merit, h);
            if (std::isinf(merit)) return merit;
        }
        return merit;
    }
};

}  // namespace

SearchResult search_perfect_cloner(const Povm& povm, const DensityOperator& rho,
                                   const DensityOperator& omega, const SearchBudget& budget,
                                   std::uint64_t seed, const Tolerances& tol) {
    if (povm.dim() != 2) throw InvalidParameter("the cloner search handles qubits only");
    if (rho.dim() != 2 || omega.dim() != 2) throw DimensionMismatch("qubit inputs required");
    if (budget.restarts == 0 || budget.steps == 0)
        throw InvalidParameter("search budget must be positive");

    SearchObjective objective;
    objective.n = povm.size();
    objective.support_cutoff = tol.zero;
    objective.joint_elements.reserve(objective.n * objective.n);
    for (std::size_t j = 0; j < objective.n; ++j)
        for (std::size_t k = 0; k < objective.n; ++k)
            objective.joint_elements.push_back(kron(povm.element(j), povm.element(k)));

    ComplexMatrix probe(2, 2);
    probe(0, 0) = 1.0;  // probe fixed at |0><0|
    for (const DensityOperator* input : {&rho, &omega}) {
        objective.joint_inputs.push_back(kron(input->matrix(), probe));
        objective.originals.push_back(measure(povm, *input, tol).probs());
    }

    Rng rng(seed);
    SearchResult best;
    best.merit_hb = std::numeric_limits<double>::infinity();
    std::size_t evals = 0;

    for (std::size_t restart = 0; restart < budget.restarts; ++restart) {
        std::array<double, 15> angles;
        for (double& a : angles) a = (2.0 * rng.uniform() - 1.0) * std::numbers::pi;
        double value = objective(two_qubit_unitary(angles));
        ++evals;

        double step = 0.4;
        for (std::size_t cycle = 0; cycle < budget.steps; ++cycle) {
            bool improved = false;
            for (std::size_t i = 0; i < angles.size(); ++i) {
                for (double sign : {1.0, -1.0}) {
                    std::array<double, 15> trial = angles;
                    trial[i] += sign * step;
                    const double tv = objective(two_qubit_unitary(trial));
                    ++evals;
                    if (tv < value) {
                        value = tv;
                        angles = trial;
                        improved = true;
                        break;
                    }
                }
            }
            if (!improved) {
                step *= 0.5;
                if (step < 1e-13) break;
            }
        }

        if (value < best.merit_hb) {
            best.merit_hb = value;
            best.angles = angles;
        }
        if (best.merit_hb < budget.target) break;
    }

    best.unitary = two_qubit_unitary(best.angles);
    best.evaluations = evals;
    return best;
}

}  // namespace povmclone
