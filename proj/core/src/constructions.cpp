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

#include "povmclone/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <tuple>

#include "povmclone/errors.hpp"
#include "povmclone/linalg.hpp"

namespace povmclone {

namespace {

void require_eta(double eta, const Tolerances& tol) {
    const double upper = std::numbers::pi / 4;
    if (!(eta >= tol.angle && eta <= upper - tol.angle))
        throw InvalidParameter("eta must lie strictly inside (0, pi/4), got " +
                               std::to_string(eta));
}

PureState qubit(double c0, double c1) { return PureState({Complex{c0}, Complex{c1}}); }

}  // namespace

B92States b92_states(double eta, const Tolerances& tol) {
    require_eta(eta, tol);
    const double c = std::cos(eta);
    const double s = std::sin(eta);
    return B92States{qubit(c, s), qubit(c, -s), qubit(-s, c), qubit(-s, -c)};
}

Povm b92_povm(double eta, const Tolerances& tol) {
    const B92States st = b92_states(eta, tol);
    std::vector<ComplexMatrix> elements;
    // Element order {eta+, theta+, eta-, theta-}, each halved.
    for (const PureState* s : {&st.eta_plus, &st.theta_plus, &st.eta_minus, &st.theta_minus}) {
        ComplexMatrix e = s->projector();
        e *= Complex{0.5};
        elements.push_back(std::move(e));
    }
    return Povm(std::move(elements), tol);
}

IntoleranceSurvey intolerance_survey(double eta, const Tolerances& tol) {
    const B92States st = b92_states(eta, tol);
    const Povm povm = b92_povm(eta, tol);

    IntoleranceSurvey survey;
    survey.eta = eta;
    const std::array<std::tuple<const char*, const PureState*, const char*, const PureState*>, 4>
        pairs = {{{"eta+", &st.eta_plus, "eta-", &st.eta_minus},
                  {"theta+", &st.theta_plus, "theta-", &st.theta_minus},
                  {"eta+", &st.eta_plus, "theta-", &st.theta_minus},
                  {"eta-", &st.eta_minus, "theta+", &st.theta_plus}}};
    survey.all_intolerant = true;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& [name1, s1, name2, s2] = pairs[i];
        PairVerdict verdict;
        verdict.first = name1;
        verdict.second = name2;
        verdict.check = check_no_cloning_condition(povm, DensityOperator::pure(*s1, tol),
                                                   DensityOperator::pure(*s2, tol), tol);
        if (verdict.check.verdict != CloningVerdict::intolerant) survey.all_intolerant = false;
        survey.pairs[i] = std::move(verdict);
    }
    return survey;
}

namespace {

struct Lemma2Blocks {
    std::vector<std::vector<Complex>> projected;  // P_m |psi> per block
    std::vector<double> p;                        // block probabilities
    std::vector<bool> active;                     // p_m > tol.zero
    std::size_t min_block = 0;
    double floor = 0.0;
};

Lemma2Blocks split_into_blocks(const Pvm& pvm, const PureState& psi, const Tolerances& tol) {
    Lemma2Blocks blocks;
    const std::size_t count = pvm.size();
    blocks.projected.resize(count);
    blocks.p.resize(count);
    blocks.active.resize(count);

    bool any = false;
    double min_p = 2.0;
    for (std::size_t m = 0; m < count; ++m) {
        blocks.projected[m] = mat_vec(pvm.projectors()[m], psi.amplitudes());
        const double pn = norm2(blocks.projected[m]);
        blocks.p[m] = pn * pn;
        blocks.active[m] = blocks.p[m] > tol.zero;
        if (blocks.active[m]) {
            any = true;
            if (blocks.p[m] < min_p) {
                min_p = blocks.p[m];
                blocks.min_block = m;
            }
        }
    }
    if (!any) throw ZeroProbabilityBlock("the state has no support on any block");
    blocks.floor = std::sqrt(min_p);
    return blocks;
}

// Block weights on the straight path between the f = 1 solution (all ones)
// and the floor solution (all weight on the minimal block), normalized so
// sum gamma_m^2 p_m = 1. The resulting overlap sum gamma_m p_m is continuous
// in s with endpoints 1 and sqrt(min p).
std::vector<double> path_weights(const Lemma2Blocks& blocks, double s) {
    const double g_min = 1.0 / std::sqrt(blocks.p[blocks.min_block]);
    std::vector<double> gamma(blocks.p.size(), 0.0);
    double norm = 0.0;
    for (std::size_t m = 0; m < gamma.size(); ++m) {
        if (!blocks.active[m]) continue;
        gamma[m] = (1.0 - s) + (m == blocks.min_block ? s * g_min : 0.0);
        norm += gamma[m] * gamma[m] * blocks.p[m];
    }
    norm = std::sqrt(norm);
    for (double& g : gamma) g /= norm;
    return gamma;
}

double path_overlap(const Lemma2Blocks& blocks, const std::vector<double>& gamma) {
    double overlap = 0.0;
    for (std::size_t m = 0; m < gamma.size(); ++m) overlap += gamma[m] * blocks.p[m];
    return overlap;
}

}  // namespace

PureState construct_saturating_pure_state(const Pvm& pvm, const PureState& psi, double f,
                                          const Tolerances& tol) {
    if (pvm.dim() != psi.dim()) throw DimensionMismatch("PVM and state dimensions differ");
    const Lemma2Blocks blocks = split_into_blocks(pvm, psi, tol);

    if (f < blocks.floor - 1e-12 || f > 1.0 + 1e-12)
        throw OutOfRange("target overlap outside [sqrt(min p), 1] = [" +
                             std::to_string(blocks.floor) + ", 1]",
                         f);
    f = std::clamp(f, blocks.floor, 1.0);

    std::vector<double> gamma;
    if (f >= 1.0 - 1e-12) {
        gamma = path_weights(blocks, 0.0);
    } else if (f <= blocks.floor + 1e-12) {
        gamma = path_weights(blocks, 1.0);
    } else {
        double lo = 0.0;  // overlap 1
        double hi = 1.0;  // overlap floor
        for (int iter = 0; iter < 200; ++iter) {
            const double mid = 0.5 * (lo + hi);
            const double overlap = path_overlap(blocks, path_weights(blocks, mid));
            if (overlap > f)
                lo = mid;
            else
                hi = mid;
            if (hi - lo < 1e-16) break;
        }
        gamma = path_weights(blocks, 0.5 * (lo + hi));
    }

    // phi = sum_m gamma_m P_m psi; phases cancel blockwise so the overlap and
    // the classical fidelity coincide by construction.
    std::vector<Complex> phi(psi.dim(), Complex{});
    for (std::size_t m = 0; m < gamma.size(); ++m) {
        if (gamma[m] == 0.0) continue;
        for (std::size_t i = 0; i < phi.size(); ++i) phi[i] += gamma[m] * blocks.projected[m][i];
    }
    const double n = norm2(phi);
    for (Complex& x : phi) x /= n;
    return PureState(std::move(phi), tol);
}

DensityOperator construct_saturating_mixed_state(const Pvm& pvm, const DensityOperator& rho,
                                                 double f, const Tolerances& tol) {
    if (pvm.dim() != rho.dim()) throw DimensionMismatch("PVM and state dimensions differ");
    const std::size_t d = pvm.dim();

    // Lift to {P_m ⊗ 1} on the doubled space, build the pure saturating state
    // against a purification of rho, trace the ancilla back out.
    std::vector<ComplexMatrix> lifted;
    lifted.reserve(pvm.size());
    const ComplexMatrix eye = ComplexMatrix::identity(d);
    for (const ComplexMatrix& p : pvm.projectors()) lifted.push_back(kron(p, eye));
    const Pvm lifted_pvm(std::move(lifted), tol);

    const PureState psi = purify(rho, tol);
    const PureState phi = construct_saturating_pure_state(lifted_pvm, psi, f, tol);
    return DensityOperator(
        hermitian_part(partial_trace(phi.projector(), d, d, Subsystem::A)), tol);
}

EtaThetaCoefficients eta_theta_coefficients(double eta, double angle) {
    const double s2 = std::sin(2.0 * eta);
    const Complex alpha = std::polar(1.0, angle / 2.0) * std::cos(angle / 2.0) * s2;
    const Complex beta = Complex{-std::sin(eta) * std::sin(eta)} +
                         std::polar(1.0, angle) * std::cos(eta) * std::cos(eta);
    return {alpha, beta};
}

namespace {

CloneExampleParams assemble_params(double eta, double phi, double phi1, double phi2) {
    const EtaThetaCoefficients full = eta_theta_coefficients(eta, phi);
    const EtaThetaCoefficients first = eta_theta_coefficients(eta, phi1);
    const EtaThetaCoefficients second = eta_theta_coefficients(eta, phi2);

    CloneExampleParams params;
    params.eta = eta;
    params.phi = phi;
    params.phi1 = phi1;
    params.phi2 = phi2;
    params.u = first.alpha * second.beta / full.beta;
    params.u2 = first.beta * second.alpha / full.beta;
    params.v = first.beta * second.beta / full.beta;
    params.a = 1.0 / std::sqrt(std::norm(params.u) + std::norm(params.v));
    return params;
}

}  // namespace

CloneExampleParams solve_clone_angles(double eta, const Tolerances& tol) {
    require_eta(eta, tol);
    const double s2 = std::sin(2.0 * eta);
    const double cos_phi1 = s2 / (2.0 - s2);
    const double phi1 = std::acos(cos_phi1);
    return assemble_params(eta, 2.0 * phi1, phi1, phi1);
}

CloneExampleParams solve_clone_angles_asymmetric(double eta, double phi1, const Tolerances& tol) {
    require_eta(eta, tol);
    if (!(phi1 > tol.angle && phi1 < std::numbers::pi - tol.angle))
        throw InvalidParameter("phi' must lie strictly inside (0, pi)");
    const double s2 = std::sin(2.0 * eta);

    // Overlap preservation with phi = phi1 + phi2 reduces to
    // cos((phi1 + x)/2) = sin(2 eta) cos(phi1/2) cos(x/2); the left side
    // starts above the right at x = 0 and drops below it by x = pi.
    auto gap = [&](double x) {
        return std::cos(0.5 * (phi1 + x)) - s2 * std::cos(0.5 * phi1) * std::cos(0.5 * x);
    };
    double lo = 0.0;
    double hi = std::numbers::pi;
    if (!(gap(lo) > 0.0 && gap(hi) < 0.0))
        throw InvalidParameter("no matching phi'' for this phi'");
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        (gap(mid) > 0.0 ? lo : hi) = mid;
        if (hi - lo < 1e-15) break;
    }
    const double phi2 = 0.5 * (lo + hi);
    return assemble_params(eta, phi1 + phi2, phi1, phi2);
}

ComplexMatrix build_cloning_unitary(const CloneExampleParams& params, const Tolerances& tol) {
    // Basis order {|ηη>, |ηθ>, |θη>, |θθ>}. Columns 0 and 2 are pinned by the
    // cloner specification; column 2 is unit-length when the parameters are
    // consistent.
    std::vector<Complex> pinned{Complex{}, params.u, params.u2, params.v};
    const double n = norm2(pinned);
    if (std::abs(n - 1.0) > tol.recon)
        throw InvalidParameter("inconsistent cloner parameters, constraint column norm " +
                               std::to_string(n));
    for (Complex& x : pinned) x /= n;

    ComplexMatrix fixed(4, 2);
    fixed(0, 0) = 1.0;
    fixed.set_column(1, pinned);

    ComplexMatrix candidates(4, 2);
    candidates(2, 0) = 1.0;
    candidates(3, 1) = 1.0;

    const ComplexMatrix gs = gram_schmidt_complete(fixed, candidates, tol);

    ComplexMatrix u(4, 4);
    u.set_column(0, gs.column(0));
    u.set_column(2, gs.column(1));
    u.set_column(1, gs.column(2));
    u.set_column(3, gs.column(3));
    return u;
}

ComplexMatrix clone_unitary_computational(const CloneExampleParams& params,
                                          const Tolerances& tol) {
    const ComplexMatrix u = build_cloning_unitary(params, tol);
    const double c = std::cos(params.eta);
    const double s = std::sin(params.eta);
    const ComplexMatrix q = ComplexMatrix::from_rows({{c, -s}, {s, c}});  // columns |η>, |θ>
    const ComplexMatrix w = kron(q, q);
    return w * u * w.adjoint();
}

PureState clone_state_eta(double eta, const Tolerances& tol) {
    require_eta(eta, tol);
    return qubit(std::cos(eta), std::sin(eta));
}

PureState clone_state_phi(const CloneExampleParams& params, const Tolerances& tol) {
    require_eta(params.eta, tol);
    return PureState({Complex{std::sin(params.eta)},
                      std::polar(1.0, params.phi) * std::cos(params.eta)});
}

CloningReport verify_perfect_cloning(double eta, const Tolerances& tol) {
    const CloneExampleParams params = solve_clone_angles(eta, tol);
    const PureState eta_state = clone_state_eta(eta, tol);
    const PureState phi_state = clone_state_phi(params, tol);

    CloningScenario scenario{
        Pvm::computational(2).to_povm(tol),
        KrausChannel::unitary(clone_unitary_computational(params, tol), tol),
        DensityOperator::pure(eta_state, tol),
        {DensityOperator::pure(eta_state, tol), DensityOperator::pure(phi_state, tol)}};
    return run_scenario(scenario, tol);
}

PublishedMatrixComparison compare_published_matrix(const CloneExampleParams& params,
                                                   const Tolerances& tol) {
    const Complex u = params.u;
    const Complex v = params.v;
    const double a = params.a;
    const double au = std::abs(u);

    ComplexMatrix published(4, 4);
    published(0, 0) = 1.0;
    published(1, 1) = a * u * std::conj(v) / au;
    published(3, 1) = -a * au;
    published(1, 2) = u;
    published(2, 2) = u;
    published(3, 2) = v;
    published(1, 3) = a * au * au;
    published(2, 3) = -1.0 / a;
    published(3, 3) = a * v * std::conj(u);

    const ComplexMatrix ours = build_cloning_unitary(params, tol);

    PublishedMatrixComparison cmp;
    cmp.published_unitarity_defect = unitarity_defect(published);
    for (std::size_t col : {std::size_t{0}, std::size_t{2}}) {
        const std::vector<Complex> pub = published.column(col);
        const std::vector<Complex> mine = ours.column(col);
        for (std::size_t i = 0; i < 4; ++i)
            cmp.fixed_column_defect =
                std::max(cmp.fixed_column_defect, std::abs(pub[i] - mine[i]));
    }
    // Free columns should live in the orthocomplement of the pinned pair;
    // report the norm they leak into the pinned span.
    for (std::size_t col : {std::size_t{1}, std::size_t{3}}) {
        const std::vector<Complex> w = published.column(col);
        double leak2 = 0.0;
        for (std::size_t pinned : {std::size_t{0}, std::size_t{2}})
            leak2 += std::norm(inner(ours.column(pinned), w));
        cmp.complement_span_defect = std::max(cmp.complement_span_defect, std::sqrt(leak2));
    }
    return cmp;
}

}  // namespace povmclone
