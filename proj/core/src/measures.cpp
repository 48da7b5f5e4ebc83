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

#include "povmclone/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "povmclone/errors.hpp"
#include "povmclone/linalg.hpp"

namespace povmclone {

namespace {

// Singular values of sqrt(rho) sqrt(omega), descending, computed as the
// eigenvalue roots of sqrt(rho) omega sqrt(rho). Mathematically identical
// and needs only the Hermitian solver. Eigenvalues at or below tol.zero are
// exact zeros buried in solver noise; taking their square root would inflate
// the sum by ~1e-8, so they are dropped.
std::vector<double> fidelity_singular_values(const DensityOperator& rho,
                                             const DensityOperator& omega,
                                             const Tolerances& tol) {
    if (rho.dim() != omega.dim())
        throw DimensionMismatch("fidelity of states with unequal dimensions");
    const ComplexMatrix sr = sqrt_psd(rho.matrix(), tol);
    const ComplexMatrix core = hermitian_part(sr * omega.matrix() * sr);
    EigResult eig = hermitian_eig(core, tol);
    std::vector<double> s(eig.eigenvalues.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        s[i] = eig.eigenvalues[i] > tol.zero ? std::sqrt(eig.eigenvalues[i]) : 0.0;
    return s;
}

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

double relative_entropy_flat(std::span<const double> p, std::span<const double> q,
                             const Tolerances& tol) {
    if (p.size() != q.size()) throw LengthMismatch("relative entropy of unequal shapes");
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= tol.zero) continue;  // 0 ln(0/q) = 0
        if (q[i] <= tol.zero) return std::numeric_limits<double>::infinity();
        s += p[i] * std::log(p[i] / q[i]);
    }
    if (s < 0.0 && s > -1e-12) s = 0.0;  // round-off below the exact zero
    return s;
}

}  // namespace

double fidelity(const DensityOperator& rho, const DensityOperator& omega, const Tolerances& tol) {
    const std::vector<double> s = fidelity_singular_values(rho, omega, tol);
    double f = 0.0;
    for (double x : s) f += x;
    return clamp01(f);
}

double classical_fidelity(const ProbDist& p, const ProbDist& q) {
    if (p.size() != q.size()) throw LengthMismatch("classical fidelity of unequal lengths");
    double f = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) f += std::sqrt(p[i] * q[i]);
    return clamp01(f);
}

double classical_fidelity(const JointDist& t, const JointDist& s) {
    if (t.rows() != s.rows() || t.cols() != s.cols())
        throw LengthMismatch("classical fidelity of unequal joint shapes");
    double f = 0.0;
    for (std::size_t i = 0; i < t.data().size(); ++i)
        f += std::sqrt(t.data()[i] * s.data()[i]);
    return clamp01(f);
}

double partial_fidelity(const DensityOperator& rho, const DensityOperator& omega,
                        PartialFidelitySpec spec, const Tolerances& tol) {
    if (spec.k >= rho.dim())
        throw InvalidParameter("partial fidelity index must be below the dimension");
    const std::vector<double> s = fidelity_singular_values(rho, omega, tol);
    double f = 0.0;
    for (std::size_t j = spec.k; j < s.size(); ++j) f += s[j];
    return f;
}

double classical_partial_fidelity(const ProbDist& p, const ProbDist& q, std::size_t k) {
    if (p.size() != q.size()) throw LengthMismatch("classical fidelity of unequal lengths");
    std::vector<double> terms(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) terms[i] = std::sqrt(p[i] * q[i]);
    std::sort(terms.begin(), terms.end(), std::greater<>());
    double f = 0.0;
    for (std::size_t i = k; i < terms.size(); ++i) f += terms[i];
    return f;
}

double relative_entropy(const ProbDist& p, const ProbDist& q, const Tolerances& tol) {
    return relative_entropy_flat(p.probs(), q.probs(), tol);
}

double relative_entropy(const JointDist& t, const JointDist& s, const Tolerances& tol) {
    if (t.rows() != s.rows() || t.cols() != s.cols())
        throw LengthMismatch("relative entropy of unequal joint shapes");
    return relative_entropy_flat(t.data(), s.data(), tol);
}

Povm optimal_fidelity_povm(const DensityOperator& rho, const DensityOperator& omega,
                           const Tolerances& tol) {
    if (rho.dim() != omega.dim())
        throw DimensionMismatch("optimal POVM for states with unequal dimensions");
    const std::size_t d = rho.dim();

    // Work on the support of rho: build the geometric-mean observable
    // rho^{-1/2} |sqrt(rho) sqrt(omega)| rho^{-1/2} there, measure in its
    // eigenbasis, and complete the measurement with the kernel eigenvectors.
    // Kernel directions carry p_m = 0 and contribute nothing to the
    // classical fidelity, so the equality is exact for singular rho too.
    EigResult rho_eig = hermitian_eig(rho.matrix(), tol);
    std::size_t rank = 0;
    while (rank < d && rho_eig.eigenvalues[rank] > tol.zero) ++rank;
    if (rank == 0) throw SingularState("state has an empty support");

    ComplexMatrix supp(d, rank);
    for (std::size_t j = 0; j < rank; ++j)
        for (std::size_t i = 0; i < d; ++i) supp(i, j) = rho_eig.eigenvectors(i, j);

    // omega compressed to the support basis, where rho is exactly diagonal.
    const ComplexMatrix omega_s = hermitian_part(supp.adjoint() * omega.matrix() * supp);
    ComplexMatrix mid(rank, rank);
    {
        ComplexMatrix scaled = omega_s;  // sqrt(rho_s) omega_s sqrt(rho_s)
        for (std::size_t i = 0; i < rank; ++i)
            for (std::size_t j = 0; j < rank; ++j)
                scaled(i, j) *= std::sqrt(rho_eig.eigenvalues[i] * rho_eig.eigenvalues[j]);
        mid = sqrt_psd(hermitian_part(scaled), tol);
    }
    ComplexMatrix observable = mid;  // rho_s^{-1/2} mid rho_s^{-1/2}
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j)
            observable(i, j) /= std::sqrt(rho_eig.eigenvalues[i] * rho_eig.eigenvalues[j]);

    EigResult obs_eig = hermitian_eig(hermitian_part(observable), tol);
    std::vector<ComplexMatrix> elements;
    elements.reserve(d);
    for (std::size_t j = 0; j < rank; ++j) {
        const std::vector<Complex> col = mat_vec(supp, obs_eig.eigenvectors.column(j));
        elements.push_back(ComplexMatrix::outer(col, col));
    }
    for (std::size_t j = rank; j < d; ++j) {
        const std::vector<Complex> col = rho_eig.eigenvectors.column(j);
        elements.push_back(ComplexMatrix::outer(col, col));
    }
    const Povm pvm(std::move(elements), tol);

    if (rank < d) {
        const double achieved =
            classical_fidelity(measure(pvm, rho, tol), measure(pvm, omega, tol));
        const double want = fidelity(rho, omega, tol);
        if (std::abs(achieved - want) > tol.povm_optimality)
            throw SingularState("support-restricted optimal POVM misses the fidelity by " +
                                std::to_string(std::abs(achieved - want)));
    }
    return pvm;
}

EqualityWitness check_equality_condition(const Povm& povm, const DensityOperator& rho,
                                         const DensityOperator& omega, const Tolerances& tol) {
    if (povm.dim() != rho.dim() || povm.dim() != omega.dim())
        throw DimensionMismatch("equality condition with mismatched dimensions");
    const ComplexMatrix sr = sqrt_psd(rho.matrix(), tol);
    const ComplexMatrix so = sqrt_psd(omega.matrix(), tol);

    EqualityWitness witness;
    witness.z.resize(povm.size());
    for (std::size_t m = 0; m < povm.size(); ++m) {
        const ComplexMatrix root = sqrt_psd(povm.element(m), tol);
        const ComplexMatrix a = root * sr;
        const ComplexMatrix b = root * so;
        const double na = a.frobenius_norm();
        const double nb = b.frobenius_norm();
        if (na <= tol.zero) {
            // The pair (0, B) is linearly dependent for any B; no finite z.
            witness.z[m] = std::nullopt;
            continue;
        }
        Complex dot = 0.0;
        for (std::size_t i = 0; i < a.entries().size(); ++i)
            dot += std::conj(a.entries()[i]) * b.entries()[i];
        const Complex z = dot / Complex{na * na};
        double res2 = nb * nb - std::norm(dot) / (na * na);
        witness.z[m] = z;
        witness.max_residual = std::max(witness.max_residual, std::sqrt(std::max(res2, 0.0)));
    }
    witness.passed = witness.max_residual <= tol.eq;
    return witness;
}

TransitivityResult check_transitivity(const Povm& povm, const DensityOperator& rho,
                                      const DensityOperator& omega, const DensityOperator& varrho,
                                      const Tolerances& tol) {
    const EqualityWitness w1 = check_equality_condition(povm, rho, omega, tol);
    const EqualityWitness w2 = check_equality_condition(povm, omega, varrho, tol);

    TransitivityResult result;
    if (!w1.passed || !w2.passed) return result;  // chain premise not met
    result.applicable = true;

    const ComplexMatrix sr = sqrt_psd(rho.matrix(), tol);
    const ComplexMatrix sv = sqrt_psd(varrho.matrix(), tol);
    for (std::size_t m = 0; m < povm.size(); ++m) {
        const ComplexMatrix root = sqrt_psd(povm.element(m), tol);
        const ComplexMatrix a = root * sr;
        const ComplexMatrix c = root * sv;
        double res;
        if (w1.z[m].has_value() && w2.z[m].has_value()) {
            const Complex zz = *w1.z[m] * *w2.z[m];
            ComplexMatrix diff = a;
            diff *= zz;
            diff -= c;
            res = diff.frobenius_norm();
        } else {
            // A vanishing link leaves the product witness undefined; the
            // endpoint must vanish too for the chain to hold.
            res = c.frobenius_norm();
        }
        result.max_residual = std::max(result.max_residual, res);
    }
    result.holds = result.max_residual <= tol.eq;
    return result;
}

namespace {

// Ancilla-overlap matrix Y[b,c] = sum_a conj(Psi[a,b]) Phi[a,c], so that
// <Psi| (1 ⊗ V) |Phi> = sum_{b,c} V[b,c] Y[b,c].
ComplexMatrix ancilla_overlap(const PureState& psi, const PureState& phi, std::size_t d) {
    ComplexMatrix y(d, d);
    for (std::size_t b = 0; b < d; ++b)
        for (std::size_t c = 0; c < d; ++c) {
            Complex s = 0.0;
            for (std::size_t a = 0; a < d; ++a)
                s += std::conj(psi.amplitudes()[a * d + b]) * phi.amplitudes()[a * d + c];
            y(b, c) = s;
        }
    return y;
}

}  // namespace

double purification_overlap_canonical(const DensityOperator& rho, const DensityOperator& omega,
                                      const Tolerances& tol) {
    const PureState psi = purify(rho, tol);
    const PureState phi = purify(omega, tol);
    return std::abs(psi.overlap(phi));
}

double purification_overlap_optimal(const DensityOperator& rho, const DensityOperator& omega,
                                    const Tolerances& tol) {
    if (rho.dim() != omega.dim())
        throw DimensionMismatch("purification overlap of unequal dimensions");
    const std::size_t d = rho.dim();
    const PureState psi = purify(rho, tol);
    const PureState phi = purify(omega, tol);
    const ComplexMatrix y = ancilla_overlap(psi, phi, d);

    // The optimum of |tr(V Y^T)| over unitaries V comes from the polar
    // factor of Y^T; build it explicitly and evaluate the overlap it yields.
    const SvdResult dec = svd_square(y.transpose(), tol);
    const ComplexMatrix v = dec.v * dec.u.adjoint();
    Complex overlap = 0.0;
    for (std::size_t b = 0; b < d; ++b)
        for (std::size_t c = 0; c < d; ++c) overlap += v(b, c) * y(b, c);
    return std::abs(overlap);
}

}  // namespace povmclone
