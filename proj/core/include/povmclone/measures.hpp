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

#pragma once

#include <optional>
#include <vector>

#include "povmclone/qtypes.hpp"

namespace povmclone {

/// Uhlmann fidelity F(rho, omega) = tr|sqrt(rho) sqrt(omega)|, computed as
/// the eigenvalue-root sum of sqrt(rho) omega sqrt(rho). Symmetric, in [0,1].
double fidelity(const DensityOperator& rho, const DensityOperator& omega,
                const Tolerances& tol = {});

/// Bhattacharyya coefficient sum_j sqrt(p_j q_j).
double classical_fidelity(const ProbDist& p, const ProbDist& q);
double classical_fidelity(const JointDist& t, const JointDist& s);

struct PartialFidelitySpec {
    std::size_t k = 0;  ///< number of largest singular terms excluded; 0 <= k < d
};

/// F_k(rho, omega): the fidelity sum with the k largest singular values of
/// sqrt(rho) sqrt(omega) excluded. F_0 equals fidelity().
double partial_fidelity(const DensityOperator& rho, const DensityOperator& omega,
                        PartialFidelitySpec spec, const Tolerances& tol = {});

/// Classical analogue: the terms sqrt(p_j q_j) sorted descending with the k
/// largest dropped. k >= length gives 0.
double classical_partial_fidelity(const ProbDist& p, const ProbDist& q, std::size_t k);

/// Relative entropy sum_j p_j ln(p_j / q_j), natural logarithm.
/// Returns +infinity when p has support where q has none (p_j > tol.zero,
/// q_j <= tol.zero); terms with p_j <= tol.zero contribute zero.
double relative_entropy(const ProbDist& p, const ProbDist& q, const Tolerances& tol = {});
double relative_entropy(const JointDist& t, const JointDist& s, const Tolerances& tol = {});

/// A POVM (in fact a PVM) whose outcome statistics attain
/// classical_fidelity == fidelity(rho, omega). Built from the eigenbasis of
/// rho^{-1/2} sqrt( sqrt(rho) omega sqrt(rho) ) rho^{-1/2}; a singular rho is
/// regularized by (1-eps) rho + eps 1/d with eps = 1e-8, and SingularState is
/// thrown when the regularized basis misses the equality within
/// tol.povm_optimality.
Povm optimal_fidelity_povm(const DensityOperator& rho, const DensityOperator& omega,
                           const Tolerances& tol = {});

/// Witness for the per-element linear relation
/// z_m M_m^{1/2} rho^{1/2} = M_m^{1/2} omega^{1/2}.
///
/// Each z_m is the least-squares fit; the recorded residual is the Frobenius
/// distance of the fitted relation. An element whose left side vanishes has
/// no finite z (the pair is trivially dependent), recorded as absent with
/// zero residual; absent is also used when both sides vanish.
///
/// The relation characterizes classical_fidelity == fidelity only for
/// commuting pairs; for anything else treat a pass as a sufficient-condition
/// probe, not a criterion.
struct EqualityWitness {
    std::vector<std::optional<Complex>> z;  ///< one entry per POVM element
    double max_residual = 0.0;
    bool passed = false;  ///< max_residual <= tol.eq
};

EqualityWitness check_equality_condition(const Povm& povm, const DensityOperator& rho,
                                         const DensityOperator& omega, const Tolerances& tol = {});

/// Transitivity of the equality relation along a chain rho -> omega -> varrho.
/// When both adjacent pairs pass, the third pair is verified directly with
/// the product witnesses xi_m z_m. When they do not, the chain is reported as
/// not applicable (holds vacuously).
struct TransitivityResult {
    bool applicable = false;
    bool holds = true;
    double max_residual = 0.0;
};

TransitivityResult check_transitivity(const Povm& povm, const DensityOperator& rho,
                                      const DensityOperator& omega, const DensityOperator& varrho,
                                      const Tolerances& tol = {});

/// |<Psi|Phi>| for the canonical purifications. Never exceeds the fidelity.
double purification_overlap_canonical(const DensityOperator& rho, const DensityOperator& omega,
                                      const Tolerances& tol = {});

/// Overlap achieved after applying the optimal ancilla unitary to the
/// canonical purification of omega. Equals the fidelity up to round-off.
double purification_overlap_optimal(const DensityOperator& rho, const DensityOperator& omega,
                                    const Tolerances& tol = {});

}  // namespace povmclone
