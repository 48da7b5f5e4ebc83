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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "povmclone/measures.hpp"
#include "povmclone/qtypes.hpp"

namespace povmclone {

/// One eavesdropping setup: the intruder entangles a probe with the carrier
/// through `channel`, then the POVM is measured on both output wires.
struct CloningScenario {
    Povm povm;
    KrausChannel channel;        ///< acts on C^{d^2}, carrier ⊗ probe
    DensityOperator probe_init;  ///< probe state, dimension d
    std::vector<DensityOperator> input_set;
};

/// Per-input measurement bookkeeping for a scenario run.
struct InputRecord {
    ProbDist p;  ///< original statistics of the input state
    ProbDist q;  ///< carrier-wire marginal
    ProbDist r;  ///< probe-wire marginal
    JointDist t;
    double relative_entropy = 0.0;  ///< H(t || p⊗p); may be +infinity
    double broadcast_residual = 0.0;
};

struct CloningReport {
    std::vector<InputRecord> inputs;
    double merit_hb = 0.0;  ///< max of the relative entropies; may be +infinity
    std::optional<std::size_t> infinite_input;  ///< first input yielding +infinity
};

CloningReport run_scenario(const CloningScenario& s, const Tolerances& tol = {});

/// Largest deviation of the joint distribution's marginals from p. Zero means
/// the broadcasting standard is met exactly.
double check_broadcasting(const JointDist& t, const ProbDist& p);

enum class CloningVerdict { intolerant, inconclusive };

/// Outcome of the no-cloning test Fcl^2 < F on a state pair.
struct NoCloningCheck {
    CloningVerdict verdict = CloningVerdict::inconclusive;
    double fidelity_value = 0.0;            ///< F
    double classical_fidelity_value = 0.0;  ///< Fcl
    bool degenerate = false;                ///< F within tol.norm of 0 or 1
};

/// Decide whether perfect cloning of the POVM is excluded over {rho, omega}.
/// `intolerant` requires the strict inequality Fcl^2 < F - tol.strict;
/// F near 0 or 1 is flagged degenerate (the test cannot apply there).
NoCloningCheck check_no_cloning_condition(const Povm& povm, const DensityOperator& rho,
                                          const DensityOperator& omega,
                                          const Tolerances& tol = {});

/// Partial-fidelity variant Fcl_k^2 < F_kappa with kappa = (2n - k) k, where
/// n is the POVM element count. Exploratory: the exact classical definition
/// is a reading of the cited criterion, so results are reported, never
/// asserted. Requires k < n and kappa < n^2; F_kappa is an empty sum (zero)
/// once kappa reaches the state dimension.
struct PartialNoCloningCheck {
    std::size_t k = 0;
    std::size_t kappa = 0;
    double classical_partial = 0.0;  ///< Fcl_k(p, q)
    double quantum_partial = 0.0;    ///< F_kappa(rho, omega)
    bool predicate_holds = false;    ///< Fcl_k^2 < F_kappa - tol.strict
    bool exploratory = true;
};

PartialNoCloningCheck check_no_cloning_partial(const Povm& povm, const DensityOperator& rho,
                                               const DensityOperator& omega, std::size_t k,
                                               const Tolerances& tol = {});

/// Search controls for the heuristic cloner search. The descent runs
/// `steps` full coordinate cycles per restart, shrinking its step when a
/// cycle brings no improvement, and the whole search stops early once the
/// merit drops below `target`.
struct SearchBudget {
    std::size_t restarts = 200;
    std::size_t steps = 500;
    double target = 1e-10;
};

struct SearchResult {
    std::array<double, 15> angles{};  ///< canonical two-qubit decomposition
    double merit_hb = 0.0;            ///< best merit found
    ComplexMatrix unitary;            ///< 4x4, computational basis
    std::size_t evaluations = 0;
};

/// Two-qubit unitary from the 15-angle canonical decomposition
/// (A1 ⊗ A2) exp(i (c1 XX + c2 YY + c3 ZZ)) (B1 ⊗ B2).
ComplexMatrix two_qubit_unitary(const std::array<double, 15>& angles);

/// Heuristic probe of the no-cloning bound: minimize the cloning merit over
/// two-qubit unitaries (probe fixed at |0><0|) by seeded random restarts plus
/// coordinate descent. Reports the best channel found; no global-optimality
/// claim is made. Qubit inputs only.
SearchResult search_perfect_cloner(const Povm& povm, const DensityOperator& rho,
                                   const DensityOperator& omega, const SearchBudget& budget = {},
                                   std::uint64_t seed = 0xB92, const Tolerances& tol = {});

}  // namespace povmclone
