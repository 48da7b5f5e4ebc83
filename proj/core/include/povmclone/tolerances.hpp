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

#include <string>

namespace povmclone {

/// Every numerical threshold used by the library, in one place.
///
/// All checks read their cutoff from an instance of this struct, so a caller
/// (notably the CLI via `--tol name=value`) can tighten or loosen a single
/// threshold without touching code. Defaults are what the test suites pin.
struct Tolerances {
    double herm = 1e-10;    ///< Hermiticity defect max|m_ij - conj(m_ji)|
    double unit = 1e-10;    ///< unitarity defect max|(U†U - 1)_ij|
    double recon = 1e-9;    ///< eigen reconstruction, projector algebra
    double rank = 1e-12;    ///< linear-dependence cutoff in Gram-Schmidt
    double psd = 1e-10;     ///< eigenvalues in [-psd, 0] are clamped to zero
    double norm = 1e-10;    ///< trace / normalization defect
    double imag = 1e-10;    ///< residual imaginary part of probabilities
    double zero = 1e-12;    ///< support cutoff for probabilities
    double eq = 1e-8;       ///< equality-condition witness residual
    double strict = 1e-12;  ///< margin separating strict inequalities from ties
    double angle = 1e-9;    ///< open-interval margin for angular parameters

    // Jacobi eigensolver controls. The off-diagonal target is taken relative
    // to max(1, ||A||_F) so unit-scale operators see the absolute value.
    double jacobi_offdiag = 1e-13;
    int jacobi_max_sweeps = 100;

    // Margins for the invariant checks run by the property suite and the
    // acceptance harness.
    double qc_bound = 1e-10;         ///< F <= Fcl + qc_bound
    double monotonicity = 1e-9;      ///< allowed fidelity decrease under channels
    double multiplicativity = 1e-9;  ///< |F(a⊗b, c⊗d) - F(a,c) F(b,d)|
    double povm_optimality = 1e-8;   ///< optimal-POVM equality defect
    double purification = 1e-8;      ///< purification-overlap equality defect
    double partial_mono = 1e-9;      ///< partial fidelity decrease under unistochastic maps
    double factorized = 1e-10;       ///< max|t - p⊗p| counting as a factorized joint
    double contrapositive = 1e-8;    ///< F <= Fcl^2 + contrapositive on cloned cases
    double proof_chain = 1e-9;       ///< F(Omega', Omega'') <= Fcl(t', t'') + proof_chain
    double marginal = 1e-12;         ///< joint-marginal bookkeeping
    double broadcast = 1e-12;        ///< broadcasting residual treated as perfect
    double lemma2 = 1e-9;            ///< saturating pure-state equality defect
    double theorem3 = 1e-8;          ///< saturating mixed-state equality defect
    double clone_merit = 1e-9;       ///< relative-entropy merit counting as perfect cloning
    double search_target = 1e-6;     ///< merit the cloner search is expected to beat

    /// Assign one threshold by its field name. Throws InvalidParameter on an
    /// unknown name.
    void set_by_name(const std::string& name, double value);
};

}  // namespace povmclone
