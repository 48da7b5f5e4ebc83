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
#include <string>

#include "povmclone/cloning.hpp"
#include "povmclone/qtypes.hpp"

namespace povmclone {

/// The two-nonorthogonal-state family
///   |eta±> = cos(eta)|0> ± sin(eta)|1>,
///   |theta±> = -sin(eta)|0> ± cos(eta)|1>,
/// with eta in the open interval (0, pi/4).
struct B92States {
    PureState eta_plus;
    PureState eta_minus;
    PureState theta_plus;
    PureState theta_minus;
};

B92States b92_states(double eta, const Tolerances& tol = {});

/// The four-element POVM {|eta+>, |theta+>, |eta->, |theta->} / 2, in that
/// element order.
Povm b92_povm(double eta, const Tolerances& tol = {});

struct PairVerdict {
    std::string first;
    std::string second;
    NoCloningCheck check;
};

/// The no-cloning test over all four nonorthogonal pairs of the family.
struct IntoleranceSurvey {
    double eta = 0.0;
    std::array<PairVerdict, 4> pairs;
    bool all_intolerant = false;
};

IntoleranceSurvey intolerance_survey(double eta, const Tolerances& tol = {});

/// Saturating pure state for a PVM: given |psi> with block probabilities
/// p_m, returns |phi> = sum_m gamma_m P_m |psi> with nonnegative block
/// weights solved (bisection on a one-parameter family between the f=1 and
/// floor solutions) so that
///   |<psi|phi>| == classical_fidelity(p, q) == f.
/// Valid targets are f in [ sqrt(min p_m), 1 ], the minimum over blocks with
/// p_m > tol.zero; zero-probability blocks carry no weight. Throws
/// OutOfRange(f) outside that interval and ZeroProbabilityBlock when no block
/// has support.
PureState construct_saturating_pure_state(const Pvm& pvm, const PureState& psi, double f,
                                          const Tolerances& tol = {});

/// Mixed-state lift of the pure construction: the PVM is lifted to
/// {P_m ⊗ 1}, rho is purified, the pure saturating state is built there and
/// traced back over the ancilla. The result satisfies
/// classical_fidelity(p, q) == F(rho, omega) == f.
DensityOperator construct_saturating_mixed_state(const Pvm& pvm, const DensityOperator& rho,
                                                 double f, const Tolerances& tol = {});

/// Parameters of the perfect-cloning example. The input pair is |eta> and
/// |phi(phi)> = sin(eta)|0> + e^{i phi} cos(eta)|1>; the cloner maps
/// |phi>|eta> to |phi'>|phi''>. In the {|eta>, |theta>} basis the third
/// unitary column is (0, u, u2, v) with u = alpha' beta''/beta,
/// u2 = beta' alpha''/beta, v = beta' beta''/beta (u == u2 for the symmetric
/// choice phi' == phi'') and a^2 = (|u|^2 + |v|^2)^{-1}.
struct CloneExampleParams {
    double eta = 0.0;
    double phi = 0.0;
    double phi1 = 0.0;  ///< phi'
    double phi2 = 0.0;  ///< phi''
    Complex u;
    Complex u2;
    Complex v;
    double a = 0.0;
};

/// Basis coefficients |phi(angle)> = alpha |eta> + beta |theta>.
struct EtaThetaCoefficients {
    Complex alpha;
    Complex beta;
};

EtaThetaCoefficients eta_theta_coefficients(double eta, double angle);

/// Symmetric choice phi' == phi'': solves cos(phi') = sin(2 eta)/(2 - sin(2 eta))
/// and phi = 2 phi'. The resulting alpha equals alpha'^2.
CloneExampleParams solve_clone_angles(double eta, const Tolerances& tol = {});

/// Asymmetric variant: phi' is chosen freely in (0, pi) and phi'' is solved
/// numerically (bisection) from the overlap-preservation constraint; the
/// cloneable input phase is then phi = phi' + phi''.
CloneExampleParams solve_clone_angles_asymmetric(double eta, double phi1,
                                                 const Tolerances& tol = {});

/// The 4x4 cloning unitary in the basis {|ηη>, |ηθ>, |θη>, |θθ>}: columns for
/// |ηη> and |θη> are pinned by the cloner specification and the remaining two
/// come from Gram-Schmidt against the candidates (0,0,1,0) and (0,0,0,1).
ComplexMatrix build_cloning_unitary(const CloneExampleParams& params, const Tolerances& tol = {});

/// Same unitary conjugated into the computational basis.
ComplexMatrix clone_unitary_computational(const CloneExampleParams& params,
                                          const Tolerances& tol = {});

PureState clone_state_eta(double eta, const Tolerances& tol = {});
PureState clone_state_phi(const CloneExampleParams& params, const Tolerances& tol = {});

/// End-to-end run of the perfect-cloning example: PVM {|0><0|, |1><1|},
/// probe |eta>, the constructed unitary, inputs {|eta>, |phi>}. A perfect
/// run has merit_hb == 0 up to round-off.
CloningReport verify_perfect_cloning(double eta, const Tolerances& tol = {});

/// Deviation report of the published closed-form matrix against the
/// Gram-Schmidt construction. The published free columns are only determined
/// up to the unitarity property, so deviations are reported, not judged.
struct PublishedMatrixComparison {
    double published_unitarity_defect = 0.0;
    double fixed_column_defect = 0.0;     ///< columns pinned by the specification
    double complement_span_defect = 0.0;  ///< free columns vs our orthocomplement
};

PublishedMatrixComparison compare_published_matrix(const CloneExampleParams& params,
                                                   const Tolerances& tol = {});

}  // namespace povmclone
