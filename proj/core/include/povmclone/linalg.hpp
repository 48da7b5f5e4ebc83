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

#include <vector>

#include "povmclone/complex_matrix.hpp"
#include "povmclone/tolerances.hpp"

namespace povmclone {

struct EigResult {
    std::vector<double> eigenvalues;  ///< real, sorted descending
    ComplexMatrix eigenvectors;       ///< unitary; column j pairs with eigenvalues[j]
};

/// Diagonalize a Hermitian matrix by cyclic Jacobi rotations.
///
/// The input must be Hermitian within tol.herm (NotHermitian otherwise); it is
/// symmetrized exactly before iterating. Sweeps stop once the off-diagonal
/// Frobenius norm drops below tol.jacobi_offdiag * max(1, ||m||_F), and
/// NoConvergence is thrown after tol.jacobi_max_sweeps.
EigResult hermitian_eig(const ComplexMatrix& m, const Tolerances& tol = {});

/// Unique positive square root of a PSD matrix. Eigenvalues in [-tol.psd, 0]
/// are clamped to zero; anything below -tol.psd throws NotPsd.
ComplexMatrix sqrt_psd(const ComplexMatrix& m, const Tolerances& tol = {});

/// Pseudo-inverse square root: eigenvalues <= tol.zero are dropped rather
/// than inverted.
ComplexMatrix inverse_sqrt_psd(const ComplexMatrix& m, const Tolerances& tol = {});

/// Singular values of a rectangular matrix, descending. Computed from the
/// smaller of x†x and x x†.
std::vector<double> singular_values(const ComplexMatrix& x, const Tolerances& tol = {});

struct SvdResult {
    ComplexMatrix u;                  ///< square unitary
    std::vector<double> values;      ///< descending
    ComplexMatrix v;                  ///< square unitary; m == u diag(values) v†
};

/// Full SVD of a square matrix via the Hermitian eigensolver.
SvdResult svd_square(const ComplexMatrix& m, const Tolerances& tol = {});

/// Orthonormalize the given columns (modified Gram-Schmidt with
/// reorthogonalization) and extend them to a full unitary. Completion
/// candidates default to the standard basis, picked greedily by largest
/// residual; an explicit candidate list is consumed in order instead.
/// Throws RankDeficient(j) when fixed column j is dependent on its
/// predecessors within tol.rank.
ComplexMatrix gram_schmidt_complete(const ComplexMatrix& fixed_columns, const Tolerances& tol = {});
ComplexMatrix gram_schmidt_complete(const ComplexMatrix& fixed_columns,
                                    const ComplexMatrix& candidates, const Tolerances& tol = {});

/// Orthonormalize all columns of m; throws RankDeficient on dependence.
ComplexMatrix orthonormalize_columns(const ComplexMatrix& m, const Tolerances& tol = {});

}  // namespace povmclone
