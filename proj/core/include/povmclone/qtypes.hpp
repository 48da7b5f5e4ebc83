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

#include <cstddef>
#include <vector>

#include "povmclone/complex_matrix.hpp"
#include "povmclone/tolerances.hpp"

namespace povmclone {

/// Unit vector in C^d. The constructor rejects amplitudes whose 2-norm
/// differs from 1 by more than tol.norm.
class PureState {
public:
    explicit PureState(std::vector<Complex> amplitudes, const Tolerances& tol = {});

    static PureState basis_state(std::size_t dim, std::size_t index);

    std::size_t dim() const { return amps_.size(); }
    const std::vector<Complex>& amplitudes() const { return amps_; }

    Complex overlap(const PureState& other) const;  ///< <this|other>
    ComplexMatrix projector() const;                ///< |psi><psi|
    PureState tensor(const PureState& other) const;

private:
    std::vector<Complex> amps_;
};

/// Positive unit-trace operator. Validated on construction: Hermitian within
/// tol.herm, eigenvalues >= -tol.psd, trace within tol.norm of 1.
class DensityOperator {
public:
    explicit DensityOperator(ComplexMatrix matrix, const Tolerances& tol = {});

    static DensityOperator pure(const PureState& s, const Tolerances& tol = {});
    static DensityOperator maximally_mixed(std::size_t dim);

    std::size_t dim() const { return m_.rows(); }
    const ComplexMatrix& matrix() const { return m_; }

private:
    ComplexMatrix m_;
};

/// Finite positive operator-valued measure: elements are Hermitian PSD and
/// sum to the identity within tol.norm.
class Povm {
public:
    explicit Povm(std::vector<ComplexMatrix> elements, const Tolerances& tol = {});

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return elements_.size(); }
    const ComplexMatrix& element(std::size_t m) const { return elements_[m]; }
    const std::vector<ComplexMatrix>& elements() const { return elements_; }

private:
    std::vector<ComplexMatrix> elements_;
    std::size_t dim_ = 0;
};

/// Projector-valued measure. On top of the Povm invariants each element
/// satisfies P^2 == P and P_m P_m' == 0 within tol.recon.
class Pvm {
public:
    explicit Pvm(std::vector<ComplexMatrix> projectors, const Tolerances& tol = {});

    /// Rank-1 projectors onto the standard basis.
    static Pvm computational(std::size_t dim);
    /// Partition the columns of a unitary into consecutive blocks of the
    /// given ranks; each block spans one projector.
    static Pvm from_unitary_blocks(const ComplexMatrix& unitary,
                                   std::span<const std::size_t> ranks,
                                   const Tolerances& tol = {});

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return projectors_.size(); }
    const std::vector<ComplexMatrix>& projectors() const { return projectors_; }
    const std::vector<std::size_t>& ranks() const { return ranks_; }

    Povm to_povm(const Tolerances& tol = {}) const;

    /// Orthonormal basis of each projector's range, as d x rank column
    /// blocks. Eigenvectors with eigenvalue above 1/2 are taken.
    std::vector<ComplexMatrix> block_bases(const Tolerances& tol = {}) const;

private:
    std::vector<ComplexMatrix> projectors_;
    std::vector<std::size_t> ranks_;
    std::size_t dim_ = 0;
};

/// Completely positive trace-preserving map in Kraus form. The constructor
/// checks sum_i K_i† K_i == identity within tol.norm.
class KrausChannel {
public:
    explicit KrausChannel(std::vector<ComplexMatrix> kraus_ops, const Tolerances& tol = {});

    static KrausChannel identity(std::size_t dim);
    static KrausChannel unitary(const ComplexMatrix& u, const Tolerances& tol = {});

    std::size_t din() const { return din_; }
    std::size_t dout() const { return dout_; }
    const std::vector<ComplexMatrix>& kraus_ops() const { return ops_; }

private:
    std::vector<ComplexMatrix> ops_;
    std::size_t din_ = 0;
    std::size_t dout_ = 0;
};

/// Nonnegative normalized vector. Entries in [-tol.psd, tol.zero] are
/// snapped to exact zero (negative round-off and sub-support noise alike)
/// and the vector is renormalized; a sum further than tol.norm from 1
/// throws NotNormalized.
class ProbDist {
public:
    explicit ProbDist(std::vector<double> probs, const Tolerances& tol = {});

    std::size_t size() const { return p_.size(); }
    double operator[](std::size_t i) const { return p_[i]; }
    const std::vector<double>& probs() const { return p_; }

private:
    std::vector<double> p_;
};

/// Joint outcome distribution t_jk, stored row-major. Same clamping and
/// normalization rules as ProbDist, applied to the total sum.
class JointDist {
public:
    JointDist(std::size_t rows, std::size_t cols, std::vector<double> probs,
              const Tolerances& tol = {});

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double operator()(std::size_t j, std::size_t k) const { return t_[j * cols_ + k]; }
    const std::vector<double>& data() const { return t_; }

    ProbDist row_marginal(const Tolerances& tol = {}) const;  ///< q_j = sum_k t_jk
    ProbDist col_marginal(const Tolerances& tol = {}) const;  ///< r_k = sum_j t_jk

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> t_;
};

/// Outcome distribution p_m = tr(M_m rho). Throws DimensionMismatch on a
/// dimension conflict and NotNormalized when the traces fail to sum to 1.
ProbDist measure(const Povm& povm, const DensityOperator& rho, const Tolerances& tol = {});

/// rho -> sum_i K_i rho K_i†.
DensityOperator apply_channel(const KrausChannel& ch, const DensityOperator& rho,
                              const Tolerances& tol = {});

/// t_jk = tr((M_j ⊗ M_k) omega) for omega on C^{d^2}.
JointDist joint_distribution(const Povm& povm, const DensityOperator& omega,
                             const Tolerances& tol = {});

/// Canonical purification |Psi> = sum_j sqrt(lambda_j) |v_j>|e_j> on C^{d^2},
/// with descending eigenvalues and the standard basis on the ancilla.
/// partial_trace(|Psi><Psi|, keep A) reproduces rho.
PureState purify(const DensityOperator& rho, const Tolerances& tol = {});

}  // namespace povmclone
