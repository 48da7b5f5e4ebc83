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

#include "povmclone/qtypes.hpp"

#include <algorithm>
#include <cmath>

#include "povmclone/errors.hpp"
#include "povmclone/linalg.hpp"

namespace povmclone {

PureState::PureState(std::vector<Complex> amplitudes, const Tolerances& tol)
    : amps_(std::move(amplitudes)) {
    if (amps_.empty()) throw InvalidParameter("empty state vector");
    for (const Complex& x : amps_)
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
            throw InvalidParameter("non-finite amplitude");
    const double n = norm2(amps_);
    if (std::abs(n - 1.0) > tol.norm)
        throw NotNormalized("state norm " + std::to_string(n) + " is not 1", std::abs(n - 1.0));
}

PureState PureState::basis_state(std::size_t dim, std::size_t index) {
    if (index >= dim) throw InvalidParameter("basis index out of range");
    std::vector<Complex> a(dim, Complex{});
    a[index] = 1.0;
    return PureState(std::move(a));
}

Complex PureState::overlap(const PureState& other) const {
    if (dim() != other.dim()) throw DimensionMismatch("overlap of unequal dimensions");
    return inner(amps_, other.amps_);
}

ComplexMatrix PureState::projector() const { return ComplexMatrix::outer(amps_, amps_); }

PureState PureState::tensor(const PureState& other) const {
    return PureState(kron_vec(amps_, other.amps_));
}

DensityOperator::DensityOperator(ComplexMatrix matrix, const Tolerances& tol)
    : m_(std::move(matrix)) {
    if (!m_.is_square() || m_.rows() == 0) throw DimensionMismatch("density operator must be square");
    const double asym = hermiticity_defect(m_);
    if (asym > tol.herm) throw NotHermitian(asym);
    const double tr = m_.trace().real();
    if (std::abs(tr - 1.0) > tol.norm)
        throw NotNormalized("trace " + std::to_string(tr) + " is not 1", std::abs(tr - 1.0));
    EigResult eig = hermitian_eig(m_, tol);
    if (eig.eigenvalues.back() < -tol.psd) throw NotPsd(eig.eigenvalues.back());
}

DensityOperator DensityOperator::pure(const PureState& s, const Tolerances& tol) {
    return DensityOperator(s.projector(), tol);
}

DensityOperator DensityOperator::maximally_mixed(std::size_t dim) {
    ComplexMatrix m = ComplexMatrix::identity(dim);
    m *= Complex{1.0 / static_cast<double>(dim)};
    return DensityOperator(std::move(m));
}

Povm::Povm(std::vector<ComplexMatrix> elements, const Tolerances& tol)
    : elements_(std::move(elements)) {
    if (elements_.empty()) throw InvalidParameter("a POVM needs at least one element");
    dim_ = elements_.front().rows();
    ComplexMatrix sum(dim_, dim_);
    for (std::size_t m = 0; m < elements_.size(); ++m) {
        const ComplexMatrix& e = elements_[m];
        if (!e.is_square() || e.rows() != dim_)
            throw DimensionMismatch("POVM element " + std::to_string(m) + " has a wrong shape");
        const double asym = hermiticity_defect(e);
        if (asym > tol.herm) throw NotHermitian(asym);
        EigResult eig = hermitian_eig(e, tol);
        if (eig.eigenvalues.back() < -tol.psd) throw NotPsd(eig.eigenvalues.back());
        sum += e;
    }
    const double defect = max_abs_diff(sum, ComplexMatrix::identity(dim_));
    if (defect > tol.norm)
        throw NotNormalized("POVM elements sum to identity defect " + std::to_string(defect),
                            defect);
}

Pvm::Pvm(std::vector<ComplexMatrix> projectors, const Tolerances& tol)
    : projectors_(std::move(projectors)) {
    // Reuse the POVM validation, then add the projector algebra.
    Povm as_povm(projectors_, tol);
    dim_ = as_povm.dim();
    ranks_.resize(projectors_.size());
    for (std::size_t m = 0; m < projectors_.size(); ++m) {
        const ComplexMatrix& p = projectors_[m];
        if (max_abs_diff(p * p, p) > tol.recon)
            throw InvalidParameter("element " + std::to_string(m) + " is not idempotent");
        for (std::size_t l = m + 1; l < projectors_.size(); ++l) {
            if ((p * projectors_[l]).max_abs() > tol.recon)
                throw InvalidParameter("elements " + std::to_string(m) + " and " +
                                       std::to_string(l) + " are not orthogonal");
        }
        ranks_[m] = static_cast<std::size_t>(std::llround(p.trace().real()));
    }
}

Pvm Pvm::computational(std::size_t dim) {
    std::vector<ComplexMatrix> proj;
    proj.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        ComplexMatrix p(dim, dim);
        p(i, i) = 1.0;
        proj.push_back(std::move(p));
    }
    return Pvm(std::move(proj));
}

Pvm Pvm::from_unitary_blocks(const ComplexMatrix& unitary, std::span<const std::size_t> ranks,
                             const Tolerances& tol) {
    const std::size_t d = unitary.rows();
    std::size_t total = 0;
    for (std::size_t r : ranks) total += r;
    if (total != d) throw InvalidParameter("block ranks must sum to the dimension");
    std::vector<ComplexMatrix> proj;
    proj.reserve(ranks.size());
    std::size_t offset = 0;
    for (std::size_t r : ranks) {
        ComplexMatrix p(d, d);
        for (std::size_t j = offset; j < offset + r; ++j) {
            const std::vector<Complex> col = unitary.column(j);
            p += ComplexMatrix::outer(col, col);
        }
        proj.push_back(hermitian_part(p));
        offset += r;
    }
    return Pvm(std::move(proj), tol);
}

Povm Pvm::to_povm(const Tolerances& tol) const { return Povm(projectors_, tol); }

std::vector<ComplexMatrix> Pvm::block_bases(const Tolerances& tol) const {
    std::vector<ComplexMatrix> bases;
    bases.reserve(projectors_.size());
    for (std::size_t m = 0; m < projectors_.size(); ++m) {
        EigResult eig = hermitian_eig(projectors_[m], tol);
        const std::size_t rank = ranks_[m];
        ComplexMatrix basis(dim_, rank);
        std::size_t found = 0;
        for (std::size_t j = 0; j < dim_ && found < rank; ++j) {
            if (eig.eigenvalues[j] > 0.5) {
                for (std::size_t i = 0; i < dim_; ++i) basis(i, found) = eig.eigenvectors(i, j);
                ++found;
            }
        }
        if (found != rank)
            throw InvalidParameter("projector rank disagrees with its spectrum");
        bases.push_back(std::move(basis));
    }
    return bases;
}

KrausChannel::KrausChannel(std::vector<ComplexMatrix> kraus_ops, const Tolerances& tol)
    : ops_(std::move(kraus_ops)) {
    if (ops_.empty()) throw InvalidParameter("a channel needs at least one Kraus operator");
    dout_ = ops_.front().rows();
    din_ = ops_.front().cols();
    ComplexMatrix sum(din_, din_);
    for (const ComplexMatrix& k : ops_) {
        if (k.rows() != dout_ || k.cols() != din_)
            throw DimensionMismatch("Kraus operators must share one shape");
        sum += k.adjoint() * k;
    }
    const double defect = max_abs_diff(sum, ComplexMatrix::identity(din_));
    if (defect > tol.norm)
        throw NotNormalized("channel is not trace preserving, defect " + std::to_string(defect),
                            defect);
}

KrausChannel KrausChannel::identity(std::size_t dim) {
    return KrausChannel({ComplexMatrix::identity(dim)});
}

KrausChannel KrausChannel::unitary(const ComplexMatrix& u, const Tolerances& tol) {
    const double defect = unitarity_defect(u);
    if (defect > tol.unit)
        throw InvalidParameter("matrix is not unitary, defect " + std::to_string(defect));
    return KrausChannel({u}, tol);
}

namespace {

// Negative round-off within psd_tol clamps to zero; anything below the
// support cutoff snaps to an exact zero as well, since values that small are
// trace-evaluation noise and would otherwise leak through square roots.
std::vector<double> clamp_probabilities(std::vector<double> probs, double psd_tol,
                                        double zero_tol) {
    for (double& x : probs) {
        if (!std::isfinite(x)) throw InvalidParameter("non-finite probability");
        if (x < -psd_tol) throw InvalidParameter("negative probability " + std::to_string(x));
        if (x <= zero_tol) x = 0.0;
    }
    return probs;
}

}  // namespace

ProbDist::ProbDist(std::vector<double> probs, const Tolerances& tol)
    : p_(clamp_probabilities(std::move(probs), tol.psd, tol.zero)) {
    if (p_.empty()) throw InvalidParameter("empty distribution");
    double sum = 0.0;
    for (double x : p_) sum += x;
    if (std::abs(sum - 1.0) > tol.norm)
        throw NotNormalized("probabilities sum to " + std::to_string(sum), std::abs(sum - 1.0));
    for (double& x : p_) x /= sum;
}

JointDist::JointDist(std::size_t rows, std::size_t cols, std::vector<double> probs,
                     const Tolerances& tol)
    : rows_(rows), cols_(cols), t_(clamp_probabilities(std::move(probs), tol.psd, tol.zero)) {
    if (t_.size() != rows_ * cols_ || t_.empty())
        throw DimensionMismatch("joint distribution shape mismatch");
    double sum = 0.0;
    for (double x : t_) sum += x;
    if (std::abs(sum - 1.0) > tol.norm)
        throw NotNormalized("joint probabilities sum to " + std::to_string(sum),
                            std::abs(sum - 1.0));
    for (double& x : t_) x /= sum;
}

ProbDist JointDist::row_marginal(const Tolerances& tol) const {
    std::vector<double> q(rows_, 0.0);
    for (std::size_t j = 0; j < rows_; ++j)
        for (std::size_t k = 0; k < cols_; ++k) q[j] += (*this)(j, k);
    return ProbDist(std::move(q), tol);
}

ProbDist JointDist::col_marginal(const Tolerances& tol) const {
    std::vector<double> r(cols_, 0.0);
    for (std::size_t j = 0; j < rows_; ++j)
        for (std::size_t k = 0; k < cols_; ++k) r[k] += (*this)(j, k);
    return ProbDist(std::move(r), tol);
}

ProbDist measure(const Povm& povm, const DensityOperator& rho, const Tolerances& tol) {
    if (povm.dim() != rho.dim())
        throw DimensionMismatch("POVM dimension " + std::to_string(povm.dim()) +
                                " does not match state dimension " + std::to_string(rho.dim()));
    std::vector<double> p(povm.size());
    for (std::size_t m = 0; m < povm.size(); ++m) {
        const Complex tr = (povm.element(m) * rho.matrix()).trace();
        if (std::abs(tr.imag()) > tol.imag)
            throw InvalidParameter("probability has imaginary residue " +
                                   std::to_string(tr.imag()));
        p[m] = tr.real();
    }
    return ProbDist(std::move(p), tol);
}

DensityOperator apply_channel(const KrausChannel& ch, const DensityOperator& rho,
                              const Tolerances& tol) {
    if (ch.din() != rho.dim())
        throw DimensionMismatch("channel input dimension does not match the state");
    ComplexMatrix out(ch.dout(), ch.dout());
    for (const ComplexMatrix& k : ch.kraus_ops()) out += k * rho.matrix() * k.adjoint();
    return DensityOperator(hermitian_part(out), tol);
}

JointDist joint_distribution(const Povm& povm, const DensityOperator& omega,
                             const Tolerances& tol) {
    const std::size_t d = povm.dim();
    if (omega.dim() != d * d)
        throw DimensionMismatch("joint state must live on the squared dimension");
    const std::size_t n = povm.size();
    std::vector<double> t(n * n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            const Complex tr = (kron(povm.element(j), povm.element(k)) * omega.matrix()).trace();
            if (std::abs(tr.imag()) > tol.imag)
                throw InvalidParameter("joint probability has imaginary residue " +
                                       std::to_string(tr.imag()));
            t[j * n + k] = tr.real();
        }
    return JointDist(n, n, std::move(t), tol);
}

PureState purify(const DensityOperator& rho, const Tolerances& tol) {
    const std::size_t d = rho.dim();
    EigResult eig = hermitian_eig(rho.matrix(), tol);
    std::vector<Complex> amps(d * d, Complex{});
    for (std::size_t j = 0; j < d; ++j) {
        const double lam = eig.eigenvalues[j];
        if (lam <= tol.zero) continue;  // exact zero up to solver noise
        const double root = std::sqrt(lam);
        for (std::size_t a = 0; a < d; ++a) amps[a * d + j] = root * eig.eigenvectors(a, j);
    }
    const double n = norm2(amps);
    for (Complex& x : amps) x /= n;
    return PureState(std::move(amps), tol);
}

}  // namespace povmclone
