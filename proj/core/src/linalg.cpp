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

#include "povmclone/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "povmclone/errors.hpp"

namespace povmclone {

namespace {

double offdiag_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i + 1; j < a.cols(); ++j) s += 2.0 * std::norm(a(i, j));
    return std::sqrt(s);
}

// One two-sided rotation zeroing a(p,q). With a(p,q) = r e^{i phase} the
// rotation V has columns (c, s e^{-i phase}) and (-s e^{i phase}, c) in the
// (p,q) plane; theta is folded into [-pi/4, pi/4] so the cyclic method
// converges.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const Complex apq = a(p, q);
    const double r = std::abs(apq);
    if (r < 1e-300) {
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        return;
    }
    const Complex phase = apq / r;
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    double theta = 0.5 * std::atan2(2.0 * r, app - aqq);
    if (theta > std::numbers::pi / 4) theta -= std::numbers::pi / 2;
    if (theta < -std::numbers::pi / 4) theta += std::numbers::pi / 2;
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const Complex sp = s * phase;            // s e^{i phase}
    const Complex sm = s * std::conj(phase);  // s e^{-i phase}

    const std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i) {  // A <- A V
        const Complex aip = a(i, p);
        const Complex aiq = a(i, q);
        a(i, p) = c * aip + sm * aiq;
        a(i, q) = -sp * aip + c * aiq;
    }
    for (std::size_t j = 0; j < n; ++j) {  // A <- V† A
        const Complex apj = a(p, j);
        const Complex aqj = a(q, j);
        a(p, j) = c * apj + sp * aqj;
        a(q, j) = -sm * apj + c * aqj;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();

    for (std::size_t i = 0; i < n; ++i) {  // V <- V V_rot
        const Complex vip = v(i, p);
        const Complex viq = v(i, q);
        v(i, p) = c * vip + sm * viq;
        v(i, q) = -sp * vip + c * viq;
    }
}

}  // namespace

EigResult hermitian_eig(const ComplexMatrix& m, const Tolerances& tol) {
    if (!m.is_square()) throw DimensionMismatch("eigendecomposition of a non-square matrix");
    const double asym = hermiticity_defect(m);
    if (asym > tol.herm) throw NotHermitian(asym);

    const std::size_t n = m.rows();
    ComplexMatrix a = hermitian_part(m);
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double target = tol.jacobi_offdiag * std::max(1.0, a.frobenius_norm());

    bool converged = n < 2 || offdiag_norm(a) <= target;
    int sweep = 0;
    while (!converged) {
        if (sweep >= tol.jacobi_max_sweeps) throw NoConvergence(sweep);
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
        ++sweep;
        converged = offdiag_norm(a) <= target;
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

    EigResult result;
    result.eigenvalues.resize(n);
    result.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        result.eigenvalues[j] = a(order[j], order[j]).real();
        for (std::size_t i = 0; i < n; ++i) result.eigenvectors(i, j) = v(i, order[j]);
    }
    return result;
}

ComplexMatrix sqrt_psd(const ComplexMatrix& m, const Tolerances& tol) {
    EigResult eig = hermitian_eig(m, tol);
    const std::size_t n = eig.eigenvalues.size();
    std::vector<double> roots(n);
    for (std::size_t i = 0; i < n; ++i) {
        double lam = eig.eigenvalues[i];
        if (lam < -tol.psd) throw NotPsd(lam);
        // sub-support eigenvalues are round-off on exact zeros; rooting them
        // would plant ~1e-8 spurious modes
        roots[i] = lam > tol.zero ? std::sqrt(lam) : 0.0;
    }
    const ComplexMatrix& v = eig.eigenvectors;
    ComplexMatrix scaled = v;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) scaled(i, j) *= roots[j];
    return scaled * v.adjoint();
}

ComplexMatrix inverse_sqrt_psd(const ComplexMatrix& m, const Tolerances& tol) {
    EigResult eig = hermitian_eig(m, tol);
    const std::size_t n = eig.eigenvalues.size();
    std::vector<double> roots(n);
    for (std::size_t i = 0; i < n; ++i) {
        double lam = eig.eigenvalues[i];
        if (lam < -tol.psd) throw NotPsd(lam);
        roots[i] = lam > tol.zero ? 1.0 / std::sqrt(lam) : 0.0;
    }
    const ComplexMatrix& v = eig.eigenvectors;
    ComplexMatrix scaled = v;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) scaled(i, j) *= roots[j];
    return scaled * v.adjoint();
}

std::vector<double> singular_values(const ComplexMatrix& x, const Tolerances& tol) {
    // Eigenvalue roots of the smaller Gram matrix.
    const ComplexMatrix gram =
        x.rows() >= x.cols() ? x.adjoint() * x : x * x.adjoint();
    EigResult eig = hermitian_eig(gram, tol);
    std::vector<double> s(eig.eigenvalues.size());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = std::sqrt(std::max(eig.eigenvalues[i], 0.0));
    return s;  // already descending
}

SvdResult svd_square(const ComplexMatrix& m, const Tolerances& tol) {
    if (!m.is_square()) throw InvalidParameter("svd_square expects a square matrix");
    const std::size_t n = m.rows();
    EigResult eig = hermitian_eig(hermitian_part(m.adjoint() * m), tol);

    SvdResult out;
    out.v = eig.eigenvectors;
    out.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.values[i] = std::sqrt(std::max(eig.eigenvalues[i], 0.0));

    const double cutoff = std::max(tol.zero, 1e-14 * (n ? out.values[0] : 0.0));
    std::size_t full = 0;
    ComplexMatrix u_cols(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        if (out.values[j] <= cutoff) break;
        const std::vector<Complex> col = mat_vec(m, out.v.column(j));
        for (std::size_t i = 0; i < n; ++i) u_cols(i, full) = col[i] / out.values[j];
        ++full;
    }
    if (full == n) {
        out.u = u_cols;
    } else if (full == 0) {
        out.u = ComplexMatrix::identity(n);
    } else {
        ComplexMatrix fixed(n, full);
        for (std::size_t j = 0; j < full; ++j)
            for (std::size_t i = 0; i < n; ++i) fixed(i, j) = u_cols(i, j);
        out.u = gram_schmidt_complete(fixed, tol);
    }
    return out;
}

namespace {

// Project w off the accumulated columns, twice for orthogonality at working
// precision, and return its remaining norm.
double orthogonalize_against(std::vector<Complex>& w, const std::vector<std::vector<Complex>>& basis) {
    for (int pass = 0; pass < 2; ++pass) {
        for (const auto& b : basis) {
            const Complex c = inner(b, w);
            for (std::size_t i = 0; i < w.size(); ++i) w[i] -= c * b[i];
        }
    }
    return norm2(w);
}

}  // namespace

ComplexMatrix gram_schmidt_complete(const ComplexMatrix& fixed_columns,
                                    const ComplexMatrix& candidates, const Tolerances& tol) {
    const std::size_t d = fixed_columns.rows();
    const std::size_t k = fixed_columns.cols();
    if (k > d) throw DimensionMismatch("more fixed columns than the dimension");
    if (candidates.rows() != 0 && candidates.rows() != d)
        throw DimensionMismatch("candidate rows do not match the dimension");

    std::vector<std::vector<Complex>> basis;
    basis.reserve(d);
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<Complex> w = fixed_columns.column(j);
        const double n = orthogonalize_against(w, basis);
        if (n <= tol.rank) throw RankDeficient(j);
        for (Complex& x : w) x /= n;
        basis.push_back(std::move(w));
    }

    if (candidates.cols() > 0) {
        // Explicit candidates are consumed in order; ones inside the current
        // span are skipped.
        for (std::size_t j = 0; j < candidates.cols() && basis.size() < d; ++j) {
            std::vector<Complex> w = candidates.column(j);
            const double n = orthogonalize_against(w, basis);
            if (n <= 1e-6) continue;
            for (Complex& x : w) x /= n;
            basis.push_back(std::move(w));
        }
        if (basis.size() < d)
            throw InvalidParameter("candidate columns do not complete the basis");
    } else {
        // Default completion: pick the standard basis vector with the largest
        // residual for each remaining slot.
        while (basis.size() < d) {
            double best_norm = -1.0;
            std::vector<Complex> best;
            for (std::size_t e = 0; e < d; ++e) {
                std::vector<Complex> w(d, Complex{});
                w[e] = 1.0;
                const double n = orthogonalize_against(w, basis);
                if (n > best_norm) {
                    best_norm = n;
                    best = std::move(w);
                }
            }
            for (Complex& x : best) x /= best_norm;
            basis.push_back(std::move(best));
        }
    }

    ComplexMatrix out(d, d);
    for (std::size_t j = 0; j < d; ++j) out.set_column(j, basis[j]);
    return out;
}

ComplexMatrix gram_schmidt_complete(const ComplexMatrix& fixed_columns, const Tolerances& tol) {
    return gram_schmidt_complete(fixed_columns, ComplexMatrix(), tol);
}

ComplexMatrix orthonormalize_columns(const ComplexMatrix& m, const Tolerances& tol) {
    std::vector<std::vector<Complex>> basis;
    basis.reserve(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        std::vector<Complex> w = m.column(j);
        const double n = orthogonalize_against(w, basis);
        if (n <= tol.rank) throw RankDeficient(j);
        for (Complex& x : w) x /= n;
        basis.push_back(std::move(w));
    }
    ComplexMatrix out(m.rows(), m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) out.set_column(j, basis[j]);
    return out;
}

}  // namespace povmclone
