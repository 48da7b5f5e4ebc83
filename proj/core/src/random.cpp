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

#include "povmclone/random.hpp"

#include <cmath>
#include <numbers>

#include "povmclone/errors.hpp"
#include "povmclone/linalg.hpp"

namespace povmclone {

double Rng::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(angle);
    has_spare_ = true;
    return r * std::cos(angle);
}

Complex Rng::complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
}

namespace {

ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Rng& rng) {
    ComplexMatrix g(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) g(i, j) = rng.complex_gaussian();
    return g;
}

}  // namespace

ComplexMatrix random_unitary(std::size_t dim, Rng& rng, const Tolerances& tol) {
    if (dim == 0) throw InvalidParameter("dimension must be positive");
    return orthonormalize_columns(ginibre(dim, dim, rng), tol);
}

PureState random_pure_state(std::size_t dim, Rng& rng, const Tolerances& tol) {
    if (dim == 0) throw InvalidParameter("dimension must be positive");
    std::vector<Complex> amps(dim);
    for (Complex& x : amps) x = rng.complex_gaussian();
    const double n = norm2(amps);
    for (Complex& x : amps) x /= n;
    return PureState(std::move(amps), tol);
}

DensityOperator random_state(std::size_t dim, std::size_t rank, Rng& rng, const Tolerances& tol) {
    if (rank == 0 || rank > dim) throw InvalidParameter("rank must be in [1, dim]");
    std::vector<double> spectrum(rank);
    double sum = 0.0;
    for (double& lam : spectrum) {
        lam = -std::log(1.0 - rng.uniform());
        sum += lam;
    }
    for (double& lam : spectrum) lam /= sum;

    const ComplexMatrix u = random_unitary(dim, rng, tol);
    ComplexMatrix rho(dim, dim);
    for (std::size_t j = 0; j < rank; ++j) {
        const std::vector<Complex> col = u.column(j);
        ComplexMatrix proj = ComplexMatrix::outer(col, col);
        proj *= Complex{spectrum[j]};
        rho += proj;
    }
    return DensityOperator(hermitian_part(rho), tol);
}

DensityOperator random_state(std::size_t dim, std::size_t rank, std::uint64_t seed,
                             const Tolerances& tol) {
    Rng rng(seed);
    return random_state(dim, rank, rng, tol);
}

Povm random_povm(std::size_t dim, std::size_t n_elements, Rng& rng, const Tolerances& tol) {
    if (n_elements == 0) throw InvalidParameter("a POVM needs at least one element");
    std::vector<ComplexMatrix> grams;
    grams.reserve(n_elements);
    ComplexMatrix sum(dim, dim);
    for (std::size_t m = 0; m < n_elements; ++m) {
        const ComplexMatrix a = ginibre(dim, dim, rng);
        ComplexMatrix g = hermitian_part(a.adjoint() * a);
        sum += g;
        grams.push_back(std::move(g));
    }
    const ComplexMatrix t = inverse_sqrt_psd(hermitian_part(sum), tol);
    std::vector<ComplexMatrix> elements;
    elements.reserve(n_elements);
    for (const ComplexMatrix& g : grams) elements.push_back(hermitian_part(t * g * t));
    return Povm(std::move(elements), tol);
}

Povm random_povm(std::size_t dim, std::size_t n_elements, std::uint64_t seed,
                 const Tolerances& tol) {
    Rng rng(seed);
    return random_povm(dim, n_elements, rng, tol);
}

KrausChannel random_channel(std::size_t din, std::size_t dout, std::size_t kraus_count, Rng& rng,
                            const Tolerances& tol) {
    if (kraus_count == 0 || kraus_count * dout < din)
        throw InvalidParameter("need kraus_count * dout >= din for an isometry");
    const ComplexMatrix v = orthonormalize_columns(ginibre(kraus_count * dout, din, rng), tol);
    std::vector<ComplexMatrix> ops;
    ops.reserve(kraus_count);
    for (std::size_t b = 0; b < kraus_count; ++b) {
        ComplexMatrix k(dout, din);
        for (std::size_t i = 0; i < dout; ++i)
            for (std::size_t j = 0; j < din; ++j) k(i, j) = v(b * dout + i, j);
        ops.push_back(std::move(k));
    }
    return KrausChannel(std::move(ops), tol);
}

KrausChannel random_channel(std::size_t din, std::size_t dout, std::size_t kraus_count,
                            std::uint64_t seed, const Tolerances& tol) {
    Rng rng(seed);
    return random_channel(din, dout, kraus_count, rng, tol);
}

Pvm random_pvm(std::size_t dim, std::span<const std::size_t> ranks, Rng& rng,
               const Tolerances& tol) {
    return Pvm::from_unitary_blocks(random_unitary(dim, rng, tol), ranks, tol);
}

KrausChannel random_unistochastic_channel(std::size_t dim, std::size_t unitary_count, Rng& rng,
                                          const Tolerances& tol) {
    if (unitary_count == 0) throw InvalidParameter("need at least one unitary");
    std::vector<double> weights(unitary_count);
    double sum = 0.0;
    for (double& w : weights) {
        w = rng.uniform() + 1e-3;
        sum += w;
    }
    std::vector<ComplexMatrix> ops;
    ops.reserve(unitary_count);
    for (std::size_t i = 0; i < unitary_count; ++i) {
        ComplexMatrix u = random_unitary(dim, rng, tol);
        u *= Complex{std::sqrt(weights[i] / sum)};
        ops.push_back(std::move(u));
    }
    return KrausChannel(std::move(ops), tol);
}

}  // namespace povmclone
