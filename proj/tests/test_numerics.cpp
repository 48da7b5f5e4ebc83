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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "povmclone/errors.hpp"
#include "povmclone/linalg.hpp"
#include "povmclone/random.hpp"

using namespace povmclone;

namespace {

ComplexMatrix random_hermitian(std::size_t d, Rng& rng) {
    ComplexMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i, j) = rng.complex_gaussian();
    return hermitian_part(m);
}

ComplexMatrix random_square(std::size_t d, Rng& rng) {
    ComplexMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i, j) = rng.complex_gaussian();
    return m;
}

}  // namespace

TEST_CASE("hermitian_eig on the identity and a diagonal matrix") {
    EigResult id2 = hermitian_eig(ComplexMatrix::identity(2));
    CHECK(id2.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(id2.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(unitarity_defect(id2.eigenvectors) < 1e-12);

    const double d31[] = {3.0, 1.0};
    EigResult diag = hermitian_eig(ComplexMatrix::diagonal(d31));
    CHECK(diag.eigenvalues[0] == doctest::Approx(3.0));
    CHECK(diag.eigenvalues[1] == doctest::Approx(1.0));
    CHECK(std::abs(diag.eigenvectors(0, 0)) == doctest::Approx(1.0));
    CHECK(std::abs(diag.eigenvectors(1, 1)) == doctest::Approx(1.0));
}

TEST_CASE("hermitian_eig reconstruction oracle on seeded matrices") {
    Rng rng(101);
    for (std::size_t d : {2, 3, 5, 8, 16}) {
        const ComplexMatrix m = random_hermitian(d, rng);
        EigResult eig = hermitian_eig(m);
        ComplexMatrix scaled = eig.eigenvectors;
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t i = 0; i < d; ++i) scaled(i, j) *= eig.eigenvalues[j];
        CHECK(max_abs_diff(scaled * eig.eigenvectors.adjoint(), m) < 1e-10);
        CHECK(unitarity_defect(eig.eigenvectors) < 1e-10);
        for (std::size_t j = 0; j + 1 < d; ++j)
            CHECK(eig.eigenvalues[j] >= eig.eigenvalues[j + 1]);
    }
}

TEST_CASE("hermitian_eig rejects a non-Hermitian matrix") {
    ComplexMatrix m(2, 2);
    m(0, 1) = 1.0;  // m(1,0) stays 0
    CHECK_THROWS_AS(hermitian_eig(m), NotHermitian);
}

TEST_CASE("sqrt_psd on diagonal inputs") {
    const double d49[] = {4.0, 9.0};
    const ComplexMatrix s = sqrt_psd(ComplexMatrix::diagonal(d49));
    CHECK(s(0, 0).real() == doctest::Approx(2.0));
    CHECK(s(1, 1).real() == doctest::Approx(3.0));
    CHECK(std::abs(s(0, 1)) < 1e-14);

    CHECK(max_abs_diff(sqrt_psd(ComplexMatrix::identity(5)), ComplexMatrix::identity(5)) < 1e-12);
}

TEST_CASE("sqrt_psd square-back oracle on seeded PSD matrices") {
    Rng rng(202);
    for (std::size_t d : {2, 4, 6}) {
        const ComplexMatrix b = random_square(d, rng);
        const ComplexMatrix a = hermitian_part(b.adjoint() * b);
        const ComplexMatrix s = sqrt_psd(a);
        CHECK(max_abs_diff(s * s, a) < 1e-9 * std::max(1.0, a.max_abs()));
        CHECK(hermiticity_defect(s) < 1e-12);
    }
}

TEST_CASE("sqrt_psd rejects an indefinite matrix") {
    const double ind[] = {1.0, -1.0};
    CHECK_THROWS_AS(sqrt_psd(ComplexMatrix::diagonal(ind)), NotPsd);
}

TEST_CASE("singular values: identity, signed diagonal, trace oracle") {
    const std::vector<double> s_id = singular_values(ComplexMatrix::identity(3));
    for (double s : s_id) CHECK(s == doctest::Approx(1.0));

    const double signed_diag[] = {2.0, -5.0};
    const std::vector<double> s = singular_values(ComplexMatrix::diagonal(signed_diag));
    CHECK(s[0] == doctest::Approx(5.0));
    CHECK(s[1] == doctest::Approx(2.0));

    Rng rng(303);
    const ComplexMatrix x = random_square(5, rng);
    const std::vector<double> sv = singular_values(x);
    double sum2 = 0.0;
    for (double v : sv) sum2 += v * v;
    CHECK(sum2 ==
          doctest::Approx((x.adjoint() * x).trace().real()).epsilon(1e-10));

    // adjoint multiset
    const std::vector<double> sv2 = singular_values(x.adjoint());
    for (std::size_t i = 0; i < sv.size(); ++i)
        CHECK(std::abs(sv[i] - sv2[i]) < 1e-10);
}

TEST_CASE("singular values of a rectangular matrix") {
    ComplexMatrix x(3, 2);
    x(0, 0) = 1.0;
    x(1, 1) = 2.0;
    x(2, 1) = 2.0;
    const std::vector<double> s = singular_values(x);
    REQUIRE(s.size() == 2);
    CHECK(s[0] == doctest::Approx(std::sqrt(8.0)));
    CHECK(s[1] == doctest::Approx(1.0));
}

TEST_CASE("kron basics") {
    CHECK(max_abs_diff(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)),
                       ComplexMatrix::identity(4)) == 0.0);

    const double d10[] = {1.0, 0.0};
    const double d01[] = {0.0, 1.0};
    const ComplexMatrix k = kron(ComplexMatrix::diagonal(d10), ComplexMatrix::diagonal(d01));
    const double want[] = {0.0, 1.0, 0.0, 0.0};
    CHECK(max_abs_diff(k, ComplexMatrix::diagonal(want)) == 0.0);
}

TEST_CASE("kron mixed-product and associativity oracles") {
    Rng rng(404);
    const ComplexMatrix a = random_square(2, rng), b = random_square(3, rng);
    const ComplexMatrix u = random_square(2, rng), v = random_square(3, rng);
    CHECK(max_abs_diff(kron(a, b) * kron(u, v), kron(a * u, b * v)) < 1e-10);
    CHECK(max_abs_diff(kron(kron(a, b), u), kron(a, kron(b, u))) < 1e-10);
}

TEST_CASE("partial trace of a product is the factor times the other trace") {
    Rng rng(505);
    const ComplexMatrix a = random_square(3, rng);
    const ComplexMatrix b = random_square(2, rng);
    ComplexMatrix want = a;
    want *= b.trace();
    CHECK(max_abs_diff(partial_trace(kron(a, b), 3, 2, Subsystem::A), want) < 1e-12);

    // |00><00| reduced over B is |0><0|
    std::vector<Complex> e00(4, Complex{});
    e00[0] = 1.0;
    const ComplexMatrix proj = ComplexMatrix::outer(e00, e00);
    const ComplexMatrix reduced = partial_trace(proj, 2, 2, Subsystem::B);
    CHECK(reduced(0, 0).real() == doctest::Approx(1.0));
    CHECK(std::abs(reduced(1, 1)) < 1e-14);
}

TEST_CASE("partial trace preserves the trace and rejects bad shapes") {
    Rng rng(606);
    const ComplexMatrix m = random_square(6, rng);
    CHECK(std::abs((partial_trace(m, 2, 3, Subsystem::A).trace() - m.trace()).real()) < 1e-12);
    CHECK(std::abs((partial_trace(m, 2, 3, Subsystem::B).trace() - m.trace()).real()) < 1e-12);
    CHECK_THROWS_AS(partial_trace(m, 2, 2, Subsystem::A), DimensionMismatch);
}

TEST_CASE("gram_schmidt_complete reproduces orthonormal inputs") {
    CHECK(max_abs_diff(gram_schmidt_complete(ComplexMatrix::identity(3)),
                       ComplexMatrix::identity(3)) < 1e-14);

    ComplexMatrix e0(4, 1);
    e0(0, 0) = 1.0;
    const ComplexMatrix u = gram_schmidt_complete(e0);
    CHECK(unitarity_defect(u) < 1e-12);
    CHECK(u(0, 0).real() == doctest::Approx(1.0));
}

TEST_CASE("gram_schmidt_complete flags dependent fixed columns") {
    ComplexMatrix fixed(3, 2);
    fixed(0, 0) = 1.0;
    fixed(0, 1) = 2.0;  // same direction
    CHECK_THROWS_AS(gram_schmidt_complete(fixed), RankDeficient);
}

TEST_CASE("gram_schmidt_complete with seeded fixed columns is unitary") {
    Rng rng(707);
    ComplexMatrix fixed(5, 2);
    for (std::size_t j = 0; j < 2; ++j) {
        std::vector<Complex> col(5);
        for (Complex& x : col) x = rng.complex_gaussian();
        const double n = norm2(col);
        for (Complex& x : col) x /= n;
        fixed.set_column(j, col);
    }
    const ComplexMatrix u = gram_schmidt_complete(fixed);
    CHECK(unitarity_defect(u) < 1e-10);
}

TEST_CASE("svd_square reconstructs the input") {
    Rng rng(808);
    const ComplexMatrix m = random_square(4, rng);
    const SvdResult dec = svd_square(m);
    ComplexMatrix scaled = dec.u;
    for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t i = 0; i < 4; ++i) scaled(i, j) *= dec.values[j];
    CHECK(max_abs_diff(scaled * dec.v.adjoint(), m) < 1e-9);
    CHECK(unitarity_defect(dec.u) < 1e-10);
    CHECK(unitarity_defect(dec.v) < 1e-10);

    // rank-deficient input still yields unitary factors
    ComplexMatrix low(3, 3);
    low(0, 0) = 2.0;
    const SvdResult dec2 = svd_square(low);
    CHECK(unitarity_defect(dec2.u) < 1e-10);
    CHECK(dec2.values[0] == doctest::Approx(2.0));
    CHECK(dec2.values[2] == doctest::Approx(0.0));
}

TEST_CASE("kron and partial trace at the 256x256 envelope") {
    Rng rng(1010);
    const ComplexMatrix a = random_hermitian(16, rng);
    const ComplexMatrix b = random_hermitian(16, rng);
    const ComplexMatrix big = kron(a, b);  // 256 x 256
    REQUIRE(big.rows() == 256);
    CHECK(std::abs((big.trace() - a.trace() * b.trace()).real()) < 1e-10);
    ComplexMatrix want = a;
    want *= b.trace();
    CHECK(max_abs_diff(partial_trace(big, 16, 16, Subsystem::A), want) < 1e-10);
}

TEST_CASE("seeded eigensolver properties run clean") {
    // thin wrapper over the registered invariants, small case counts
    Rng rng(909);
    for (int c = 0; c < 10; ++c) {
        const std::size_t d = 2 + rng.next_u64() % 7;
        const ComplexMatrix m = random_hermitian(d, rng);
        EigResult eig = hermitian_eig(m);
        double sum = 0.0;
        for (double lam : eig.eigenvalues) sum += lam;
        CHECK(sum == doctest::Approx(m.trace().real()).epsilon(1e-10));
    }
}
