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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace povmclone {

using Complex = std::complex<double>;

/// Dense row-major complex matrix.
///
/// Everything here is textbook O(n^3) arithmetic aimed at small operators
/// (d <= 16 typical, tensor products up to 256x256). Values are immutable in
/// practice: operations return fresh matrices, so concurrent reads are safe.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    /// Takes ownership of `entries`; throws DimensionMismatch if the count
    /// is not rows*cols.
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const double> values);
    static ComplexMatrix diagonal(std::span<const Complex> values);
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
    static ComplexMatrix column_vector(std::span<const Complex> values);
    /// |u><v|
    static ComplexMatrix outer(std::span<const Complex> u, std::span<const Complex> v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<Complex>& entries() const { return data_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;
    Complex trace() const;
    double frobenius_norm() const;
    double max_abs() const;

    std::vector<Complex> column(std::size_t j) const;
    void set_column(std::size_t j, std::span<const Complex> col);

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scalar);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scalar, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex scalar);

/// Kronecker product; (a⊗b)[(i*rb + k), (j*cb + l)] == a(i,j) b(k,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

enum class Subsystem { A, B };

/// Reduce an operator on C^{da} ⊗ C^{db} to the kept factor. The trace is
/// preserved: trace(result) == trace(m).
ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b,
                            Subsystem keep);

/// max |m_ij - conj(m_ji)|
double hermiticity_defect(const ComplexMatrix& m);
/// max |(m† m - 1)_ij|
double unitarity_defect(const ComplexMatrix& m);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
/// (m + m†)/2
ComplexMatrix hermitian_part(const ComplexMatrix& m);

// Vector helpers; states are carried as plain coefficient vectors.
Complex inner(std::span<const Complex> u, std::span<const Complex> v);  ///< <u|v>
double norm2(std::span<const Complex> u);
std::vector<Complex> mat_vec(const ComplexMatrix& m, std::span<const Complex> v);
std::vector<Complex> kron_vec(std::span<const Complex> u, std::span<const Complex> v);

}  // namespace povmclone
