// SPDX-License-Identifier: Apache-2.0
//
// stalecsi: net degrees of freedom of the MISO broadcast channel with delayed limited feedback
// Copyright (C) 2026 The stalecsi authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace stalecsi {

using Complex = std::complex<double>;

// Dense row-major complex matrix. Sized for desk-scale problems (a few dozen rows/cols).
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);                                // zero-filled
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> row_major); // validated
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix from_columns(std::span<const std::vector<Complex>> columns);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return data_.empty(); }

    Complex& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

    std::span<const Complex> data() const noexcept { return data_; }

    std::vector<Complex> row(std::size_t r) const;
    std::vector<Complex> col(std::size_t c) const;
    void set_row(std::size_t r, std::span<const Complex> values);
    void set_col(std::size_t c, std::span<const Complex> values);

    ComplexMatrix adjoint() const;
    ComplexMatrix block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;
    ComplexMatrix columns(std::size_t c0, std::size_t ncols) const { return block(0, c0, rows_, ncols); }

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scale);

    bool all_finite() const noexcept;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scale, ComplexMatrix a);

// [a | b], same row count.
ComplexMatrix hstack(const ComplexMatrix& a, const ComplexMatrix& b);

// Vector helpers on std::vector<Complex>.
Complex inner(std::span<const Complex> a, std::span<const Complex> b); // a^H b
double norm(std::span<const Complex> v);
std::vector<Complex> normalized(std::span<const Complex> v);

struct SvdResult {
    ComplexMatrix left_vectors;          // rows x k, orthonormal columns
    std::vector<double> singular_values; // k = min(rows, cols), nonincreasing
    ComplexMatrix right_vectors;         // cols x k, orthonormal columns
};

// Thin SVD by one-sided (Hestenes) Jacobi. Throws NumericalFailure if the sweep cap is hit.
SvdResult svd(const ComplexMatrix& a);

// Singular values only, same algorithm as svd().
std::vector<double> singular_values(const ComplexMatrix& a);

// Complete right singular basis: all cols() right vectors as columns of a unitary
// cols x cols matrix, ordered by nonincreasing singular value. When rows < cols the
// trailing columns span the null space.
struct RightBasis {
    ComplexMatrix vectors;               // cols x cols
    std::vector<double> singular_values; // cols entries, zero-padded
};
RightBasis right_singular_basis(const ComplexMatrix& a);

// log2 det(I + scale * A A^H), computed through singular values.
double logdet_ipaa(double scale, const ComplexMatrix& a);

double frobenius_norm(const ComplexMatrix& a);

// Euclidean distance from row `row_index` to the span of the remaining rows.
double row_subspace_distance(const ComplexMatrix& m, std::size_t row_index);

// (log2 det(I + s A A^H), log2 det(I + s A^H A)), each through its own Jacobi run.
std::pair<double, double> det_commute_check(const ComplexMatrix& a, double scale);

// Inverse of a square matrix by Gauss-Jordan with partial pivoting.
// Throws DegenerateDraw if a pivot vanishes.
ComplexMatrix inverse(const ComplexMatrix& a);

} // namespace stalecsi
