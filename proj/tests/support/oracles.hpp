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

// Test-only reference implementations. Each one uses a different algorithm from the
// library code it checks (LU instead of Jacobi, normal equations instead of SVD
// projections, closed-form 2 x 2 eigenvalues, brute-force scans).

#include "stalecsi/numerics.hpp"
#include "stalecsi/rng.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

using stalecsi::Complex;
using stalecsi::ComplexMatrix;

inline ComplexMatrix gaussian(std::size_t rows, std::size_t cols, stalecsi::Stream& rng) {
    ComplexMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rng.complex_normal();
    return m;
}

// Determinant by LU with partial pivoting.
inline Complex det(ComplexMatrix a) {
    const std::size_t n = a.rows();
    Complex d = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t r = k + 1; r < n; ++r)
            if (std::abs(a(r, k)) > std::abs(a(piv, k)))
                piv = r;
        if (a(piv, k) == Complex{})
            return 0.0;
        if (piv != k) {
            for (std::size_t c = 0; c < n; ++c)
                std::swap(a(k, c), a(piv, c));
            d = -d;
        }
        d *= a(k, k);
        for (std::size_t r = k + 1; r < n; ++r) {
            const Complex f = a(r, k) / a(k, k);
            for (std::size_t c = k; c < n; ++c)
                a(r, c) -= f * a(k, c);
        }
    }
    return d;
}

// log2 det(I + s A A^H) through an explicit LU determinant.
inline double logdet_ipaa(double s, const ComplexMatrix& a) {
    ComplexMatrix g = a * a.adjoint();
    for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t c = 0; c < g.cols(); ++c)
            g(r, c) = (r == c ? 1.0 : 0.0) + s * g(r, c);
    return std::log2(std::abs(det(g)));
}

// Solves the square system G x = b by Gaussian elimination.
inline std::vector<Complex> solve(ComplexMatrix g, std::vector<Complex> b) {
    const std::size_t n = g.rows();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t r = k + 1; r < n; ++r)
            if (std::abs(g(r, k)) > std::abs(g(piv, k)))
                piv = r;
        for (std::size_t c = 0; c < n; ++c)
            std::swap(g(k, c), g(piv, c));
        std::swap(b[k], b[piv]);
        for (std::size_t r = k + 1; r < n; ++r) {
            const Complex f = g(r, k) / g(k, k);
            for (std::size_t c = k; c < n; ++c)
                g(r, c) -= f * g(k, c);
            b[r] -= f * b[k];
        }
    }
    std::vector<Complex> x(n);
    for (std::size_t k = n; k-- > 0;) {
        Complex acc = b[k];
        for (std::size_t c = k + 1; c < n; ++c)
            acc -= g(k, c) * x[c];
        x[k] = acc / g(k, k);
    }
    return x;
}

// Distance from row i to the span of the other rows via normal equations
// (other rows assumed linearly independent).
inline double row_distance(const ComplexMatrix& m, std::size_t i) {
    const std::size_t n = m.rows();
    const std::size_t w = m.cols();
    // Columns of B are the other rows, as vectors.
    ComplexMatrix b(w, n - 1);
    for (std::size_t r = 0, k = 0; r < n; ++r) {
        if (r == i)
            continue;
        for (std::size_t c = 0; c < w; ++c)
            b(c, k) = m(r, c);
        ++k;
    }
    const auto target = m.row(i);
    std::vector<Complex> rhs(n - 1);
    for (std::size_t k = 0; k < n - 1; ++k)
        for (std::size_t c = 0; c < w; ++c)
            rhs[k] += std::conj(b(c, k)) * target[c];
    const auto coef = solve(b.adjoint() * b, rhs);
    double acc = 0.0;
    for (std::size_t c = 0; c < w; ++c) {
        Complex fit{};
        for (std::size_t k = 0; k < n - 1; ++k)
            fit += b(c, k) * coef[k];
        acc += std::norm(target[c] - fit);
    }
    return std::sqrt(acc);
}

// Singular values of a 2 x 2 matrix from the eigenvalues of A^H A.
inline std::pair<double, double> singular_values_2x2(const ComplexMatrix& a) {
    const ComplexMatrix g = a.adjoint() * a;
    const double p = g(0, 0).real();
    const double q = g(1, 1).real();
    const double off = std::norm(g(0, 1));
    const double mean = 0.5 * (p + q);
    const double rad = std::sqrt(0.25 * (p - q) * (p - q) + off);
    const double hi = mean + rad;
    // |det A| / s_1 avoids cancellation in the small singular value.
    const double s1 = std::sqrt(hi);
    const double d = std::abs(a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0));
    return {s1, s1 > 0.0 ? d / s1 : 0.0};
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    double m = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            m = std::max(m, std::abs(a(r, c) - b(r, c)));
    return m;
}

// max |Q^H Q - I|
inline double orthonormality_error(const ComplexMatrix& q) {
    return max_abs_diff(q.adjoint() * q, ComplexMatrix::identity(q.cols()));
}

} // namespace oracle
