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

#include "stalecsi/numerics.hpp"

#include "stalecsi/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace stalecsi {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0)
        throw std::invalid_argument("ComplexMatrix: dimensions must be positive");
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
    if (rows == 0 || cols == 0)
        throw std::invalid_argument("ComplexMatrix: dimensions must be positive");
    if (data_.size() != rows * cols)
        throw std::invalid_argument("ComplexMatrix: entry count must equal rows * cols");
    if (!all_finite())
        throw std::invalid_argument("ComplexMatrix: entries must be finite");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    if (rows_ == 0 || cols_ == 0)
        throw std::invalid_argument("ComplexMatrix: dimensions must be positive");
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw std::invalid_argument("ComplexMatrix: ragged initializer");
        data_.insert(data_.end(), r.begin(), r.end());
    }
    if (!all_finite())
        throw std::invalid_argument("ComplexMatrix: entries must be finite");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::from_columns(std::span<const std::vector<Complex>> columns) {
    if (columns.empty())
        throw std::invalid_argument("from_columns: no columns");
    ComplexMatrix m(columns.front().size(), columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
        m.set_col(c, columns[c]);
    return m;
}

std::vector<Complex> ComplexMatrix::row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<Complex> ComplexMatrix::col(std::size_t c) const {
    std::vector<Complex> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out[r] = (*this)(r, c);
    return out;
}

void ComplexMatrix::set_row(std::size_t r, std::span<const Complex> values) {
    if (values.size() != cols_)
        throw std::invalid_argument("set_row: length mismatch");
    std::copy(values.begin(), values.end(), data_.begin() + static_cast<std::ptrdiff_t>(r * cols_));
}

void ComplexMatrix::set_col(std::size_t c, std::span<const Complex> values) {
    if (values.size() != rows_)
        throw std::invalid_argument("set_col: length mismatch");
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, c) = values[r];
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            out(c, r) = std::conj((*this)(r, c));
    return out;
}

ComplexMatrix ComplexMatrix::block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const {
    if (r0 + nrows > rows_ || c0 + ncols > cols_)
        throw std::out_of_range("ComplexMatrix::block out of range");
    ComplexMatrix out(nrows, ncols);
    for (std::size_t r = 0; r < nrows; ++r)
        for (std::size_t c = 0; c < ncols; ++c)
            out(r, c) = (*this)(r0 + r, c0 + c);
    return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("ComplexMatrix +=: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] += other.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("ComplexMatrix -=: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] -= other.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
    for (auto& x : data_)
        x *= scale;
    return *this;
}

bool ComplexMatrix::all_finite() const noexcept {
    return std::all_of(data_.begin(), data_.end(),
                       [](const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("ComplexMatrix *: inner dimension mismatch");
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{})
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) += aik * b(k, j);
        }
    return out;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex scale, ComplexMatrix a) { return a *= scale; }

ComplexMatrix hstack(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows())
        throw std::invalid_argument("hstack: row count mismatch");
    ComplexMatrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c)
            out(r, c) = a(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c)
            out(r, a.cols() + c) = b(r, c);
    }
    return out;
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("inner: length mismatch");
    Complex acc{};
    for (std::size_t i = 0; i < a.size(); ++i)
        acc += std::conj(a[i]) * b[i];
    return acc;
}

double norm(std::span<const Complex> v) {
    double acc = 0.0;
    for (const auto& z : v)
        acc += std::norm(z);
    return std::sqrt(acc);
}

std::vector<Complex> normalized(std::span<const Complex> v) {
    const double n = norm(v);
    if (!(n > 0.0))
        throw DegenerateDraw("normalized: zero vector");
    std::vector<Complex> out(v.begin(), v.end());
    for (auto& z : out)
        z /= n;
    return out;
}

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kRotationTol = 1e-14;
constexpr double kZeroColumn = 1e-290;
constexpr double kRelativeRank = 1e-13;
// Columns whose squared norm falls below this fraction of |A|_F^2, or of the partner
// column's, are roundoff and are not rotated.
constexpr double kNegligibleColumn = 1e-60;
constexpr double kNegligiblePair = 1e-32;

// One-sided Jacobi on the columns of `a`: finds unitary V with W = A V having
// mutually orthogonal columns. Storage is column-major for the inner loops.
struct ColumnJacobi {
    std::size_t m = 0;
    std::size_t n = 0;
    std::vector<Complex> w;
    std::vector<Complex> v;
    std::vector<double> norms;       // column norms of W
    std::vector<std::size_t> order;  // column indices by nonincreasing norm
};

ColumnJacobi orthogonalize_columns(const ComplexMatrix& a) {
    ColumnJacobi j;
    j.m = a.rows();
    j.n = a.cols();
    const std::size_t m = j.m;
    const std::size_t n = j.n;
    j.w.resize(m * n);
    j.v.assign(n * n, Complex{});
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; r < m; ++r)
            j.w[c * m + r] = a(r, c);
        j.v[c * n + c] = 1.0;
    }

    double frob2 = 0.0;
    for (const auto& z : j.w)
        frob2 += std::norm(z);
    const double negligible = kNegligibleColumn * frob2;

    bool converged = false;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        converged = true;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                Complex* wp = &j.w[p * m];
                Complex* wq = &j.w[q * m];
                double alpha = 0.0;
                double beta = 0.0;
                Complex gamma{};
                for (std::size_t i = 0; i < m; ++i) {
                    alpha += std::norm(wp[i]);
                    beta += std::norm(wq[i]);
                    gamma += std::conj(wp[i]) * wq[i];
                }
                const double g = std::abs(gamma);
                if (g == 0.0 || g <= kRotationTol * std::sqrt(alpha) * std::sqrt(beta) ||
                    std::max(alpha, beta) <= negligible ||
                    std::min(alpha, beta) <= kNegligiblePair * std::max(alpha, beta))
                    continue;
                converged = false;

                // Rotate (w_p, e^{-i phi} w_q) with a real Jacobi rotation.
                const Complex unphase = std::conj(gamma) / g;
                const double zeta = (beta - alpha) / (2.0 * g);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::hypot(1.0, zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (std::size_t i = 0; i < m; ++i) {
                    const Complex xp = wp[i];
                    const Complex xq = unphase * wq[i];
                    wp[i] = c * xp - s * xq;
                    wq[i] = s * xp + c * xq;
                }
                Complex* vp = &j.v[p * n];
                Complex* vq = &j.v[q * n];
                for (std::size_t i = 0; i < n; ++i) {
                    const Complex xp = vp[i];
                    const Complex xq = unphase * vq[i];
                    vp[i] = c * xp - s * xq;
                    vq[i] = s * xp + c * xq;
                }
            }
        }
    }
    if (!converged)
        throw NumericalFailure("svd: one-sided Jacobi did not converge within " +
                               std::to_string(kMaxSweeps) + " sweeps");

    j.norms.resize(n);
    for (std::size_t c = 0; c < n; ++c)
        j.norms[c] = norm(std::span<const Complex>(&j.w[c * m], m));
    for (double x : j.norms)
        if (!std::isfinite(x))
            throw NumericalFailure("svd: non-finite singular value");
    j.order.resize(n);
    std::iota(j.order.begin(), j.order.end(), std::size_t{0});
    std::stable_sort(j.order.begin(), j.order.end(),
                     [&](std::size_t x, std::size_t y) { return j.norms[x] > j.norms[y]; });
    return j;
}

// Fill columns [first, k) of `u` with an orthonormal completion of columns [0, first).
void complete_orthonormal(ComplexMatrix& u, std::size_t first) {
    const std::size_t m = u.rows();
    std::size_t next_basis = 0;
    for (std::size_t c = first; c < u.cols(); ++c) {
        for (;;) {
            if (next_basis >= m)
                throw NumericalFailure("svd: orthonormal completion failed");
            std::vector<Complex> cand(m, Complex{});
            cand[next_basis++] = 1.0;
            for (int pass = 0; pass < 2; ++pass)
                for (std::size_t k = 0; k < c; ++k) {
                    const auto basis = u.col(k);
                    const Complex proj = inner(basis, cand);
                    for (std::size_t i = 0; i < m; ++i)
                        cand[i] -= proj * basis[i];
                }
            const double nrm = norm(cand);
            if (nrm > 0.5) {
                for (auto& z : cand)
                    z /= nrm;
                u.set_col(c, cand);
                break;
            }
        }
    }
}

SvdResult svd_tall(const ComplexMatrix& a) {
    const auto j = orthogonalize_columns(a);
    const std::size_t m = j.m;
    const std::size_t n = j.n;
    SvdResult out{ComplexMatrix(m, n), std::vector<double>(n), ComplexMatrix(n, n)};
    // Columns at roundoff level relative to s_1 carry no direction; complete them instead.
    const double cutoff = std::max(kZeroColumn, kRelativeRank * j.norms[j.order[0]]);
    std::size_t nonzero = 0;
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t src = j.order[k];
        out.singular_values[k] = j.norms[src];
        for (std::size_t i = 0; i < n; ++i)
            out.right_vectors(i, k) = j.v[src * n + i];
        if (j.norms[src] > cutoff) {
            for (std::size_t i = 0; i < m; ++i)
                out.left_vectors(i, k) = j.w[src * m + i] / j.norms[src];
            ++nonzero;
        }
    }
    if (nonzero < n)
        complete_orthonormal(out.left_vectors, nonzero);
    return out;
}

std::vector<double> sorted_norms(const ColumnJacobi& j, std::size_t count) {
    std::vector<double> out(count);
    for (std::size_t k = 0; k < count; ++k)
        out[k] = j.norms[j.order[k]];
    return out;
}

double sum_log2_1p(double scale, const std::vector<double>& sigma) {
    double acc = 0.0;
    for (double s : sigma)
        acc += std::log1p(scale * s * s);
    return acc / std::log(2.0);
}

} // namespace

SvdResult svd(const ComplexMatrix& a) {
    if (a.empty())
        throw std::invalid_argument("svd: empty matrix");
    if (!a.all_finite())
        throw std::invalid_argument("svd: non-finite entries");
    if (a.rows() >= a.cols())
        return svd_tall(a);
    auto t = svd_tall(a.adjoint());
    return {std::move(t.right_vectors), std::move(t.singular_values), std::move(t.left_vectors)};
}

std::vector<double> singular_values(const ComplexMatrix& a) {
    if (a.empty())
        throw std::invalid_argument("singular_values: empty matrix");
    if (a.rows() >= a.cols()) {
        const auto j = orthogonalize_columns(a);
        return sorted_norms(j, a.cols());
    }
    const auto j = orthogonalize_columns(a.adjoint());
    return sorted_norms(j, a.rows());
}

RightBasis right_singular_basis(const ComplexMatrix& a) {
    const auto j = orthogonalize_columns(a);
    const std::size_t n = j.n;
    RightBasis out{ComplexMatrix(n, n), std::vector<double>(n)};
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t src = j.order[k];
        out.singular_values[k] = k < j.m ? j.norms[src] : 0.0;
        for (std::size_t i = 0; i < n; ++i)
            out.vectors(i, k) = j.v[src * n + i];
    }
    return out;
}

double logdet_ipaa(double scale, const ComplexMatrix& a) {
    if (!(scale > 0.0))
        throw std::invalid_argument("logdet_ipaa: scale must be positive");
    return sum_log2_1p(scale, singular_values(a));
}

double frobenius_norm(const ComplexMatrix& a) {
    return norm(a.data());
}

double row_subspace_distance(const ComplexMatrix& m, std::size_t row_index) {
    if (m.rows() < 2)
        throw std::invalid_argument("row_subspace_distance: need at least two rows");
    if (row_index >= m.rows())
        throw std::out_of_range("row_subspace_distance: row index out of range");

    // Columns of `span` are the other rows, as vectors.
    ComplexMatrix span(m.cols(), m.rows() - 1);
    for (std::size_t r = 0, k = 0; r < m.rows(); ++r) {
        if (r == row_index)
            continue;
        for (std::size_t c = 0; c < m.cols(); ++c)
            span(c, k) = m(r, c);
        ++k;
    }
    const auto dec = svd(span);
    const double smax = dec.singular_values.front();
    const double cutoff = smax * 1e-13 * static_cast<double>(std::max(span.rows(), span.cols()));

    std::vector<Complex> residual = m.row(row_index);
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t k = 0; k < dec.singular_values.size(); ++k) {
            if (!(dec.singular_values[k] > cutoff))
                break;
            const auto basis = dec.left_vectors.col(k);
            const Complex proj = inner(basis, residual);
            for (std::size_t i = 0; i < residual.size(); ++i)
                residual[i] -= proj * basis[i];
        }
    }
    return norm(residual);
}

std::pair<double, double> det_commute_check(const ComplexMatrix& a, double scale) {
    if (!(scale > 0.0))
        throw std::invalid_argument("det_commute_check: scale must be positive");
    // A A^H through the columns of A^H, A^H A through the columns of A.
    const auto rows_route = orthogonalize_columns(a.adjoint());
    const auto cols_route = orthogonalize_columns(a);
    return {sum_log2_1p(scale, rows_route.norms), sum_log2_1p(scale, cols_route.norms)};
}

ComplexMatrix inverse(const ComplexMatrix& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("inverse: matrix must be square");
    const std::size_t n = a.rows();
    ComplexMatrix work = a;
    ComplexMatrix inv = ComplexMatrix::identity(n);
    double scale = 0.0;
    for (const auto& z : a.data())
        scale = std::max(scale, std::abs(z));
    if (!(scale > 0.0))
        throw DegenerateDraw("inverse: zero matrix");

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(work(r, col)) > std::abs(work(pivot, col)))
                pivot = r;
        if (std::abs(work(pivot, col)) <= 1e-14 * scale)
            throw DegenerateDraw("inverse: matrix is numerically singular");
        if (pivot != col)
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(work(pivot, c), work(col, c));
                std::swap(inv(pivot, c), inv(col, c));
            }
        const Complex d = work(col, col);
        for (std::size_t c = 0; c < n; ++c) {
            work(col, c) /= d;
            inv(col, c) /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col)
                continue;
            const Complex f = work(r, col);
            if (f == Complex{})
                continue;
            for (std::size_t c = 0; c < n; ++c) {
                work(r, c) -= f * work(col, c);
                inv(r, c) -= f * inv(col, c);
            }
        }
    }
    return inv;
}

} // namespace stalecsi
