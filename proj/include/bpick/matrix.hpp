/*
   Copyright 2026 The bpick Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

///
/// \file matrix.hpp
///
/// Small dense matrices, cyclic Jacobi eigenvalues for real symmetric
/// matrices, and an exact positive-semidefiniteness test by symmetric
/// elimination.
///

#ifndef BPICK_MATRIX_HPP
#define BPICK_MATRIX_HPP

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <numeric>
#include <vector>

#include "scalar.hpp"

namespace bpick {

template <Scalar T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, T fill = T(0)) : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    Matrix(std::initializer_list<std::initializer_list<T>> rows)
    {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        a_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_)
                throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
            a_.insert(a_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    static Matrix diagonal(const std::vector<T>& d)
    {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i)
            m(i, i) = d[i];
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    friend Matrix operator*(const Matrix& l, const Matrix& r)
    {
        if (l.cols_ != r.rows_)
            throw Error(ErrorCode::DimensionMismatch, "matrix product");
        Matrix m(l.rows_, r.cols_);
        for (std::size_t i = 0; i < l.rows_; ++i)
            for (std::size_t k = 0; k < l.cols_; ++k)
                for (std::size_t j = 0; j < r.cols_; ++j)
                    m(i, j) += l(i, k) * r(k, j);
        return m;
    }

    friend Matrix operator-(const Matrix& l, const Matrix& r)
    {
        if (l.rows_ != r.rows_ || l.cols_ != r.cols_)
            throw Error(ErrorCode::DimensionMismatch, "matrix difference");
        Matrix m = l;
        for (std::size_t k = 0; k < m.a_.size(); ++k)
            m.a_[k] -= r.a_[k];
        return m;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

    /// Max row sum of |entries|.
    double norm_inf() const
    {
        double best = 0;
        for (std::size_t i = 0; i < rows_; ++i) {
            double s = 0;
            for (std::size_t j = 0; j < cols_; ++j)
                s += magnitude((*this)(i, j));
            best = std::max(best, s);
        }
        return best;
    }

    /// Symmetric permutation P M P^T, with `perm[i]` the old index of new row i.
    Matrix permuted(const std::vector<std::size_t>& perm) const
    {
        Matrix m(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                m(i, j) = (*this)(perm[i], perm[j]);
        return m;
    }

    template <Scalar U>
    Matrix<U> cast() const
    {
        Matrix<U> m(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                m(i, j) = scalar_cast<U>((*this)(i, j));
        return m;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations,
/// ascending.
inline std::vector<double> symmetric_eigenvalues(Matrix<double> a)
{
    const std::size_t n = a.rows();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0, total = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                total += a(i, j) * a(i, j);
                if (i != j)
                    off += a(i, j) * a(i, j);
            }
        if (off <= 1e-30 * total || off == 0.0)
            break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double apq = a(p, q);
                if (apq == 0.0)
                    continue;
                double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i)
        ev[i] = a(i, i);
    std::sort(ev.begin(), ev.end());
    return ev;
}

/// Result of an exact semidefiniteness test.
struct ExactInertia {
    bool psd = false;
    bool pd = false;
    std::size_t rank = 0;
};

/// Exact test by symmetric elimination with diagonal pivoting: a zero pivot
/// must come with a zero row, a negative pivot refutes semidefiniteness.
inline ExactInertia exact_inertia(Matrix<Rational> a)
{
    const std::size_t n = a.rows();
    ExactInertia out;
    std::vector<std::size_t> live(n);
    std::iota(live.begin(), live.end(), 0);
    while (!live.empty()) {
        auto piv = std::max_element(live.begin(), live.end(),
                                    [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });
        const std::size_t p = *piv;
        if (a(p, p) < 0)
            return out;
        if (a(p, p) == 0) {
            for (std::size_t i : live)
                for (std::size_t j : live)
                    if (a(i, j) != 0)
                        return out;
            break;
        }
        live.erase(piv);
        for (std::size_t i : live) {
            if (a(i, p) == 0)
                continue;
            Rational f = a(i, p) / a(p, p);
            for (std::size_t j : live)
                a(i, j) -= f * a(p, j);
        }
        ++out.rank;
    }
    out.psd = true;
    out.pd = out.rank == n;
    return out;
}

}  // namespace bpick

#endif  // BPICK_MATRIX_HPP
