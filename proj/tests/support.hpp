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

// Test-only helpers: instance generators and oracles that do not share code
// paths with the library (cofactor determinants, Gauss-Jordan inverses,
// finite differences, direct substitution).

#ifndef BPICK_TESTS_SUPPORT_HPP
#define BPICK_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "bpick/bpick.hpp"

namespace bpick::testing {

using Q = Rational;
using EQ = ExtReal<Q>;
using ED = ExtReal<double>;

inline Q q(long long n, long long d = 1) { return Q(n) / Q(d); }

template <RealScalar T = Q>
BoundaryProblem<T> problem(std::vector<T> x, std::vector<ExtReal<T>> w, std::vector<T> v)
{
    return {std::move(x), std::move(w), std::move(v)};
}

inline BoundaryProblem<Q> two_point() { return problem<Q>({0, 1}, {EQ(q(0)), EQ(q(1))}, {2, 2}); }
inline BoundaryProblem<Q> three_point() { return problem<Q>({1, 2, 3}, {EQ(q(1)), EQ(q(2)), EQ(q(3))}, {1, 2, 3}); }
inline BoundaryProblem<Q> augmented_pole() { return problem<Q>({-1, 0, 1}, {EQ(q(-1)), EQ(q(0)), EQ(q(1))}, {1, 2, 1}); }

/// z as a rational function.
template <RealScalar T = Q>
RationalFunction<T> ident() { return RationalFunction<T>::identity(); }

template <RealScalar T = Q>
RationalFunction<T> ratfn(std::vector<T> num, std::vector<T> den)
{
    return RationalFunction<T>(Polynomial<T>(std::move(num)), Polynomial<T>(std::move(den)));
}

// ---------------------------------------------------------------------------
// oracles

/// Determinant by cofactor expansion along the first row.
template <class T>
T cofactor_det(const Matrix<T>& m)
{
    const std::size_t n = m.rows();
    if (n == 0)
        return T(1);
    if (n == 1)
        return m(0, 0);
    T out = T(0);
    for (std::size_t c = 0; c < n; ++c) {
        Matrix<T> sub(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, jj = 0; j < n; ++j)
                if (j != c)
                    sub(i - 1, jj++) = m(i, j);
        const T term = m(0, c) * cofactor_det(sub);
        out += (c % 2 == 0) ? term : T(-term);
    }
    return out;
}

/// Positive semidefinite iff every principal minor is >= 0 (exact).
inline bool psd_by_minors(const Matrix<Q>& m)
{
    const std::size_t n = m.rows();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i))
                idx.push_back(i);
        Matrix<Q> sub(idx.size(), idx.size());
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = 0; b < idx.size(); ++b)
                sub(a, b) = m(idx[a], idx[b]);
        if (cofactor_det(sub) < 0)
            return false;
    }
    return true;
}

/// Inverse of an invertible matrix by Gauss-Jordan elimination with
/// nonzero pivot search (exact).
inline Matrix<Q> gauss_jordan_inverse(Matrix<Q> a)
{
    const std::size_t n = a.rows();
    Matrix<Q> inv = Matrix<Q>::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0)
            ++p;
        if (p == n)
            throw std::runtime_error("singular");
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(a(c, j), a(p, j));
            std::swap(inv(c, j), inv(p, j));
        }
        const Q d = a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) /= d;
            inv(c, j) /= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a(i, c) == 0)
                continue;
            const Q f = a(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

/// Closed-form diagonal slack m_ii - m_i^T M_{-i}^{-1} m_i, valid when the
/// principal submatrix without i is invertible.
inline Q closed_form_slack(const Matrix<Q>& m, std::size_t i)
{
    const std::size_t n = m.rows();
    std::vector<std::size_t> rest;
    for (std::size_t k = 0; k < n; ++k)
        if (k != i)
            rest.push_back(k);
    Matrix<Q> sub(n - 1, n - 1);
    for (std::size_t a = 0; a < rest.size(); ++a)
        for (std::size_t b = 0; b < rest.size(); ++b)
            sub(a, b) = m(rest[a], rest[b]);
    const auto inv = gauss_jordan_inverse(sub);
    Q s = m(i, i);
    for (std::size_t a = 0; a < rest.size(); ++a)
        for (std::size_t b = 0; b < rest.size(); ++b)
            s -= m(i, rest[a]) * inv(a, b) * m(rest[b], i);
    return s;
}

/// Central difference derivative of a real function.
template <class F>
double central_diff(F&& f, double x, double h = 1e-5)
{
    return (f(x + h) - f(x - h)) / (2 * h);
}

// ---------------------------------------------------------------------------
// generators

class Gen {
public:
    explicit Gen(unsigned seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin(int num, int den) { return integer(1, den) <= num; }

    /// Quarter-integer in [lo, hi].
    Q quarter(int lo, int hi) { return q(integer(4 * lo, 4 * hi), 4); }

    Q positive(int hi = 4) { return q(integer(1, 4 * hi), 4); }

    std::vector<Q> distinct_nodes(std::size_t n)
    {
        std::vector<Q> x;
        while (x.size() < n) {
            Q c = quarter(-5, 5);
            if (std::find(x.begin(), x.end(), c) == x.end())
                x.push_back(c);
        }
        return x;
    }

    /// Random targets with some repeats and, if allowed, infinities.
    std::vector<EQ> targets(std::size_t n, bool allow_inf)
    {
        std::vector<EQ> w;
        for (std::size_t j = 0; j < n; ++j) {
            if (allow_inf && coin(1, 4))
                w.push_back(EQ::infinity());
            else if (j > 0 && coin(1, 5))
                w.push_back(w[integer(0, static_cast<int>(j) - 1)]);
            else
                w.push_back(EQ(quarter(-5, 5)));
        }
        return w;
    }

    /// Diagonal entries inflated past the off-diagonal row sums: the Pick
    /// matrix is strictly diagonally dominant, hence positive definite.
    BoundaryProblem<Q> positive_definite(std::size_t n, bool allow_inf)
    {
        BoundaryProblem<Q> p;
        p.nodes = distinct_nodes(n);
        p.targets = targets(n, allow_inf);
        p.derivs.assign(n, Q(1));
        const auto m = pick_entries(p);
        for (std::size_t i = 0; i < n; ++i) {
            Q row = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i)
                    row += m(i, j) < 0 ? Q(-m(i, j)) : m(i, j);
            p.derivs[i] = row + positive(2);
        }
        return p;
    }

    /// Arbitrary data with positive derivatives (any Pick matrix).
    BoundaryProblem<Q> arbitrary(std::size_t n, bool allow_inf)
    {
        BoundaryProblem<Q> p;
        p.nodes = distinct_nodes(n);
        p.targets = targets(n, allow_inf);
        for (std::size_t j = 0; j < n; ++j)
            p.derivs.push_back(positive(4));
        return p;
    }

    /// a z + b + sum c_k/(p_k - z) with `poles` terms and a > 0 unless
    /// `poles` > 0 and the coin says otherwise.
    RationalFunction<Q> pick_function(std::size_t poles, bool linear = true)
    {
        std::vector<PoleTerm<Q>> terms;
        std::vector<Q> used;
        while (terms.size() < poles) {
            Q p = quarter(-5, 5);
            if (std::find(used.begin(), used.end(), p) != used.end())
                continue;
            used.push_back(p);
            terms.push_back({positive(3), p});
        }
        return make_pick_function(linear ? positive(2) : Q(0), quarter(-3, 3), terms);
    }

    /// Boundary data f(x_j), f'(x_j) (or a pole with residue -1/v_j) of a
    /// constructed Pick function at n nodes.
    BoundaryProblem<Q> data_of(const RationalFunction<Q>& f, std::size_t n, bool allow_poles)
    {
        BoundaryProblem<Q> p;
        std::vector<Q> poles;
        for (const Q& x : distinct_nodes(4 * n + 8)) {
            if (p.size() == n)
                break;
            if (f.is_pole_at(x)) {
                if (!allow_poles)
                    continue;
                p.nodes.push_back(x);
                p.targets.push_back(EQ::infinity());
                p.derivs.push_back(Q(-1) / f.residue_at(x));
                continue;
            }
            p.nodes.push_back(x);
            p.targets.push_back(EQ(f.value_at(x)));
            p.derivs.push_back(f.derivative_at(x));
        }
        return p;
    }

    std::mt19937& engine() { return rng_; }

private:
    std::mt19937 rng_;
};

/// Nodes that are poles of f, for building data with infinite targets.
inline std::vector<Q> real_poles(const RationalFunction<Q>& f, const std::vector<PoleTerm<Q>>& terms)
{
    std::vector<Q> out;
    for (const auto& t : terms)
        if (f.is_pole_at(t.pole))
            out.push_back(t.pole);
    return out;
}

}  // namespace bpick::testing

#endif  // BPICK_TESTS_SUPPORT_HPP
