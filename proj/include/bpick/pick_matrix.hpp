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
/// \file pick_matrix.hpp
///
/// Boundary interpolation data on the real line and its Pick matrix:
///
///     m_jj = v_j,
///     m_ij = (w_i - w_j) / (x_i - x_j)   if w_i, w_j finite,
///            1 / (x_i - x_j)             if w_i = inf, w_j finite,
///            1 / (x_j - x_i)             if w_i finite, w_j = inf,
///            0                           if w_i = w_j = inf.
///
/// A positive semidefinite matrix is minimally positive when no positive
/// diagonal entry can be decreased without losing semidefiniteness. The
/// largest admissible decrease at index i (the diagonal slack) is found by
/// bisection on [0, m_ii], since feasibility is monotone in the decrease.
///

#ifndef BPICK_PICK_MATRIX_HPP
#define BPICK_PICK_MATRIX_HPP

#include <algorithm>
#include <cfloat>
#include <string>
#include <vector>

#include "extended.hpp"
#include "matrix.hpp"

namespace bpick {

/// Nodes x_j, targets w_j in R u {inf}, derivative data v_j >= 0.
/// A target at infinity asks for a simple pole of residue -1/v_j.
template <RealScalar T>
struct BoundaryProblem {
    std::vector<T> nodes;
    std::vector<ExtReal<T>> targets;
    std::vector<T> derivs;

    std::size_t size() const noexcept { return nodes.size(); }

    bool has_infinite_target() const
    {
        return std::any_of(targets.begin(), targets.end(), [](const auto& w) { return w.is_infinite(); });
    }

    /// Throws InvalidProblem unless the lengths agree, nodes are distinct,
    /// all v_j >= 0, and v_j > 0 wherever w_j = inf.
    void validate(const ToleranceProfile& tol = {}) const
    {
        if (targets.size() != nodes.size() || derivs.size() != nodes.size())
            throw Error(ErrorCode::InvalidProblem, "nodes, targets and derivs differ in length");
        for (std::size_t i = 0; i < nodes.size(); ++i)
            for (std::size_t j = i + 1; j < nodes.size(); ++j)
                if (near_equal(nodes[i], nodes[j], tol.node))
                    throw Error(ErrorCode::InvalidProblem, "repeated node " + to_string(nodes[i]));
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            if (derivs[j] < 0)
                throw Error(ErrorCode::InvalidProblem, "negative derivative bound at node " + std::to_string(j));
            if (targets[j].is_infinite() && !(derivs[j] > 0))
                throw Error(ErrorCode::InvalidProblem, "infinite target needs v > 0 at node " + std::to_string(j));
        }
    }

    /// Relabels the nodes: new node i is old node order[i].
    BoundaryProblem permuted(const std::vector<std::size_t>& order) const
    {
        if (order.size() != size())
            throw Error(ErrorCode::InvalidProblem, "node order has the wrong length");
        std::vector<bool> seen(size(), false);
        BoundaryProblem out;
        for (std::size_t k : order) {
            if (k >= size() || seen[k])
                throw Error(ErrorCode::InvalidProblem, "node order is not a permutation");
            seen[k] = true;
            out.nodes.push_back(nodes[k]);
            out.targets.push_back(targets[k]);
            out.derivs.push_back(derivs[k]);
        }
        return out;
    }

    template <RealScalar U>
    BoundaryProblem<U> cast() const
    {
        BoundaryProblem<U> out;
        for (std::size_t j = 0; j < size(); ++j) {
            out.nodes.push_back(scalar_cast<U>(nodes[j]));
            out.targets.push_back(targets[j].is_infinite() ? ExtReal<U>::infinity()
                                                           : ExtReal<U>(scalar_cast<U>(targets[j].value())));
            out.derivs.push_back(scalar_cast<U>(derivs[j]));
        }
        return out;
    }
};

enum class Classification {
    PositiveDefinite,
    MinimallyPositive,
    PositiveSingularNotMinimal,
    Indefinite,
};

inline const char* to_string(Classification c)
{
    switch (c) {
    case Classification::PositiveDefinite: return "PositiveDefinite";
    case Classification::MinimallyPositive: return "MinimallyPositive";
    case Classification::PositiveSingularNotMinimal: return "PositiveSingularNotMinimal";
    case Classification::Indefinite: return "Indefinite";
    }
    return "Unknown";
}

template <RealScalar T>
struct PickMatrix {
    Matrix<T> entries;
    Classification classification = Classification::Indefinite;
    std::size_t rank = 0;
    /// Smallest eigenvalue (rounded in exact mode).
    double min_eigenvalue = 0;
    /// Diagonal slacks; filled only for singular semidefinite matrices.
    std::vector<T> slacks;
    /// Set when some decision was taken within a factor 100 of its threshold.
    bool marginal = false;
};

/// Raw Pick matrix entries for the (possibly infinite-target) problem.
template <RealScalar T>
Matrix<T> pick_entries(const BoundaryProblem<T>& p)
{
    const std::size_t n = p.size();
    Matrix<T> m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                m(i, j) = p.derivs[i];
                continue;
            }
            const auto& wi = p.targets[i];
            const auto& wj = p.targets[j];
            const T dx = p.nodes[i] - p.nodes[j];
            if (wi.is_finite() && wj.is_finite())
                m(i, j) = (wi.value() - wj.value()) / dx;
            else if (wi.is_infinite() && wj.is_finite())
                m(i, j) = T(1) / dx;
            else if (wi.is_finite() && wj.is_infinite())
                m(i, j) = T(-1) / dx;
            else
                m(i, j) = T(0);
        }
    }
    return m;
}

namespace detail {

template <RealScalar T>
void require_square_symmetric(const Matrix<T>& m, const ToleranceProfile& tol)
{
    if (m.rows() != m.cols())
        throw Error(ErrorCode::DimensionMismatch, "matrix is not square");
    const double scale = m.norm_inf();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i + 1; j < m.cols(); ++j) {
            bool ok;
            if constexpr (is_exact_v<T>)
                ok = m(i, j) == m(j, i);
            else
                ok = std::abs(m(i, j) - m(j, i)) <= tol.sym * (1.0 + scale);
            if (!ok)
                throw Error(ErrorCode::InvalidProblem, "matrix is not symmetric");
        }
}

inline double psd_threshold(const Matrix<double>& m, const ToleranceProfile& tol)
{
    return tol.psd * (1.0 + m.norm_inf());
}

template <RealScalar T>
double min_eigenvalue(const Matrix<T>& m)
{
    if (m.rows() == 0)
        return 0;
    return symmetric_eigenvalues(m.template cast<double>()).front();
}

/// Feasibility of M - t e_i e_i^T >= 0. In float mode the threshold sits at
/// rounding level below the smallest eigenvalue of M itself, so that a
/// singular direction through index i is not masked by the psd tolerance.
template <RealScalar T>
bool slack_feasible(const Matrix<T>& m, std::size_t i, const T& t, double float_floor)
{
    Matrix<T> s = m;
    s(i, i) -= t;
    if constexpr (is_exact_v<T>)
        return exact_inertia(s).psd;
    else
        return symmetric_eigenvalues(s).front() >= -float_floor;
}

template <RealScalar T>
double slack_floor(const Matrix<T>& m)
{
    if constexpr (is_exact_v<T>) {
        return 0.0;
    } else {
        double lmin = min_eigenvalue(m);
        return std::max(0.0, -lmin) + 64.0 * static_cast<double>(m.rows()) * DBL_EPSILON * (1.0 + m.norm_inf());
    }
}

}  // namespace detail

template <RealScalar T>
bool is_psd(const Matrix<T>& m, const ToleranceProfile& tol = {})
{
    detail::require_square_symmetric(m, tol);
    if (m.rows() == 0)
        return true;
    if constexpr (is_exact_v<T>)
        return exact_inertia(m).psd;
    else
        return symmetric_eigenvalues(m).front() >= -detail::psd_threshold(m, tol);
}

template <RealScalar T>
bool is_pd(const Matrix<T>& m, const ToleranceProfile& tol = {})
{
    detail::require_square_symmetric(m, tol);
    if (m.rows() == 0)
        return true;
    if constexpr (is_exact_v<T>)
        return exact_inertia(m).pd;
    else
        return symmetric_eigenvalues(m).front() > detail::psd_threshold(m, tol);
}

/// Number of eigenvalues above the psd threshold (exact rank in exact mode).
template <RealScalar T>
std::size_t numeric_rank(const Matrix<T>& m, const ToleranceProfile& tol = {})
{
    detail::require_square_symmetric(m, tol);
    if constexpr (is_exact_v<T>) {
        auto in = exact_inertia(m);
        if (in.psd)
            return in.rank;
        // Indefinite: fall back to eigenvalue magnitudes.
    }
    Matrix<double> md = m.template cast<double>();
    const double eps = detail::psd_threshold(md, tol);
    std::size_t r = 0;
    for (double l : symmetric_eigenvalues(md))
        if (std::abs(l) > eps)
            ++r;
    return r;
}

/// sup { t >= 0 : M - t e_i e_i^T >= 0 } by bisection on [0, m_ii], to
/// absolute tolerance slack * (1 + m_ii). Returns the feasible endpoint.
template <RealScalar T>
T max_diag_slack(const Matrix<T>& m, std::size_t i, const ToleranceProfile& tol = {})
{
    if (!is_psd(m, tol))
        throw Error(ErrorCode::NotPSD, "max_diag_slack needs a positive semidefinite matrix");
    if (i >= m.rows())
        throw Error(ErrorCode::DimensionMismatch, "index out of range");
    const T mii = m(i, i);
    if (!(mii > T(0)))
        return T(0);
    const double floor = detail::slack_floor(m);
    if (detail::slack_feasible(m, i, mii, floor))
        return mii;
    const double width = tol.slack * (1.0 + magnitude(mii));
    T lo = T(0), hi = mii;
    while (magnitude(T(hi - lo)) > width) {
        T mid = (lo + hi) / T(2);
        if (detail::slack_feasible(m, i, mid, floor))
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

/// Full classification with rank, slacks and the marginal flag.
template <RealScalar T>
PickMatrix<T> analyze(const Matrix<T>& m, const ToleranceProfile& tol = {})
{
    detail::require_square_symmetric(m, tol);
    PickMatrix<T> out;
    out.entries = m;
    const std::size_t n = m.rows();
    out.min_eigenvalue = detail::min_eigenvalue(m);
    if (n == 0) {
        out.classification = Classification::PositiveDefinite;
        return out;
    }
    if constexpr (!is_exact_v<T>) {
        const double eps = detail::psd_threshold(m, tol);
        const double a = std::abs(out.min_eigenvalue);
        if (a > 0.01 * eps && a < 100.0 * eps)
            out.marginal = true;
    }
    if (!is_psd(m, tol)) {
        out.classification = Classification::Indefinite;
        out.rank = numeric_rank(m, tol);
        return out;
    }
    out.rank = numeric_rank(m, tol);
    if (is_pd(m, tol)) {
        out.classification = Classification::PositiveDefinite;
        return out;
    }
    bool minimal = true;
    for (std::size_t i = 0; i < n; ++i) {
        T s = max_diag_slack(m, i, tol);
        const double width = tol.slack * (1.0 + magnitude(m(i, i)));
        const double sd = magnitude(s);
        if (sd > width)
            minimal = false;
        if (sd > 0.01 * width && sd < 100.0 * width)
            out.marginal = true;
        out.slacks.push_back(std::move(s));
    }
    out.classification = minimal ? Classification::MinimallyPositive : Classification::PositiveSingularNotMinimal;
    return out;
}

template <RealScalar T>
Classification classify(const Matrix<T>& m, const ToleranceProfile& tol = {})
{
    return analyze(m, tol).classification;
}

template <RealScalar T>
PickMatrix<T> build_pick_matrix(const BoundaryProblem<T>& p, const ToleranceProfile& tol = {})
{
    p.validate(tol);
    return analyze(pick_entries(p), tol);
}

/// D - C m11^{-1} B for the leading 1x1 block.
template <RealScalar T>
Matrix<T> schur_complement_11(const Matrix<T>& m)
{
    if (m.rows() == 0 || m.rows() != m.cols())
        throw Error(ErrorCode::DimensionMismatch, "schur complement of an empty or non-square matrix");
    const T& a = m(0, 0);
    if (!(a > T(0)))
        throw Error(ErrorCode::SingularBlock, "leading entry must be positive");
    const std::size_t n = m.rows();
    Matrix<T> s(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j)
            s(i - 1, j - 1) = m(i, j) - m(i, 0) * m(0, j) / a;
    return s;
}

/// True iff M = D N D for D = diag(d); exact equality in exact mode.
template <RealScalar T>
bool congruence_check(const Matrix<T>& m, const std::vector<T>& d, const Matrix<T>& n,
                      const ToleranceProfile& tol = {})
{
    if (m.rows() != d.size() || n.rows() != d.size() || m.cols() != d.size() || n.cols() != d.size())
        throw Error(ErrorCode::DimensionMismatch, "congruence_check dimensions");
    Matrix<T> dnd(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = 0; j < d.size(); ++j)
            dnd(i, j) = d[i] * n(i, j) * d[j];
    if constexpr (is_exact_v<T>)
        return m == dnd;
    else
        return (m - dnd).norm_inf() <= tol.cong * (1.0 + m.norm_inf());
}

}  // namespace bpick

#endif  // BPICK_PICK_MATRIX_HPP
