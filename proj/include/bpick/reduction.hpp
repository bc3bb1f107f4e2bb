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
/// \file reduction.hpp
///
/// Reduction and augmentation of rational Pick functions at a real point,
/// the matching transformation of interpolation data, and the change of
/// variable h = -1/(f - alpha) that removes infinite targets.
///
/// Reduction of f at x:
///
///     g(z) = -1/(f(z) - f(x)) + 1/(f'(x)(z - x))   if f is analytic at x,
///     g(z) = f(z) - R/(z - x)                     if f has a pole of residue R.
///
/// Augmentation of g at x by (a0, a1), a1 > 0:
///
///     f(z) = a0 + 1/(1/(a1(z - x)) - g(z))        if a0 is finite,
///     f(z) = g(z) - 1/(a1(z - x))                 if a0 = inf.
///
/// Both operations are exact on the rational representation; the removable
/// singularity at x is cancelled by synthetic division.
///

#ifndef BPICK_REDUCTION_HPP
#define BPICK_REDUCTION_HPP

#include <optional>
#include <vector>

#include "pick_matrix.hpp"
#include "rational_function.hpp"

namespace bpick {

namespace detail {

template <RealScalar T>
T abs_value(const T& x)
{
    return x < T(0) ? T(-x) : x;
}

/// Classifies x as a pole of f, rejecting float inputs that sit too close
/// to the pole threshold to decide.
template <RealScalar T>
bool pole_case(const RationalFunction<T>& f, const T& x, const ToleranceProfile& tol)
{
    if constexpr (is_exact_v<T>) {
        return f.den().eval(x) == 0;
    } else {
        const double d = std::abs(f.den().eval(x));
        const double scale = 1.0 + f.den().eval_scale(std::abs(x));
        if (d <= tol.root * scale)
            return true;
        if (d <= 1e3 * tol.root * scale)
            throw Error(ErrorCode::AmbiguousPole, "denominator nearly vanishes at " + to_string(x));
        return false;
    }
}

}  // namespace detail

template <RealScalar T>
RationalFunction<T> reduce_at(const RationalFunction<T>& f, const T& x, const ToleranceProfile& tol = {})
{
    if (f.is_constant())
        throw Error(ErrorCode::ConstantInput, "reduction of a constant function");
    const auto& num = f.num();
    const auto& den = f.den();

    if (detail::pole_case(f, x, tol)) {
        // den = (z - x) q,  R = num(x) / q(x),  g = ((num - R q) / (z - x)) / q
        auto q = den.deflate(x).first;
        T qx = q.eval(x);
        if (is_zero(qx, q.eval_scale(magnitude(x)), tol.root))
            throw Error(ErrorCode::NotASimplePole, "pole of order >= 2 at " + to_string(x));
        T r = num.eval(x) / qx;
        auto top = (num - r * q).deflate(x).first;
        return RationalFunction<T>(top, q, tol.root);
    }

    const T w = num.eval(x) / den.eval(x);
    const T d = f.derivative_at(x);
    if (!is_positive(d, 0.0, tol.eq))
        throw Error(ErrorCode::DerivativeZero, "f'(x) <= 0 at " + to_string(x) + "; not a non-constant Pick function");
    // num - w den = (z - x) p1, and p1(x) = d den(x), so p1 - d den = (z - x) n1.
    auto p1 = (num - w * den).deflate(x).first;
    auto n1 = (p1 - d * den).deflate(x).first;
    return RationalFunction<T>(n1, d * p1, tol.root);
}

template <RealScalar T>
RationalFunction<T> augment_at(const RationalFunction<T>& g, const T& x, const ExtReal<T>& a0, const T& a1,
                               const ToleranceProfile& tol = {})
{
    if (!(a1 > T(0)))
        throw Error(ErrorCode::NonPositiveWeight, "augmentation weight must be positive");
    const auto& p = g.num();
    const auto& q = g.den();
    const auto lin = a1 * Polynomial<T>::linear_root(x);  // a1 (z - x)
    if (a0.is_infinite())
        return RationalFunction<T>(lin * p - q, lin * q, tol.root).cancel_at(x);
    // f = a0 + a1 (z - x) q / (q - a1 (z - x) p)
    auto den = q - lin * p;
    auto num = lin * q + a0.value() * den;
    return RationalFunction<T>(num, den, tol.root).cancel_at(x);
}

/// Checks that augmenting the reduction at x by (f(x), f'(x)) gives f back.
template <RealScalar T>
bool roundtrip_check(const RationalFunction<T>& f, const T& x, const ToleranceProfile& tol = {})
{
    if (f.is_pole_at(x))
        throw Error(ErrorCode::PoleAtPoint, "roundtrip_check needs f analytic at x");
    auto g = reduce_at(f, x, tol);
    auto back = augment_at(g, x, ExtReal<T>(f.value_at(x)), f.derivative_at(x), tol);
    return back.same_as(f, tol.eq);
}

// ---------------------------------------------------------------------------
// infinite targets

template <RealScalar T>
struct NormalizedProblem {
    BoundaryProblem<T> problem;  ///< all-finite data w_j(alpha), v_j(alpha)
    std::vector<T> d;            ///< M = D M(alpha) D with D = diag(d)
    T alpha;
};

/// Default shift: 1 + max |w_j| over finite targets.
template <RealScalar T>
T default_alpha(const BoundaryProblem<T>& p)
{
    T best = T(0);
    for (const auto& w : p.targets)
        if (w.is_finite() && detail::abs_value(w.value()) > best)
            best = detail::abs_value(w.value());
    return T(1) + best;
}

/// Maps the data of f to the data of h = -1/(f - alpha):
/// w_j(alpha) = -1/(w_j - alpha) (0 for w_j = inf),
/// v_j(alpha) = v_j/(w_j - alpha)^2 (v_j for w_j = inf),
/// d_j = w_j - alpha (1 for w_j = inf).
template <RealScalar T>
NormalizedProblem<T> normalize_infinities(const BoundaryProblem<T>& p, std::optional<T> alpha = std::nullopt,
                                          const ToleranceProfile& tol = {})
{
    const T a = alpha ? *alpha : default_alpha(p);
    NormalizedProblem<T> out;
    out.alpha = a;
    out.problem.nodes = p.nodes;
    for (std::size_t j = 0; j < p.size(); ++j) {
        const auto& w = p.targets[j];
        if (w.is_infinite()) {
            out.problem.targets.push_back(ExtReal<T>(T(0)));
            out.problem.derivs.push_back(p.derivs[j]);
            out.d.push_back(T(1));
            continue;
        }
        const T dw = w.value() - a;
        if (is_zero(dw, magnitude(a), tol.eq))
            throw Error(ErrorCode::AlphaCollision, "alpha coincides with target " + w.str());
        out.problem.targets.push_back(ExtReal<T>(T(-1) / dw));
        out.problem.derivs.push_back(p.derivs[j] / (dw * dw));
        out.d.push_back(dw);
    }
    return out;
}

/// f = alpha - 1/h.
template <RealScalar T>
RationalFunction<T> denormalize_solution(const RationalFunction<T>& h, const T& alpha)
{
    if (h.is_zero())
        throw Error(ErrorCode::ZeroFunction, "denormalize_solution of the zero function");
    return RationalFunction<T>(alpha) - h.reciprocal();
}

// ---------------------------------------------------------------------------
// one reduction step on data

template <RealScalar T>
struct ReducedData {
    BoundaryProblem<T> problem;  ///< data at nodes x_2..x_n
    std::vector<T> lambda;       ///< Lambda M~ Lambda = schur complement of M
};

/// Data of the reduction at x_1 of any solution:
///
///     w_j' = -1/(w_j - w_1) + 1/(v_1(x_j - x_1))   w_j != w_1, both finite
///            1/(v_1(x_j - x_1))                   w_1 finite, w_j = inf
///            w_j + 1/(v_1(x_j - x_1))             w_1 = inf, w_j finite
///            inf                                  w_j = w_1
///
///     v_j' = v_j/(w_j - w_1)^2 - 1/(v_1(x_j - x_1)^2)   w_j != w_1, both finite
///            v_j - 1/(v_1(x_j - x_1)^2)                exactly one of w_1, w_j infinite
///            v_j                                       w_j = w_1
///
///     lambda_j = w_1 - w_j   both finite and distinct
///                -1          w_1 finite, w_j = inf
///                1           otherwise
namespace detail {

/// Image of a value w (target or forbidden value) under the reduction at a
/// node with data (s, t), where dx = x_j - x_k.
template <RealScalar T>
ExtReal<T> step_value(const ExtReal<T>& w, const ExtReal<T>& s, const T& t, const T& dx, const ToleranceProfile& tol)
{
    const T inv = T(1) / (t * dx);
    if (w.same_as(s, tol.eq))
        return ExtReal<T>::infinity();
    if (s.is_infinite())
        return ExtReal<T>(w.value() + inv);
    if (w.is_infinite())
        return ExtReal<T>(inv);
    return ExtReal<T>(T(-1) / (w.value() - s.value()) + inv);
}

/// Matching update of the derivative datum v at the same node.
template <RealScalar T>
T step_deriv(const ExtReal<T>& w, const T& v, const ExtReal<T>& s, const T& t, const T& dx, const ToleranceProfile& tol)
{
    if (w.same_as(s, tol.eq))
        return v;
    const T corr = T(1) / (t * dx * dx);
    if (w.is_infinite() || s.is_infinite())
        return v - corr;
    const T dw = w.value() - s.value();
    return v / (dw * dw) - corr;
}

}  // namespace detail

template <RealScalar T>
ReducedData<T> reduce_problem_data(const BoundaryProblem<T>& p, const ToleranceProfile& tol = {})
{
    if (p.size() < 2)
        throw Error(ErrorCode::InvalidProblem, "reduction needs at least two nodes");
    const T& v1 = p.derivs[0];
    if (!(v1 > T(0)))
        throw Error(ErrorCode::BadFirstWeight, "v_1 must be positive");
    const T& x1 = p.nodes[0];
    const auto& w1 = p.targets[0];
    ReducedData<T> out;
    for (std::size_t j = 1; j < p.size(); ++j) {
        const T dx = p.nodes[j] - x1;
        const auto& wj = p.targets[j];
        out.problem.nodes.push_back(p.nodes[j]);
        out.problem.targets.push_back(detail::step_value(wj, w1, v1, dx, tol));
        out.problem.derivs.push_back(detail::step_deriv(wj, p.derivs[j], w1, v1, dx, tol));
        const bool both = w1.is_finite() && wj.is_finite() && !wj.same_as(w1, tol.eq);
        if (both)
            out.lambda.push_back(w1.value() - wj.value());
        else
            out.lambda.push_back(w1.is_finite() && wj.is_infinite() ? T(-1) : T(1));
    }
    return out;
}

/// det M~ predicted from det M: v_1^-1 det M prod (w_1 - w_j)^-2 over finite
/// w_j != w_1 when w_1 is finite, v_1^-1 det M when w_1 = inf.
template <RealScalar T>
T reduced_det_prediction(const BoundaryProblem<T>& p, const T& det_m, const ToleranceProfile& tol = {})
{
    T out = det_m / p.derivs[0];
    const auto& w1 = p.targets[0];
    if (w1.is_infinite())
        return out;
    for (std::size_t j = 1; j < p.size(); ++j) {
        const auto& wj = p.targets[j];
        if (wj.is_finite() && !wj.same_as(w1, tol.eq)) {
            const T d = w1.value() - wj.value();
            out /= d * d;
        }
    }
    return out;
}

}  // namespace bpick

#endif  // BPICK_REDUCTION_HPP
