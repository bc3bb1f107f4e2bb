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
/// \file solver.hpp
///
/// Boundary Nevanlinna-Pick solvers.
///
/// For a positive definite Pick matrix every solution is reached by
/// augmenting a free Pick function h at x_n, ..., x_1 in turn. The data used
/// at each level are the tables s_k, t_k; the values h must avoid at the
/// nodes are y_k. Writing the augmentations as 2x2 polynomial matrices,
///
///     A_k(z) = [ t_k(z-x_k)   -1         ]                    s_k = inf
///              [ 0            t_k(z-x_k) ]
///
///     A_k(z) = [ s_k t_k(z-x_k)   -t_k(z-x_k) - s_k ]         s_k finite
///              [ t_k(z-x_k)       -1                ]
///
/// the general solution is f = (a h + b)/(c h + d) with [a b; c d] the
/// product A_1 ... A_n, and ad - bc = prod t_k^2 (z - x_k)^2.
///
/// The relaxed problem (f'(x_j) <= v_j, or residue <= -1/v_j at a pole) is
/// solved by reducing the data one node at a time and augmenting back.
///

#ifndef BPICK_SOLVER_HPP
#define BPICK_SOLVER_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "pick_matrix.hpp"
#include "poly_matrix.hpp"
#include "reduction.hpp"

namespace bpick {

// ---------------------------------------------------------------------------
// recursion tables

template <RealScalar T>
struct RecursionTables {
    std::vector<T> nodes;
    /// w_table[k][j], v_table[k][j] for k <= j: data of the k-th reduced problem.
    std::vector<std::vector<ExtReal<T>>> w_table;
    std::vector<std::vector<T>> v_table;
    /// y_table[k][j] for j < k, k = 0..n: values the k-th reduced function must avoid.
    std::vector<std::vector<ExtReal<T>>> y_table;
    std::vector<ExtReal<T>> s;
    std::vector<T> t;
    std::vector<ExtReal<T>> y;

    std::size_t size() const noexcept { return nodes.size(); }

    /// Conditioning diagnostics: smallest node gap and smallest t_k.
    double min_node_gap() const
    {
        double g = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < nodes.size(); ++i)
            for (std::size_t j = i + 1; j < nodes.size(); ++j)
                g = std::min(g, magnitude(T(nodes[i] - nodes[j])));
        return g;
    }

    double min_t() const
    {
        double m = std::numeric_limits<double>::infinity();
        for (const auto& tk : t)
            m = std::min(m, to_double(tk));
        return m;
    }
};

template <RealScalar T>
RecursionTables<T> compute_tables(const BoundaryProblem<T>& p, const ToleranceProfile& tol = {})
{
    p.validate(tol);
    const auto pm = build_pick_matrix(p, tol);
    if (pm.classification != Classification::PositiveDefinite)
        throw Error(ErrorCode::NotPositiveDefinite,
                    std::string("Pick matrix is ") + to_string(pm.classification) + ", tables need positive definite");
    const std::size_t n = p.size();
    RecursionTables<T> tb;
    tb.nodes = p.nodes;
    tb.w_table.assign(n, std::vector<ExtReal<T>>(n));
    tb.v_table.assign(n, std::vector<T>(n, T(0)));
    tb.y_table.assign(n + 1, {});
    for (std::size_t j = 0; j < n; ++j) {
        tb.w_table[0][j] = p.targets[j];
        tb.v_table[0][j] = p.derivs[j];
    }
    for (std::size_t k = 0; k < n; ++k) {
        const auto sk = tb.w_table[k][k];
        const T tk = tb.v_table[k][k];
        if (!is_positive(tk, 0.0, tol.psd))
            throw Error(ErrorCode::NotPositiveDefinite, "non-positive table entry v at level " + std::to_string(k));
        tb.s.push_back(sk);
        tb.t.push_back(tk);
        const T& xk = p.nodes[k];
        for (std::size_t j = k + 1; j < n; ++j) {
            const T dx = p.nodes[j] - xk;
            if (k + 1 < n) {
                tb.w_table[k + 1][j] = detail::step_value(tb.w_table[k][j], sk, tk, dx, tol);
                tb.v_table[k + 1][j] = detail::step_deriv(tb.w_table[k][j], tb.v_table[k][j], sk, tk, dx, tol);
            }
        }
        auto& next = tb.y_table[k + 1];
        for (std::size_t j = 0; j < k; ++j)
            next.push_back(detail::step_value(tb.y_table[k][j], sk, tk, T(p.nodes[j] - xk), tol));
        next.push_back(ExtReal<T>::infinity());
    }
    tb.y = tb.y_table[n];
    return tb;
}

/// prod t_k * prod' (w^k_j - s_k)^2 over k < j, omitting factors that are
/// zero or infinite. Equals det M for positive definite data.
template <RealScalar T>
T table_determinant(const RecursionTables<T>& tb, const ToleranceProfile& tol = {})
{
    T out = T(1);
    const std::size_t n = tb.size();
    for (std::size_t k = 0; k < n; ++k) {
        out *= tb.t[k];
        if (tb.s[k].is_infinite())
            continue;
        for (std::size_t j = k + 1; j < n; ++j) {
            const auto& w = tb.w_table[k][j];
            if (w.is_infinite())
                continue;
            const T d = w.value() - tb.s[k].value();
            if (is_zero(d, magnitude(w.value()), tol.eq))
                continue;
            out *= d * d;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// parametrization

template <RealScalar T>
struct ForbiddenValue {
    T node;
    ExtReal<T> y;
};

template <RealScalar T>
struct Parametrization {
    PolyMatrix2<T> coeff_matrix;
    std::vector<ForbiddenValue<T>> forbidden;
    std::vector<T> nodes;
    T det_scale = T(1);  ///< ad - bc = det_scale * prod (z - x_k)^2
    std::vector<ExtReal<T>> s;
    std::vector<T> t;
};

template <RealScalar T>
PolyMatrix2<T> augmentation_matrix(const ExtReal<T>& s, const T& t, const T& x)
{
    const auto lin = t * Polynomial<T>::linear_root(x);
    const auto one = Polynomial<T>::constant(T(1));
    if (s.is_infinite())
        return {lin, -one, Polynomial<T>{}, lin};
    const T& sv = s.value();
    return {sv * lin, -lin - Polynomial<T>::constant(sv), lin, -one};
}

template <RealScalar T>
Parametrization<T> build_parametrization(const RecursionTables<T>& tb)
{
    Parametrization<T> out;
    out.coeff_matrix = PolyMatrix2<T>::identity();
    out.nodes = tb.nodes;
    out.s = tb.s;
    out.t = tb.t;
    for (std::size_t k = 0; k < tb.size(); ++k) {
        out.coeff_matrix = out.coeff_matrix * augmentation_matrix(tb.s[k], tb.t[k], tb.nodes[k]);
        out.det_scale *= tb.t[k] * tb.t[k];
        out.forbidden.push_back({tb.nodes[k], tb.y[k]});
    }
    return out;
}

/// det_scale * prod (z - x_k)^2.
template <RealScalar T>
Polynomial<T> expected_determinant(const Parametrization<T>& pr)
{
    auto out = Polynomial<T>::constant(pr.det_scale);
    for (const auto& x : pr.nodes) {
        const auto l = Polynomial<T>::linear_root(x);
        out = out * l * l;
    }
    return out;
}

/// True if ad - bc matches det_scale * prod (z - x_k)^2 (exactly in exact mode).
template <RealScalar T>
bool determinant_invariant_holds(const Parametrization<T>& pr, const ToleranceProfile& tol = {})
{
    const auto got = pr.coeff_matrix.det();
    const auto want = expected_determinant(pr);
    if constexpr (is_exact_v<T>) {
        return got == want;
    } else {
        const double scale = std::max(1.0, want.max_abs_coeff());
        const std::size_t len = std::max(got.coeffs().size(), want.coeffs().size());
        for (std::size_t k = 0; k < len; ++k)
            if (std::abs(got[k] - want[k]) > tol.cong * scale)
                return false;
        return true;
    }
}

template <RealScalar T>
struct Instantiation {
    RationalFunction<T> f;
    /// Indices j with h(x_j) = y_j; there f solves only the relaxed problem.
    std::vector<std::size_t> violated;
};

template <RealScalar T>
Instantiation<T> instantiate_solution(const Parametrization<T>& pr, const RationalFunction<T>& h,
                                      const ToleranceProfile& tol = {})
{
    Instantiation<T> out;
    for (std::size_t j = 0; j < pr.forbidden.size(); ++j) {
        const auto hv = h.at(pr.forbidden[j].node);
        if (hv.same_as(pr.forbidden[j].y, tol.eq))
            out.violated.push_back(j);
    }
    // Away from the nodes only numerically coincident roots are cancelled: in
    // float mode a genuine pole with a tiny residue can sit within tol.root of
    // a zero and still fix the derivative at a nearby node.
    auto f = pr.coeff_matrix.apply(h, std::min(tol.root, 1e-12)).with_root_eps(tol.root);
    for (const auto& x : pr.nodes)
        f = f.cancel_at(x);
    out.f = std::move(f);
    return out;
}

/// s_n + ... evaluated from the inside out:
/// F = h(z); F = s_k + 1/(1/(t_k(z - x_k)) - F) (s_k finite) or
/// F = F - 1/(t_k(z - x_k)) (s_k = inf), for k = n..1.
template <RealScalar T>
Complex eval_continued_fraction(const RecursionTables<T>& tb, const RationalFunction<T>& h, const Complex& z)
{
    Complex F = h(z);
    for (std::size_t k = tb.size(); k-- > 0;) {
        const Complex lin = to_complex(tb.t[k]) * (z - to_complex(tb.nodes[k]));
        if (tb.s[k].is_infinite())
            F = F - 1.0 / lin;
        else
            F = to_complex(tb.s[k].value()) + 1.0 / (1.0 / lin - F);
    }
    return F;
}

/// The continued fraction as text, e.g.
/// "0 + 1/(1/(2(z)) - (-1/2 + 1/(1/(3/2(z - 1)) - h)))".
template <RealScalar T>
std::string continued_fraction_string(const RecursionTables<T>& tb, const std::string& inner = "h")
{
    std::string out = inner;
    for (std::size_t k = tb.size(); k-- > 0;) {
        const std::string lin = to_string(tb.t[k]) + "(" + Polynomial<T>::linear_root(tb.nodes[k]).str() + ")";
        if (tb.s[k].is_infinite())
            out = out + " - 1/(" + lin + ")";
        else
            out = to_string(tb.s[k].value()) + " + 1/(1/(" + lin + ") - (" + out + "))";
    }
    return out;
}

// ---------------------------------------------------------------------------
// verification

struct MembershipViolation {
    std::string kind;  ///< "imaginary-part", "residue", "multiple-pole", "nonreal-pole"
    Complex witness;
    double value = 0;
};

struct MembershipReport {
    bool pass = true;
    std::size_t samples = 0;
    std::vector<MembershipViolation> violations;
};

/// Necessary conditions for membership in the Pick class: Im f >= 0 on a
/// grid in the upper half-plane over [lo, hi] at heights 1 .. 1e-4 plus 8
/// far samples, and every real pole simple with negative residue, no
/// non-real poles.
template <RealScalar T>
MembershipReport sample_pick_membership(const RationalFunction<T>& f, const ToleranceProfile& tol = {},
                                        double lo = -2.0, double hi = 2.0)
{
    MembershipReport rep;
    const auto fd = f.template cast<double>();
    auto check = [&](const Complex& z) {
        const Complex v = fd(z);
        ++rep.samples;
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            return;
        if (v.imag() < -tol.pick * std::max(1.0, std::abs(v))) {
            rep.pass = false;
            rep.violations.push_back({"imaginary-part", z, v.imag()});
        }
    };
    const int steps = 40;
    for (int e = 0; e <= 4; ++e) {
        const double height = std::pow(10.0, -e);
        for (int k = 0; k <= steps; ++k)
            check({lo + (hi - lo) * k / steps, height});
    }
    const double far = 1e3 * (1.0 + std::max(std::abs(lo), std::abs(hi)));
    for (int k = 0; k < 8; ++k) {
        const double th = std::numbers::pi * (k + 0.5) / 8.0;
        check(far * Complex(std::cos(th), std::sin(th)));
    }

    const auto& den = fd.den();
    if (den.degree().value_or(0) > 0) {
        const auto dd = den.derivative();
        for (const Complex& r : roots(den)) {
            if (std::abs(r.imag()) > tol.root * (1.0 + std::abs(r))) {
                rep.pass = false;
                rep.violations.push_back({"nonreal-pole", r, r.imag()});
                continue;
            }
            const double x = r.real();
            const double dv = dd.eval(x);
            if (std::abs(dv) <= tol.root * (1.0 + dd.eval_scale(std::abs(x)))) {
                rep.pass = false;
                rep.violations.push_back({"multiple-pole", r, dv});
                continue;
            }
            const double res = fd.num().eval(x) / dv;
            if (!(res < 0)) {
                rep.pass = false;
                rep.violations.push_back({"residue", r, res});
            }
        }
    }
    return rep;
}

template <RealScalar T>
MembershipReport sample_pick_membership(const RationalFunction<T>& f, const std::vector<T>& nodes,
                                        const ToleranceProfile& tol = {})
{
    double lo = 0, hi = 0;
    if (!nodes.empty()) {
        lo = hi = to_double(nodes.front());
        for (const auto& x : nodes) {
            lo = std::min(lo, to_double(x));
            hi = std::max(hi, to_double(x));
        }
    }
    return sample_pick_membership(f, tol, lo - 2.0, hi + 2.0);
}

enum class VerifyMode { Strict, Relaxed };

inline const char* to_string(VerifyMode m) { return m == VerifyMode::Strict ? "strict" : "relaxed"; }

struct NodeCheck {
    std::size_t index = 0;
    double x = 0;
    bool pole_expected = false;
    bool value_ok = false;
    bool deriv_ok = false;
    double value = 0;     ///< f(x_j), or nan at a pole
    double measured = 0;  ///< f'(x_j), or the residue at a pole
    double expected = 0;  ///< v_j, or -1/v_j at a pole
    double slack = 0;     ///< expected - measured (relaxed bound slack)

    bool ok() const { return value_ok && deriv_ok; }
};

struct VerificationReport {
    VerifyMode mode = VerifyMode::Strict;
    bool pass = false;
    std::vector<NodeCheck> nodes;
    MembershipReport membership;

    std::vector<std::size_t> failed_nodes() const
    {
        std::vector<std::size_t> out;
        for (const auto& c : nodes)
            if (!c.ok())
                out.push_back(c.index);
        return out;
    }
};

namespace detail {

template <RealScalar T>
bool tol_eq(const T& a, const T& b, double eps)
{
    return near_equal(a, b, eps);
}

template <RealScalar T>
bool tol_le(const T& a, const T& b, double eps)
{
    if constexpr (is_exact_v<T>)
        return a <= b;
    else
        return a <= b + eps * (1.0 + std::abs(b));
}

}  // namespace detail

template <RealScalar T>
VerificationReport verify_solution(const BoundaryProblem<T>& p, const RationalFunction<T>& f, VerifyMode mode,
                                   const ToleranceProfile& tol = {})
{
    VerificationReport rep;
    rep.mode = mode;
    bool all = true;
    for (std::size_t j = 0; j < p.size(); ++j) {
        NodeCheck c;
        c.index = j;
        const T& x = p.nodes[j];
        const T& v = p.derivs[j];
        c.x = to_double(x);
        c.pole_expected = p.targets[j].is_infinite();
        const bool pole = f.is_pole_at(x);
        if (c.pole_expected) {
            c.value = std::numeric_limits<double>::quiet_NaN();
            c.value_ok = pole;
            c.expected = -1.0 / to_double(v);
            if (pole) {
                try {
                    const T r = f.residue_at(x);
                    const T want = T(-1) / v;
                    c.measured = to_double(r);
                    c.slack = c.expected - c.measured;
                    c.deriv_ok = mode == VerifyMode::Strict ? detail::tol_eq(r, want, tol.val)
                                                            : detail::tol_le(r, want, tol.val);
                } catch (const Error&) {
                    c.deriv_ok = false;
                }
            }
        } else if (!pole) {
            const T fx = f.value_at(x);
            const T d = f.derivative_at(x);
            c.value = to_double(fx);
            c.measured = to_double(d);
            c.expected = to_double(v);
            c.slack = c.expected - c.measured;
            c.value_ok = detail::tol_eq(fx, p.targets[j].value(), tol.val);
            c.deriv_ok = mode == VerifyMode::Strict ? detail::tol_eq(d, v, tol.val) : detail::tol_le(d, v, tol.val);
        } else {
            c.value = std::numeric_limits<double>::infinity();
            c.expected = to_double(v);
        }
        all = all && c.ok();
        rep.nodes.push_back(c);
    }
    rep.membership = sample_pick_membership(f, p.nodes, tol);
    rep.pass = all && rep.membership.pass;
    return rep;
}

// ---------------------------------------------------------------------------
// solvers

enum class SolveStatus { Solved, Unsolvable };

template <RealScalar T>
struct SolveResult {
    SolveStatus status = SolveStatus::Unsolvable;
    std::optional<RationalFunction<T>> f;
    Classification classification = Classification::Indefinite;
    bool determinate = false;
    std::string reason;

    bool solved() const noexcept { return status == SolveStatus::Solved; }
    explicit operator bool() const noexcept { return solved(); }

    static SolveResult unsolvable(Classification c, std::string why)
    {
        SolveResult r;
        r.classification = c;
        r.reason = std::move(why);
        return r;
    }
};

namespace detail {

template <RealScalar T>
bool is_zero_weight(const T& v, const ToleranceProfile& tol)
{
    return is_zero(v, 0.0, tol.psd);
}

/// Recursive construction for the relaxed problem on psd data, reducing at
/// the first node. Returns nullopt when the data admit no solution.
template <RealScalar T>
std::optional<RationalFunction<T>> relaxed_rec(const BoundaryProblem<T>& p, const ToleranceProfile& tol)
{
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!is_zero_weight(p.derivs[i], tol))
            continue;
        // f'(x_i) <= 0 forces a constant.
        if (p.targets[i].is_infinite())
            return std::nullopt;
        for (const auto& w : p.targets)
            if (!w.same_as(p.targets[i], tol.eq))
                return std::nullopt;
        return RationalFunction<T>(p.targets[i].value());
    }
    for (const auto& v : p.derivs)
        if (v < T(0))
            return std::nullopt;
    const T& x1 = p.nodes[0];
    const T& v1 = p.derivs[0];
    const auto& w1 = p.targets[0];
    if (n == 1) {
        const auto lin = Polynomial<T>::linear_root(x1);
        if (w1.is_infinite())
            return RationalFunction<T>(Polynomial<T>::constant(T(-1)), v1 * lin, tol.root);
        return RationalFunction<T>(Polynomial<T>::constant(w1.value()) + v1 * lin);
    }
    auto rd = reduce_problem_data(p, tol);
    if constexpr (!is_exact_v<T>) {
        // Snap rounding noise on singular data to exact zeros.
        for (std::size_t j = 0; j < rd.problem.size(); ++j) {
            const double scale = std::abs(p.derivs[j + 1]) + 1.0 / std::abs(v1 * std::pow(p.nodes[j + 1] - x1, 2));
            if (std::abs(rd.problem.derivs[j]) <= tol.psd * (1.0 + scale))
                rd.problem.derivs[j] = 0.0;
        }
    }
    auto g = relaxed_rec(rd.problem, tol);
    if (!g)
        return std::nullopt;
    return augment_at(*g, x1, w1, v1, tol);
}

}  // namespace detail

/// Relaxed solver: some f in the Pick class with f(x_j) = w_j and
/// f'(x_j) <= v_j (residue <= -1/v_j at infinite targets), of degree at
/// most rank M, whenever M is positive semidefinite. `order` optionally
/// gives the sequence of nodes at which the data are reduced.
template <RealScalar T>
SolveResult<T> solve_relaxed(const BoundaryProblem<T>& p, const std::vector<std::size_t>& order = {},
                             const ToleranceProfile& tol = {})
{
    p.validate(tol);
    const auto pm = build_pick_matrix(p, tol);
    if (pm.classification == Classification::Indefinite)
        return SolveResult<T>::unsolvable(pm.classification, "Pick matrix is not positive semidefinite");
    const auto q = order.empty() ? p : p.permuted(order);
    auto f = detail::relaxed_rec(q, tol);
    if (!f)
        return SolveResult<T>::unsolvable(pm.classification, "reduction reached inconsistent data");
    SolveResult<T> r;
    r.status = SolveStatus::Solved;
    r.f = std::move(f);
    r.classification = pm.classification;
    r.determinate = pm.classification == Classification::MinimallyPositive;
    return r;
}

/// The admissible constant parameter used by solve_strict: 1 + max |y_j|
/// over finite y_j, moved up by 1 until it avoids every y_j. With a seed, a
/// random offset in [0, 8) in steps of 1/8 is added first.
template <RealScalar T>
T default_parameter(const std::vector<ExtReal<T>>& y, std::optional<unsigned long long> seed = std::nullopt,
                    const ToleranceProfile& tol = {})
{
    T c = T(0);
    for (const auto& yj : y)
        if (yj.is_finite() && detail::abs_value(yj.value()) > c)
            c = detail::abs_value(yj.value());
    c += T(1);
    if (seed) {
        std::mt19937_64 rng(*seed);
        std::uniform_int_distribution<int> dist(0, 63);
        c += T(dist(rng)) / T(8);
    }
    for (;;) {
        bool hit = false;
        for (const auto& yj : y)
            hit = hit || (yj.is_finite() && near_equal(yj.value(), c, tol.eq));
        if (!hit)
            return c;
        c += T(1);
    }
}

/// Strict solver: f(x_j) = w_j and f'(x_j) = v_j (residue -1/v_j at infinite
/// targets). Solvable iff M is positive definite or minimally positive; the
/// latter gives the unique solution. The output is verified before return.
template <RealScalar T>
SolveResult<T> solve_strict(const BoundaryProblem<T>& p, const ToleranceProfile& tol = {},
                            std::optional<unsigned long long> seed = std::nullopt,
                            const std::vector<std::size_t>& order = {})
{
    p.validate(tol);
    const auto pm = build_pick_matrix(p, tol);
    SolveResult<T> r;
    r.classification = pm.classification;
    switch (pm.classification) {
    case Classification::Indefinite:
        return SolveResult<T>::unsolvable(pm.classification, "Pick matrix is not positive semidefinite");
    case Classification::PositiveSingularNotMinimal:
        return SolveResult<T>::unsolvable(pm.classification,
                                          "Pick matrix is singular but not minimally positive; only the relaxed "
                                          "problem is solvable");
    case Classification::PositiveDefinite: {
        const auto tb = compute_tables(p, tol);
        const auto pr = build_parametrization(tb);
        const T c = default_parameter(tb.y, seed, tol);
        auto inst = instantiate_solution(pr, RationalFunction<T>(c), tol);
        if (!inst.violated.empty())
            throw Error(ErrorCode::InternalVerificationFailure, "default parameter hit a forbidden value");
        r.f = std::move(inst.f);
        r.determinate = false;
        break;
    }
    case Classification::MinimallyPositive: {
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (!detail::is_zero_weight(p.derivs[i], tol))
                continue;
            for (std::size_t j = 0; j < p.size(); ++j)
                if (!p.targets[j].same_as(p.targets[i], tol.eq) || !detail::is_zero_weight(p.derivs[j], tol))
                    return SolveResult<T>::unsolvable(pm.classification,
                                                      "a zero derivative forces a constant that misses other data");
            r.status = SolveStatus::Solved;
            r.f = RationalFunction<T>(p.targets[i].value());
            r.determinate = true;
            return r;
        }
        auto rel = solve_relaxed(p, order, tol);
        if (!rel)
            throw Error(ErrorCode::InternalVerificationFailure, "relaxed construction failed on minimally positive data");
        r.f = std::move(rel.f);
        r.determinate = true;
        break;
    }
    }
    r.status = SolveStatus::Solved;
    const auto rep = verify_solution(p, *r.f, VerifyMode::Strict, tol);
    if (!rep.pass)
        throw Error(ErrorCode::InternalVerificationFailure, "constructed solution fails verification: " + r.f->str());
    return r;
}

// ---------------------------------------------------------------------------
// Pick functions by construction

template <RealScalar T>
struct PoleTerm {
    T weight;  ///< c_k > 0
    T pole;    ///< p_k
};

/// a z + b + sum c_k / (p_k - z), with a >= 0 and c_k > 0.
template <RealScalar T>
RationalFunction<T> make_pick_function(const T& a, const T& b, const std::vector<PoleTerm<T>>& terms)
{
    if (a < T(0))
        throw Error(ErrorCode::NonPositiveWeight, "linear coefficient must be non-negative");
    RationalFunction<T> f(Polynomial<T>(std::vector<T>{b, a}));
    for (const auto& term : terms) {
        if (!(term.weight > T(0)))
            throw Error(ErrorCode::NonPositiveWeight, "pole weight must be positive");
        f = f + RationalFunction<T>(Polynomial<T>::constant(term.weight),
                                    Polynomial<T>(std::vector<T>{term.pole, T(-1)}));
    }
    return f;
}

}  // namespace bpick

#endif  // BPICK_SOLVER_HPP
