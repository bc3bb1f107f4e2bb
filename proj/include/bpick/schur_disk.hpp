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
/// \file schur_disk.hpp
///
/// Boundary interpolation in the Schur class of the unit disk, solved by
/// transport to the upper half-plane with the Cayley transforms
///
///     C_tau(l) = i (tau + l) / (tau - l),    C_sigma^-1(w) = sigma (w - i) / (w + i).
///
/// A boundary point xi with tau^* xi = e^{2 i psi} and a value eta with
/// sigma^* eta = e^{2 i theta} carry the angular derivative rho to the
/// half-plane derivative v = rho sin^2(psi) / sin^2(theta).
///
/// The disk Pick matrix (1 - eta_i^* eta_j)/(1 - xi_i^* xi_j) is Hermitian,
/// not real in general; it is classified through the real symmetric
/// embedding [Re H, -Im H; Im H, Re H], whose spectrum is that of H doubled.
///

#ifndef BPICK_SCHUR_DISK_HPP
#define BPICK_SCHUR_DISK_HPP

#include <cfloat>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "solver.hpp"

namespace bpick {

struct CircleProblem {
    std::vector<Complex> xi;
    std::vector<Complex> eta;
    std::vector<double> rho;

    std::size_t size() const noexcept { return xi.size(); }

    void validate(const ToleranceProfile& tol = {}) const
    {
        if (eta.size() != xi.size() || rho.size() != xi.size())
            throw Error(ErrorCode::InvalidProblem, "xi, eta and rho differ in length");
        for (std::size_t j = 0; j < xi.size(); ++j) {
            if (std::abs(std::abs(xi[j]) - 1.0) > tol.unit)
                throw Error(ErrorCode::InvalidProblem, "xi_" + std::to_string(j) + " is not unimodular");
            if (std::abs(std::abs(eta[j]) - 1.0) > tol.unit)
                throw Error(ErrorCode::InvalidProblem, "eta_" + std::to_string(j) + " is not unimodular");
            if (!(rho[j] >= 0))
                throw Error(ErrorCode::InvalidProblem, "rho_" + std::to_string(j) + " is negative");
            for (std::size_t k = j + 1; k < xi.size(); ++k)
                if (std::abs(xi[j] - xi[k]) <= tol.node)
                    throw Error(ErrorCode::InvalidProblem, "repeated boundary point xi_" + std::to_string(k));
        }
    }
};

struct CirclePickMatrix {
    Matrix<Complex> entries;
    Classification classification = Classification::Indefinite;
    std::size_t rank = 0;
    double min_eigenvalue = 0;
    std::vector<double> slacks;
    bool marginal = false;
    bool real_symmetric = false;  ///< all imaginary parts below tol.sym
};

namespace detail {

inline Matrix<double> real_embedding(const Matrix<Complex>& h)
{
    const std::size_t n = h.rows();
    Matrix<double> e(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            e(i, j) = e(n + i, n + j) = h(i, j).real();
            e(i, n + j) = -h(i, j).imag();
            e(n + i, j) = h(i, j).imag();
        }
    return e;
}

}  // namespace detail

inline Matrix<Complex> circle_pick_entries(const CircleProblem& p)
{
    const std::size_t n = p.size();
    Matrix<Complex> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = i == j ? Complex(p.rho[j], 0.0)
                             : (1.0 - std::conj(p.eta[i]) * p.eta[j]) / (1.0 - std::conj(p.xi[i]) * p.xi[j]);
    return m;
}

/// Classifies a Hermitian matrix: psd/pd/rank from the real embedding, and
/// diagonal slacks sup { t : H - t e_i e_i^* >= 0 } by bisection.
inline CirclePickMatrix analyze_hermitian(const Matrix<Complex>& h, const ToleranceProfile& tol = {})
{
    const std::size_t n = h.rows();
    CirclePickMatrix out;
    out.entries = h;
    out.real_symmetric = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (std::abs(h(i, j) - std::conj(h(j, i))) > tol.sym * (1.0 + std::abs(h(i, j))))
                throw Error(ErrorCode::InvalidProblem, "matrix is not Hermitian");
            if (std::abs(h(i, j).imag()) > tol.sym * (1.0 + std::abs(h(i, j))))
                out.real_symmetric = false;
        }
    if (n == 0) {
        out.classification = Classification::PositiveDefinite;
        return out;
    }
    const auto e = detail::real_embedding(h);
    const auto ev = symmetric_eigenvalues(e);
    const double eps = detail::psd_threshold(e, tol);
    out.min_eigenvalue = ev.front();
    std::size_t r2 = 0;
    for (double l : ev)
        if (std::abs(l) > eps)
            ++r2;
    out.rank = r2 / 2;
    const double a = std::abs(out.min_eigenvalue);
    out.marginal = a > 0.01 * eps && a < 100.0 * eps;
    if (out.min_eigenvalue < -eps) {
        out.classification = Classification::Indefinite;
        return out;
    }
    if (out.min_eigenvalue > eps) {
        out.classification = Classification::PositiveDefinite;
        return out;
    }
    const double floor = std::max(0.0, -out.min_eigenvalue) +
                         64.0 * static_cast<double>(e.rows()) * DBL_EPSILON * (1.0 + e.norm_inf());
    auto feasible = [&](std::size_t i, double t) {
        Matrix<double> s = e;
        s(i, i) -= t;
        s(n + i, n + i) -= t;
        return symmetric_eigenvalues(s).front() >= -floor;
    };
    bool minimal = true;
    for (std::size_t i = 0; i < n; ++i) {
        const double hii = h(i, i).real();
        double lo = 0;
        if (hii > 0) {
            if (feasible(i, hii)) {
                lo = hii;
            } else {
                double hi = hii;
                const double width = tol.slack * (1.0 + hii);
                while (hi - lo > width) {
                    const double mid = 0.5 * (lo + hi);
                    (feasible(i, mid) ? lo : hi) = mid;
                }
            }
        }
        const double width = tol.slack * (1.0 + std::abs(hii));
        if (lo > width)
            minimal = false;
        if (lo > 0.01 * width && lo < 100.0 * width)
            out.marginal = true;
        out.slacks.push_back(lo);
    }
    out.classification = minimal ? Classification::MinimallyPositive : Classification::PositiveSingularNotMinimal;
    return out;
}

inline CirclePickMatrix circle_pick_matrix(const CircleProblem& p, const ToleranceProfile& tol = {})
{
    p.validate(tol);
    return analyze_hermitian(circle_pick_entries(p), tol);
}

// ---------------------------------------------------------------------------
// Cayley transforms

inline Moebius<Complex> cayley_map(const Complex& tau)
{
    const Complex i(0.0, 1.0);
    return Moebius<Complex>(i, i * tau, Complex(-1.0), tau);
}

inline Moebius<Complex> inverse_cayley_map(const Complex& sigma)
{
    const Complex i(0.0, 1.0);
    return Moebius<Complex>(sigma, -i * sigma, Complex(1.0), i);
}

inline Extended<Complex> cayley(const Complex& tau, const Extended<Complex>& lambda, const ToleranceProfile& tol = {})
{
    return cayley_map(tau).apply(lambda, tol);
}

inline Extended<Complex> inverse_cayley(const Complex& sigma, const Extended<Complex>& w,
                                        const ToleranceProfile& tol = {})
{
    return inverse_cayley_map(sigma).apply(w, tol);
}

/// Re(xi phi'(xi) / phi(xi)). Where |phi(xi)| = 1 the quotient is real and
/// this is checked.
inline double angular_derivative(const RationalFunction<Complex>& phi, const Complex& xi,
                                 const ToleranceProfile& tol = {})
{
    const Complex v = phi.value_at(xi);
    if (std::abs(v) <= tol.val)
        throw Error(ErrorCode::ZeroValue, "angular derivative at a zero of phi");
    const Complex q = xi * phi.derivative_at(xi) / v;
    if (std::abs(std::abs(v) - 1.0) <= tol.unit && std::abs(q.imag()) > 1e3 * tol.val * (1.0 + std::abs(q)))
        throw Error(ErrorCode::NonRealValue, "xi phi'/phi is not real at a unimodular value: " + to_string(q));
    return q.real();
}

/// e^{2 pi i k / m}, m = 2n + 3, taking the k that stays farthest from all
/// of `avoid` (at least one point avoids them by counting).
inline Complex default_unimodular(const std::vector<Complex>& avoid)
{
    const std::size_t m = 2 * avoid.size() + 3;
    Complex best = 1.0;
    double best_gap = -1;
    for (std::size_t k = 0; k < m; ++k) {
        const double th = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m);
        const Complex z = std::polar(1.0, th);
        double gap = std::numeric_limits<double>::infinity();
        for (const auto& a : avoid)
            gap = std::min(gap, std::abs(z - a));
        if (gap > best_gap + 1e-12) {
            best_gap = gap;
            best = z;
        }
    }
    return best;
}

/// Half-plane data: nodes C_tau(xi_j), targets C_sigma(eta_j), and
/// v_j = rho_j sin^2(psi_j) / sin^2(theta_j), where
/// sin^2(psi) = (1 - Re(tau^* xi))/2 and sin^2(theta) = (1 - Re(sigma^* eta))/2.
inline BoundaryProblem<double> circle_to_halfplane(const CircleProblem& p, const Complex& tau, const Complex& sigma,
                                                   const ToleranceProfile& tol = {})
{
    p.validate(tol);
    BoundaryProblem<double> out;
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (std::abs(p.xi[j] - tau) <= tol.node)
            throw Error(ErrorCode::TauCollision, "tau coincides with xi_" + std::to_string(j));
        if (std::abs(p.eta[j] - sigma) <= tol.node)
            throw Error(ErrorCode::SigmaCollision, "sigma coincides with eta_" + std::to_string(j));
        const Complex x = cayley(tau, p.xi[j], tol).value();
        const Complex w = cayley(sigma, p.eta[j], tol).value();
        const double sin2psi = 0.5 * (1.0 - (std::conj(tau) * p.xi[j]).real());
        const double sin2theta = 0.5 * (1.0 - (std::conj(sigma) * p.eta[j]).real());
        out.nodes.push_back(x.real());
        out.targets.push_back(ExtReal<double>(w.real()));
        out.derivs.push_back(p.rho[j] * sin2psi / sin2theta);
    }
    return out;
}

/// phi = C_sigma^-1 o f o C_tau. With f = p/q of degree N,
/// f(C_tau(l)) = P(l)/Q(l) where P(l) = sum p_k (i(tau + l))^k (tau - l)^(N - k),
/// and phi = sigma (P - i Q)/(P + i Q).
inline RationalFunction<Complex> halfplane_to_circle_solution(const RationalFunction<double>& f, const Complex& tau,
                                                              const Complex& sigma, const ToleranceProfile& tol = {})
{
    const Complex i(0.0, 1.0);
    const std::size_t N = f.degree();
    const Polynomial<Complex> up(std::vector<Complex>{i * tau, i});   // i (tau + l)
    const Polynomial<Complex> dn(std::vector<Complex>{tau, -1.0});    // tau - l
    auto homog = [&](const Polynomial<double>& poly) {
        Polynomial<Complex> out;
        for (std::size_t k = 0; k <= N; ++k) {
            const double c = poly[k];
            if (c == 0.0)
                continue;
            auto term = Polynomial<Complex>::constant(Complex(c));
            for (std::size_t a = 0; a < k; ++a)
                term = term * up;
            for (std::size_t b = k; b < N; ++b)
                term = term * dn;
            out = out + term;
        }
        return out;
    };
    const auto P = homog(f.num());
    const auto Q = homog(f.den());
    return RationalFunction<Complex>(sigma * (P - i * Q), P + i * Q, tol.root);
}

struct DiskReport {
    bool pass = true;
    std::size_t samples = 0;
    std::vector<std::pair<Complex, double>> violations;  ///< (point, |phi|)
};

/// |phi| <= 1 on polar grid points of the open disk.
inline DiskReport sample_schur_membership(const RationalFunction<Complex>& phi, const ToleranceProfile& tol = {})
{
    DiskReport rep;
    for (double r : {0.0, 0.25, 0.5, 0.75, 0.9, 0.99, 0.999}) {
        for (int k = 0; k < 32; ++k) {
            const Complex z = std::polar(r, 2.0 * std::numbers::pi * k / 32.0);
            const double a = std::abs(phi(z));
            ++rep.samples;
            if (std::isfinite(a) && a > 1.0 + tol.pick * 1e3) {
                rep.pass = false;
                rep.violations.push_back({z, a});
            }
            if (r == 0.0)
                break;
        }
    }
    return rep;
}

struct CircleNodeCheck {
    std::size_t index = 0;
    Complex value;
    double angular = 0;
    bool ok = false;
};

struct SchurSolveResult {
    SolveStatus status = SolveStatus::Unsolvable;
    std::optional<RationalFunction<Complex>> phi;
    Classification classification = Classification::Indefinite;
    bool determinate = false;
    Complex tau = 1.0, sigma = 1.0;
    std::string reason;
    std::vector<CircleNodeCheck> checks;
    DiskReport disk;

    bool solved() const noexcept { return status == SolveStatus::Solved; }
    explicit operator bool() const noexcept { return solved(); }
};

/// Checks phi(xi_j) = eta_j and A phi(xi_j) = rho_j.
inline std::vector<CircleNodeCheck> verify_circle_solution(const CircleProblem& p, const RationalFunction<Complex>& phi,
                                                           const ToleranceProfile& tol = {})
{
    std::vector<CircleNodeCheck> out;
    for (std::size_t j = 0; j < p.size(); ++j) {
        CircleNodeCheck c;
        c.index = j;
        if (phi.is_pole_at(p.xi[j])) {
            out.push_back(c);
            continue;
        }
        c.value = phi.value_at(p.xi[j]);
        try {
            c.angular = angular_derivative(phi, p.xi[j], tol);
        } catch (const Error&) {
            out.push_back(c);
            continue;
        }
        c.ok = std::abs(c.value - p.eta[j]) <= tol.val * 1e1 &&
               std::abs(c.angular - p.rho[j]) <= tol.val * 1e1 * (1.0 + p.rho[j]);
        out.push_back(c);
    }
    return out;
}

inline SchurSolveResult solve_schur(const CircleProblem& p, std::optional<Complex> tau = std::nullopt,
                                    std::optional<Complex> sigma = std::nullopt, const ToleranceProfile& tol = {})
{
    SchurSolveResult r;
    const auto cm = circle_pick_matrix(p, tol);
    r.classification = cm.classification;
    if (cm.classification == Classification::Indefinite || cm.classification == Classification::PositiveSingularNotMinimal) {
        r.reason = std::string("circle Pick matrix is ") + to_string(cm.classification);
        return r;
    }
    r.tau = tau ? *tau : default_unimodular(p.xi);
    r.sigma = sigma ? *sigma : default_unimodular(p.eta);
    const auto hp = circle_to_halfplane(p, r.tau, r.sigma, tol);
    const auto sol = solve_strict(hp, tol);
    if (!sol) {
        r.reason = "half-plane problem is " + std::string(to_string(sol.classification));
        return r;
    }
    r.phi = halfplane_to_circle_solution(*sol.f, r.tau, r.sigma, tol);
    r.status = SolveStatus::Solved;
    r.determinate = cm.classification == Classification::MinimallyPositive;
    r.checks = verify_circle_solution(p, *r.phi, tol);
    r.disk = sample_schur_membership(*r.phi, tol);
    for (const auto& c : r.checks)
        if (!c.ok)
            throw Error(ErrorCode::InternalVerificationFailure,
                        "pulled-back solution misses the data at xi_" + std::to_string(c.index));
    return r;
}

}  // namespace bpick

#endif  // BPICK_SCHUR_DISK_HPP
