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
/// \file polynomial.hpp
///
/// Dense univariate polynomials over Rational, double or Complex.
///

#ifndef BPICK_POLYNOMIAL_HPP
#define BPICK_POLYNOMIAL_HPP

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace bpick {

/// Degree of a polynomial; the zero polynomial has no degree (-inf), which
/// is represented by an empty optional rather than by -1.
using Degree = std::optional<std::size_t>;

template <Scalar T>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }
    explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(T v) { return Polynomial(std::vector<T>{std::move(v)}); }
    static Polynomial x() { return Polynomial(std::vector<T>{T(0), T(1)}); }

    /// The linear polynomial (z - r).
    static Polynomial linear_root(const T& r) { return Polynomial(std::vector<T>{-r, T(1)}); }

    /// Ascending coefficients, trailing zeros stripped.
    const std::vector<T>& coeffs() const noexcept { return c_; }

    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }

    Degree degree() const noexcept
    {
        if (c_.empty())
            return std::nullopt;
        return c_.size() - 1;
    }

    /// Degree with the zero polynomial mapped to 0; only for size bounds.
    std::size_t size_degree() const noexcept { return c_.empty() ? 0 : c_.size() - 1; }

    T operator[](std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }

    const T& lead() const { return c_.back(); }

    double max_abs_coeff() const
    {
        double m = 0;
        for (const auto& v : c_)
            m = std::max(m, magnitude(v));
        return m;
    }

    template <class U>
    U eval(const U& z) const
    {
        U acc = U(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * z + scalar_cast<U>(*it);
        return acc;
    }

    /// Sum |c_k| |z|^k, the natural magnitude against which eval(z) is small.
    double eval_scale(double absz) const
    {
        double acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * absz + magnitude(*it);
        return acc;
    }

    Polynomial derivative() const
    {
        if (c_.size() <= 1)
            return {};
        std::vector<T> d(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k)
            d[k - 1] = c_[k] * T(static_cast<long>(k));
        return Polynomial(std::move(d));
    }

    Polynomial monic() const
    {
        if (c_.empty())
            return {};
        T l = c_.back();
        std::vector<T> r(c_);
        for (auto& v : r)
            v /= l;
        r.back() = T(1);
        return Polynomial(std::move(r));
    }

    Polynomial operator-() const
    {
        std::vector<T> r(c_);
        for (auto& v : r)
            v = -v;
        return Polynomial(std::move(r));
    }

    friend Polynomial operator+(const Polynomial& p, const Polynomial& q)
    {
        std::vector<T> r(std::max(p.c_.size(), q.c_.size()), T(0));
        for (std::size_t k = 0; k < p.c_.size(); ++k)
            r[k] += p.c_[k];
        for (std::size_t k = 0; k < q.c_.size(); ++k)
            r[k] += q.c_[k];
        return Polynomial(std::move(r));
    }

    friend Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }

    friend Polynomial operator*(const Polynomial& p, const Polynomial& q)
    {
        if (p.is_zero() || q.is_zero())
            return {};
        std::vector<T> r(p.c_.size() + q.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < p.c_.size(); ++i)
            for (std::size_t j = 0; j < q.c_.size(); ++j)
                r[i + j] += p.c_[i] * q.c_[j];
        return Polynomial(std::move(r));
    }

    friend Polynomial operator*(const T& s, const Polynomial& p)
    {
        std::vector<T> r(p.c_);
        for (auto& v : r)
            v *= s;
        return Polynomial(std::move(r));
    }

    friend Polynomial operator*(const Polynomial& p, const T& s) { return s * p; }

    Polynomial& operator+=(const Polynomial& q) { return *this = *this + q; }
    Polynomial& operator-=(const Polynomial& q) { return *this = *this - q; }
    Polynomial& operator*=(const Polynomial& q) { return *this = *this * q; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Euclidean division; returns (quotient, remainder).
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b)
    {
        if (b.is_zero())
            throw Error(ErrorCode::DimensionMismatch, "polynomial division by zero");
        std::vector<T> rem(a.c_);
        if (rem.size() < b.c_.size())
            return {Polynomial{}, a};
        std::vector<T> quo(rem.size() - b.c_.size() + 1, T(0));
        for (std::size_t k = quo.size(); k-- > 0;) {
            T f = rem[k + b.c_.size() - 1] / b.c_.back();
            quo[k] = f;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                rem[k + j] -= f * b.c_[j];
            rem[k + b.c_.size() - 1] = T(0);
        }
        rem.resize(b.c_.size() - 1);
        return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
    }

    /// Synthetic division by (z - r); returns (quotient, remainder value).
    std::pair<Polynomial, T> deflate(const T& r) const
    {
        if (c_.empty())
            return {Polynomial{}, T(0)};
        std::vector<T> q(c_.size() - 1, T(0));
        T acc = c_.back();
        for (std::size_t k = c_.size() - 1; k-- > 0;) {
            q[k] = acc;
            acc = acc * r + c_[k];
        }
        return {Polynomial(std::move(q)), acc};
    }

    /// Drops trailing coefficients below eps * max|coeff| (float backends).
    Polynomial trimmed(double eps) const
    {
        if constexpr (is_exact_v<T>) {
            return *this;
        } else {
            std::vector<T> r(c_);
            double m = max_abs_coeff();
            while (!r.empty() && magnitude(r.back()) <= eps * m)
                r.pop_back();
            return Polynomial(std::move(r));
        }
    }

    template <Scalar U>
    Polynomial<U> cast() const
    {
        std::vector<U> r;
        r.reserve(c_.size());
        for (const auto& v : c_)
            r.push_back(scalar_cast<U>(v));
        return Polynomial<U>(std::move(r));
    }

    std::string str(const char* var = "z") const
    {
        if (c_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = c_.size(); k-- > 0;) {
            if (c_[k] == T(0))
                continue;
            T c = c_[k];
            bool neg = false;
            if constexpr (!is_complex_v<T>) {
                neg = c < T(0);
                if (neg)
                    c = -c;
            }
            if (first)
                os << (neg ? "-" : "");
            else
                os << (neg ? " - " : " + ");
            first = false;
            const bool unit = k >= 1 && c == T(1);
            if (!unit)
                os << to_string(c);
            if (k >= 1)
                os << (unit ? "" : "*") << var;
            if (k >= 2)
                os << "^" << k;
        }
        return os.str();
    }

private:
    void trim()
    {
        if constexpr (is_exact_v<T>) {
            while (!c_.empty() && c_.back() == 0)
                c_.pop_back();
        } else {
            double m = max_abs_coeff();
            while (!c_.empty() && (magnitude(c_.back()) == 0.0 || magnitude(c_.back()) <= 1e-14 * m))
                c_.pop_back();
        }
    }

    std::vector<T> c_;
};

/// Monic gcd by the Euclidean algorithm (exact backends).
template <Scalar T>
    requires(is_exact_v<T>)
Polynomial<T> gcd(Polynomial<T> a, Polynomial<T> b)
{
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? Polynomial<T>::constant(T(1)) : a.monic();
}

/// All complex roots, by Aberth-Ehrlich iteration followed by Newton polish.
/// Float evaluation; exact inputs are rounded first.
template <Scalar T>
std::vector<Complex> roots(const Polynomial<T>& p)
{
    Polynomial<Complex> q = p.template cast<Complex>();
    if (!q.degree() || *q.degree() == 0)
        return {};
    const std::size_t n = *q.degree();
    std::vector<Complex> c(q.coeffs());
    const Complex lead = c.back();
    for (auto& v : c)
        v /= lead;
    if (n == 1)
        return {-c[0]};

    // Cauchy bound for the initial circle.
    double radius = 0;
    for (std::size_t k = 0; k < n; ++k)
        radius = std::max(radius, std::abs(c[k]));
    radius = std::min(1.0 + radius, 1e8);
    double r0 = std::max(radius * 0.5, 1e-3);

    Polynomial<Complex> mp(c);
    Polynomial<Complex> dp = mp.derivative();
    std::vector<Complex> z(n);
    for (std::size_t k = 0; k < n; ++k) {
        double ang = 2.0 * std::numbers::pi * (static_cast<double>(k) + 0.25) / static_cast<double>(n) + 0.4;
        z[k] = r0 * Complex(std::cos(ang), std::sin(ang));
    }
    for (int iter = 0; iter < 500; ++iter) {
        double move = 0;
        for (std::size_t k = 0; k < n; ++k) {
            Complex pv = mp.eval(z[k]);
            Complex dv = dp.eval(z[k]);
            if (pv == Complex(0))
                continue;
            Complex ratio = pv / dv;
            Complex sum = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != k)
                    sum += 1.0 / (z[k] - z[j]);
            Complex w = ratio / (1.0 - ratio * sum);
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
                w = ratio;
            z[k] -= w;
            move = std::max(move, std::abs(w) / (1.0 + std::abs(z[k])));
        }
        if (move < 1e-15)
            break;
    }
    for (auto& r : z) {
        for (int it = 0; it < 3; ++it) {
            Complex dv = dp.eval(r);
            if (dv == Complex(0))
                break;
            Complex step = mp.eval(r) / dv;
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag()))
                break;
            r -= step;
        }
    }
    return z;
}

/// Real roots of a real polynomial: roots whose imaginary part is within
/// eps * (1 + |root|) of zero, returned with the imaginary part dropped.
template <RealScalar T>
std::vector<double> real_roots(const Polynomial<T>& p, double eps)
{
    std::vector<double> out;
    for (const auto& r : roots(p))
        if (std::abs(r.imag()) <= eps * (1.0 + std::abs(r)))
            out.push_back(r.real());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace bpick

#endif  // BPICK_POLYNOMIAL_HPP
