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
/// \file rational_function.hpp
///
/// Quotients of polynomials kept in a canonical reduced form: the
/// denominator is monic and shares no root with the numerator. In exact mode
/// the common factor is removed with a polynomial gcd. In float mode only
/// roots of the denominator that match a numerator root within the root
/// tolerance are cancelled (real roots for real coefficients, any root for
/// complex coefficients); there is no general approximate gcd.
///

#ifndef BPICK_RATIONAL_FUNCTION_HPP
#define BPICK_RATIONAL_FUNCTION_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "extended.hpp"
#include "polynomial.hpp"

namespace bpick {

template <Scalar T>
class RationalFunction {
public:
    RationalFunction() : den_(Polynomial<T>::constant(T(1))) {}

    RationalFunction(T c) : num_(Polynomial<T>::constant(std::move(c))), den_(Polynomial<T>::constant(T(1))) {}

    explicit RationalFunction(Polynomial<T> p)
        : num_(std::move(p)), den_(Polynomial<T>::constant(T(1)))
    {
    }

    RationalFunction(Polynomial<T> num, Polynomial<T> den, double root_eps = 1e-8)
        : num_(std::move(num)), den_(std::move(den)), root_eps_(root_eps)
    {
        if (den_.is_zero())
            throw Error(ErrorCode::ZeroFunction, "rational function with zero denominator");
        reduce();
    }

    /// The identity function z.
    static RationalFunction identity() { return RationalFunction(Polynomial<T>::x()); }

    const Polynomial<T>& num() const noexcept { return num_; }
    const Polynomial<T>& den() const noexcept { return den_; }
    double root_eps() const noexcept { return root_eps_; }

    /// Same function with a different root tolerance; the form is not reduced again.
    RationalFunction with_root_eps(double eps) const
    {
        RationalFunction r = *this;
        r.root_eps_ = eps;
        return r;
    }

    /// max(deg num, deg den) of the reduced form.
    std::size_t degree() const { return std::max(num_.size_degree(), den_.size_degree()); }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }

    /// Value at a finite complex point (inf/nan at poles).
    Complex operator()(const Complex& z) const { return num_.eval(z) / den_.eval(z); }

    /// True if the reduced denominator vanishes at x (within the root
    /// tolerance in float mode).
    bool is_pole_at(const T& x) const
    {
        return bpick::is_zero(den_.eval(x), den_.eval_scale(magnitude(x)), root_eps_);
    }

    /// Value on the extended line/plane, with num(x)=den(x)=0 already
    /// resolved by reduction and z = inf mapped by leading terms.
    Extended<T> at(const Extended<T>& z) const
    {
        if (z.is_infinite()) {
            if (num_.is_zero())
                return Extended<T>(T(0));
            std::size_t dn = *num_.degree(), dd = *den_.degree();
            if (dn > dd)
                return Extended<T>::infinity();
            if (dn < dd)
                return Extended<T>(T(0));
            return Extended<T>(num_.lead() / den_.lead());
        }
        const T& x = z.value();
        if (is_pole_at(x))
            return Extended<T>::infinity();
        return Extended<T>(num_.eval(x) / den_.eval(x));
    }

    Extended<T> at(const T& x) const { return at(Extended<T>(x)); }

    /// Value at a point known not to be a pole.
    T value_at(const T& x) const
    {
        if (is_pole_at(x))
            throw Error(ErrorCode::PoleAtPoint, "evaluation at a pole " + to_string(x));
        return num_.eval(x) / den_.eval(x);
    }

    /// f'(x) by the quotient rule.
    T derivative_at(const T& x) const
    {
        if (is_pole_at(x))
            throw Error(ErrorCode::PoleAtPoint, "derivative at a pole " + to_string(x));
        T d = den_.eval(x);
        return (num_.derivative().eval(x) * d - num_.eval(x) * den_.derivative().eval(x)) / (d * d);
    }

    /// Residue num(x)/den'(x) at a simple pole x.
    T residue_at(const T& x) const
    {
        const double ax = magnitude(x);
        if (!is_pole_at(x))
            throw Error(ErrorCode::NotASimplePole, "no pole at " + to_string(x));
        Polynomial<T> dd = den_.derivative();
        T dv = dd.eval(x);
        if (bpick::is_zero(dv, dd.eval_scale(ax), root_eps_))
            throw Error(ErrorCode::NotASimplePole, "pole of order >= 2 at " + to_string(x));
        return num_.eval(x) / dv;
    }

    RationalFunction derivative() const
    {
        return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_, root_eps_);
    }

    /// Divides numerator and denominator by (z - x) while both vanish at x.
    /// Used where a cancellation point is known exactly.
    RationalFunction cancel_at(const T& x) const
    {
        RationalFunction r = *this;
        const double ax = magnitude(x);
        while (!r.num_.is_zero() && r.den_.degree().value_or(0) > 0) {
            auto [qn, rn] = r.num_.deflate(x);
            auto [qd, rd] = r.den_.deflate(x);
            if (!bpick::is_zero(rn, r.num_.eval_scale(ax), root_eps_) || !bpick::is_zero(rd, r.den_.eval_scale(ax), root_eps_))
                break;
            r.num_ = qn;
            r.den_ = qd;
        }
        r.normalize_den();
        return r;
    }

    RationalFunction operator-() const { return make(-num_, den_); }

    friend RationalFunction operator+(const RationalFunction& f, const RationalFunction& g)
    {
        if (f.den_ == g.den_)
            return make(f.num_ + g.num_, f.den_, std::max(f.root_eps_, g.root_eps_));
        return make(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_, std::max(f.root_eps_, g.root_eps_));
    }

    friend RationalFunction operator-(const RationalFunction& f, const RationalFunction& g) { return f + (-g); }

    friend RationalFunction operator*(const RationalFunction& f, const RationalFunction& g)
    {
        return make(f.num_ * g.num_, f.den_ * g.den_, std::max(f.root_eps_, g.root_eps_));
    }

    friend RationalFunction operator/(const RationalFunction& f, const RationalFunction& g)
    {
        if (g.is_zero())
            throw Error(ErrorCode::ZeroFunction, "division by the zero function");
        return make(f.num_ * g.den_, f.den_ * g.num_, std::max(f.root_eps_, g.root_eps_));
    }

    RationalFunction reciprocal() const
    {
        if (is_zero())
            throw Error(ErrorCode::ZeroFunction, "reciprocal of the zero function");
        return make(den_, num_, root_eps_);
    }

    /// Canonical-form equality (exact in exact mode, bitwise in float mode).
    friend bool operator==(const RationalFunction& f, const RationalFunction& g)
    {
        return f.num_ == g.num_ && f.den_ == g.den_;
    }

    /// Coefficient-wise comparison of the canonical forms, exact in exact mode.
    bool same_as(const RationalFunction& g, double eps) const
    {
        if constexpr (is_exact_v<T>) {
            return *this == g;
        } else {
            if (num_.coeffs().size() != g.num_.coeffs().size() || den_.coeffs().size() != g.den_.coeffs().size())
                return false;
            double scale = std::max({num_.max_abs_coeff(), g.num_.max_abs_coeff(), den_.max_abs_coeff(), 1.0});
            for (std::size_t k = 0; k < num_.coeffs().size(); ++k)
                if (magnitude(num_.coeffs()[k] - g.num_.coeffs()[k]) > eps * scale)
                    return false;
            for (std::size_t k = 0; k < den_.coeffs().size(); ++k)
                if (magnitude(den_.coeffs()[k] - g.den_.coeffs()[k]) > eps * scale)
                    return false;
            return true;
        }
    }

    template <Scalar U>
    RationalFunction<U> cast() const
    {
        return RationalFunction<U>(num_.template cast<U>(), den_.template cast<U>(), root_eps_);
    }

    std::string str() const { return "(" + num_.str() + ") / (" + den_.str() + ")"; }

private:
    static RationalFunction make(Polynomial<T> n, Polynomial<T> d, double eps = 1e-8)
    {
        return RationalFunction(std::move(n), std::move(d), eps);
    }

    void normalize_den()
    {
        if (num_.is_zero()) {
            den_ = Polynomial<T>::constant(T(1));
            return;
        }
        T l = den_.lead();
        if (l != T(1)) {
            T inv = T(1) / l;
            num_ = inv * num_;
            den_ = den_.monic();
        }
    }

    void reduce()
    {
        if (num_.is_zero()) {
            den_ = Polynomial<T>::constant(T(1));
            return;
        }
        if constexpr (is_exact_v<T>) {
            Polynomial<T> g = gcd(num_, den_);
            if (g.degree().value_or(0) > 0) {
                num_ = divmod(num_, g).first;
                den_ = divmod(den_, g).first;
            }
        } else {
            cancel_common_roots();
        }
        normalize_den();
    }

    void cancel_common_roots()
    {
        if (den_.degree().value_or(0) == 0 || num_.degree().value_or(0) == 0)
            return;
        std::vector<Complex> dr = roots(den_);
        std::vector<Complex> nr = roots(num_);
        for (const Complex& r : dr) {
            if constexpr (!is_complex_v<T>) {
                if (std::abs(r.imag()) > root_eps_ * (1.0 + std::abs(r)))
                    continue;
            }
            auto best = nr.end();
            double bestd = std::numeric_limits<double>::infinity();
            for (auto it = nr.begin(); it != nr.end(); ++it) {
                double dist = std::abs(*it - r);
                if (dist < bestd) {
                    bestd = dist;
                    best = it;
                }
            }
            if (best == nr.end() || bestd > root_eps_ * (1.0 + std::abs(r)))
                continue;
            Complex mid = 0.5 * (r + *best);
            nr.erase(best);
            T at;
            if constexpr (is_complex_v<T>)
                at = mid;
            else
                at = mid.real();
            num_ = num_.deflate(at).first;
            den_ = den_.deflate(at).first;
            if (den_.degree().value_or(0) == 0 || num_.is_zero())
                break;
        }
    }

    Polynomial<T> num_;
    Polynomial<T> den_;
    double root_eps_ = 1e-8;
};

// Free-function spellings of the module operations.

template <Scalar T>
Extended<T> rat_eval(const RationalFunction<T>& f, const Extended<T>& z)
{
    return f.at(z);
}

template <Scalar T>
Complex rat_eval(const RationalFunction<T>& f, const Complex& z)
{
    return f(z);
}

template <Scalar T>
T rat_derivative_at(const RationalFunction<T>& f, const T& x)
{
    return f.derivative_at(x);
}

template <Scalar T>
T rat_residue_at(const RationalFunction<T>& f, const T& x)
{
    return f.residue_at(x);
}

}  // namespace bpick

#endif  // BPICK_RATIONAL_FUNCTION_HPP
