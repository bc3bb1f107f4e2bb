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
/// \file extended.hpp
///
/// One-point compactification T u {inf} and linear fractional maps on it.
///

#ifndef BPICK_EXTENDED_HPP
#define BPICK_EXTENDED_HPP

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>

#include "scalar.hpp"

namespace bpick {

/// A point of T u {inf}, with a single unsigned infinity.
template <Scalar T>
class Extended {
public:
    Extended() = default;  // zero
    Extended(T v) : value_(std::move(v)) {}

    template <class U>
        requires(std::is_arithmetic_v<U>)
    Extended(U v) : value_(T(v))
    {
    }

    static Extended infinity()
    {
        Extended e;
        e.value_.reset();
        return e;
    }

    bool is_infinite() const noexcept { return !value_.has_value(); }
    bool is_finite() const noexcept { return value_.has_value(); }

    /// Finite value; precondition is_finite().
    const T& value() const
    {
        if (!value_)
            throw Error(ErrorCode::NonRealValue, "value() on the point at infinity");
        return *value_;
    }

    /// Exact comparison (bitwise for floats); inf equals only inf.
    friend bool operator==(const Extended& a, const Extended& b)
    {
        if (a.is_infinite() || b.is_infinite())
            return a.is_infinite() && b.is_infinite();
        return *a.value_ == *b.value_;
    }

    /// Tolerance-aware comparison: exact in exact mode, relative eps otherwise.
    bool same_as(const Extended& other, double eps) const
    {
        if (is_infinite() || other.is_infinite())
            return is_infinite() && other.is_infinite();
        return near_equal(*value_, *other.value_, eps);
    }

    std::string str() const { return is_infinite() ? std::string("inf") : to_string(*value_); }

    friend std::ostream& operator<<(std::ostream& os, const Extended& e) { return os << e.str(); }

private:
    std::optional<T> value_ = T(0);
};

template <RealScalar T>
using ExtReal = Extended<T>;

template <class T>
Extended<T> inf()
{
    return Extended<T>::infinity();
}

/// Constant-coefficient linear fractional map z -> (a z + b) / (c z + d).
template <Scalar T>
class Moebius {
public:
    Moebius(T a, T b, T c, T d, const ToleranceProfile& tol = {})
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d))
    {
        const double big = std::max({magnitude(a_), magnitude(b_), magnitude(c_), magnitude(d_)});
        bool singular;
        if constexpr (is_exact_v<T>)
            singular = det() == 0;
        else
            singular = magnitude(det()) <= tol.det * big * big;
        if (singular)
            throw Error(ErrorCode::SingularMoebius, "ad - bc vanishes");
    }

    static Moebius identity() { return Moebius(T(1), T(0), T(0), T(1)); }

    const T& a() const noexcept { return a_; }
    const T& b() const noexcept { return b_; }
    const T& c() const noexcept { return c_; }
    const T& d() const noexcept { return d_; }

    T det() const { return a_ * d_ - b_ * c_; }

    /// Applies the map, with inf -> a/c (inf when c = 0) and -d/c -> inf.
    Extended<T> apply(const Extended<T>& z, const ToleranceProfile& tol = {}) const
    {
        if (z.is_infinite()) {
            if (is_zero(c_, magnitude(a_), tol.eq))
                return Extended<T>::infinity();
            return Extended<T>(a_ / c_);
        }
        const T& x = z.value();
        T den = c_ * x + d_;
        if (is_zero(den, magnitude(c_ * x) + magnitude(d_), tol.eq))
            return Extended<T>::infinity();
        return Extended<T>((a_ * x + b_) / den);
    }

    Extended<T> operator()(const Extended<T>& z) const { return apply(z); }

    /// (a d - b c)-preserving inverse (d, -b, -c, a).
    Moebius inverse() const { return Moebius(d_, -b_, -c_, a_); }

    /// Composition: (*this) o (rhs), i.e. the matrix product.
    Moebius compose(const Moebius& rhs) const
    {
        return Moebius(a_ * rhs.a_ + b_ * rhs.c_, a_ * rhs.b_ + b_ * rhs.d_,
                       c_ * rhs.a_ + d_ * rhs.c_, c_ * rhs.b_ + d_ * rhs.d_);
    }

    friend bool operator==(const Moebius&, const Moebius&) = default;

private:
    T a_, b_, c_, d_;
};

template <Scalar T>
Extended<T> extreal_moebius_apply(const Moebius<T>& m, const Extended<T>& z)
{
    return m.apply(z);
}

template <Scalar T>
Moebius<T> moebius_compose(const Moebius<T>& m1, const Moebius<T>& m2)
{
    return m1.compose(m2);
}

template <Scalar T>
Moebius<T> moebius_invert(const Moebius<T>& m)
{
    return m.inverse();
}

}  // namespace bpick

#endif  // BPICK_EXTENDED_HPP
