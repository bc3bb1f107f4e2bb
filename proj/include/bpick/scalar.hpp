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
/// \file scalar.hpp
///
/// Scalar backends. Two modes are supported throughout the library:
///
///   - exact: arbitrary precision rationals (`bpick::Rational`); every
///     equality and zero test is exact and tolerances are ignored;
///   - float: `double` (and `std::complex<double>` on the disk side); zero
///     and equality tests use the relative tolerances of a ToleranceProfile.
///

#ifndef BPICK_SCALAR_HPP
#define BPICK_SCALAR_HPP

#include <algorithm>
#include <charconv>
#include <cmath>
#include <complex>
#include <concepts>
#include <string>
#include <string_view>
#include <system_error>
#include <type_traits>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace bpick {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;
using Complex = std::complex<double>;

/// Every tolerance used by the float backend, threaded by value through the
/// library. Exact computations ignore these.
struct ToleranceProfile {
    double eq = 1e-9;       ///< relative equality of scalars / ExtReal values
    double det = 1e-12;     ///< Moebius invertibility, relative to max|entry|^2
    double trim = 1e-13;    ///< trailing-coefficient trimming, relative to max|coeff|
    double root = 1e-8;     ///< common-root cancellation and pole detection
    double sym = 1e-10;     ///< symmetry of Pick matrices
    double psd = 1e-10;     ///< eigenvalue threshold, scaled by (1 + ||M||_inf)
    double slack = 1e-10;   ///< diagonal slack threshold, scaled by (1 + m_ii)
    double cong = 1e-10;    ///< diagonal congruence residual
    double val = 1e-9;      ///< interpolation value / derivative checks
    double pick = 1e-9;     ///< Im f >= -pick * (1 + |f|) in the membership sampler
    double unit = 1e-9;     ///< unimodularity on the circle
    double node = 1e-9;     ///< node separation
};

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    static constexpr bool complex = false;
};

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    static constexpr bool complex = false;
};

template <>
struct scalar_traits<Complex> {
    static constexpr bool exact = false;
    static constexpr bool complex = true;
};

template <class T>
inline constexpr bool is_exact_v = scalar_traits<T>::exact;

template <class T>
inline constexpr bool is_complex_v = scalar_traits<T>::complex;

/// Real scalar types usable as node/target coordinates.
template <class T>
concept RealScalar = std::same_as<T, Rational> || std::same_as<T, double>;

template <class T>
concept Scalar = RealScalar<T> || std::same_as<T, Complex>;

inline double to_double(const Rational& x) { return static_cast<double>(x); }
inline double to_double(double x) { return x; }

inline Complex to_complex(const Rational& x) { return {static_cast<double>(x), 0.0}; }
inline Complex to_complex(double x) { return {x, 0.0}; }
inline Complex to_complex(const Complex& x) { return x; }

inline double magnitude(const Rational& x) { return std::abs(static_cast<double>(x)); }
inline double magnitude(double x) { return std::abs(x); }
inline double magnitude(const Complex& x) { return std::abs(x); }

/// Converts between backends. Rational -> double rounds; double -> Rational
/// is exact in binary.
template <class To, class From>
To scalar_cast(const From& x)
{
    if constexpr (std::is_same_v<To, From>)
        return x;
    else if constexpr (std::is_same_v<To, double>)
        return to_double(x);
    else if constexpr (std::is_same_v<To, Complex>)
        return to_complex(x);
    else if constexpr (std::is_same_v<To, Rational> && std::is_same_v<From, double>)
        return Rational(x);
    else
        static_assert(sizeof(To) == 0, "unsupported scalar conversion");
}

/// Zero test. `scale` is the magnitude the value should be compared against.
template <class T>
bool is_zero(const T& x, double scale, double eps)
{
    if constexpr (is_exact_v<T>)
        return x == 0;
    else
        return magnitude(x) <= eps * (1.0 + scale);
}

template <class T>
bool near_equal(const T& a, const T& b, double eps)
{
    if constexpr (is_exact_v<T>)
        return a == b;
    else
        return magnitude(a - b) <= eps * (1.0 + std::max(magnitude(a), magnitude(b)));
}

/// Sign test robust to float noise: returns true if x > eps*(1+scale).
template <RealScalar T>
bool is_positive(const T& x, double scale, double eps)
{
    if constexpr (is_exact_v<T>)
        return x > 0;
    else
        return x > eps * (1.0 + scale);
}

// ---------------------------------------------------------------------------
// text conversion

namespace detail {

inline std::string_view trim_ws(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

inline BigInt parse_integer(std::string_view s)
{
    s = trim_ws(s);
    bool neg = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty())
        throw Error(ErrorCode::Parse, "empty integer");
    BigInt v = 0;
    for (char c : s) {
        if (c < '0' || c > '9')
            throw Error(ErrorCode::Parse, "bad digit in '" + std::string(s) + "'");
        v = v * 10 + (c - '0');
    }
    return neg ? BigInt(-v) : v;
}

/// Parses a decimal literal (optionally with exponent) exactly.
inline Rational parse_decimal(std::string_view s)
{
    s = trim_ws(s);
    std::string_view mant = s;
    long exp10 = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        mant = s.substr(0, e);
        std::string_view es = s.substr(e + 1);
        if (!es.empty() && es.front() == '+')
            es.remove_prefix(1);
        auto [p, ec] = std::from_chars(es.data(), es.data() + es.size(), exp10);
        if (ec != std::errc() || p != es.data() + es.size())
            throw Error(ErrorCode::Parse, "bad exponent in '" + std::string(s) + "'");
    }
    std::string digits;
    long frac = 0;
    bool seen_dot = false;
    for (char c : mant) {
        if (c == '.') {
            if (seen_dot)
                throw Error(ErrorCode::Parse, "bad decimal '" + std::string(s) + "'");
            seen_dot = true;
        } else {
            digits.push_back(c);
            if (seen_dot && c >= '0' && c <= '9')
                ++frac;
        }
    }
    BigInt n = parse_integer(digits);
    exp10 -= frac;
    BigInt p = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(std::labs(exp10)));
    return exp10 >= 0 ? Rational(n * p) : Rational(n, p);
}

}  // namespace detail

/// Parses "p/q", an integer, or a decimal literal into an exact rational.
inline Rational parse_rational(std::string_view text)
{
    std::string_view s = detail::trim_ws(text);
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        BigInt p = detail::parse_integer(s.substr(0, slash));
        BigInt q = detail::parse_integer(s.substr(slash + 1));
        if (q == 0)
            throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(s) + "'");
        return Rational(p, q);
    }
    return detail::parse_decimal(s);
}

/// Exact rational value of the shortest decimal that round-trips `x`.
inline Rational rational_from_shortest(double x)
{
    if (!std::isfinite(x))
        throw Error(ErrorCode::Parse, "non-finite number has no rational value");
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return detail::parse_decimal(std::string_view(buf, p));
}

inline std::string to_string(const Rational& x)
{
    if (denominator(x) == 1)
        return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

inline std::string to_string(double x)
{
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, p);
}

inline std::string to_string(const Complex& x)
{
    return "(" + to_string(x.real()) + "," + to_string(x.imag()) + ")";
}

}  // namespace bpick

#endif  // BPICK_SCALAR_HPP
