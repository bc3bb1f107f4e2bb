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

#ifndef BPICK_POLY_MATRIX_HPP
#define BPICK_POLY_MATRIX_HPP

#include "rational_function.hpp"

namespace bpick {

/// 2x2 matrix [a b; c d] of polynomials, acting on functions h by
/// h -> (a h + b) / (c h + d).
template <Scalar T>
struct PolyMatrix2 {
    Polynomial<T> a, b, c, d;

    static PolyMatrix2 identity()
    {
        return {Polynomial<T>::constant(T(1)), {}, {}, Polynomial<T>::constant(T(1))};
    }

    Polynomial<T> det() const { return a * d - b * c; }

    friend PolyMatrix2 operator*(const PolyMatrix2& l, const PolyMatrix2& r)
    {
        return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d, l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
    }

    friend bool operator==(const PolyMatrix2&, const PolyMatrix2&) = default;

    /// Linear fractional action on h = p/q: (a p + b q) / (c p + d q).
    RationalFunction<T> apply(const RationalFunction<T>& h, double root_eps = 1e-8) const
    {
        const auto& p = h.num();
        const auto& q = h.den();
        return RationalFunction<T>(a * p + b * q, c * p + d * q, root_eps);
    }
};

template <Scalar T>
Polynomial<T> polymatrix_det(const PolyMatrix2<T>& m)
{
    return m.det();
}

template <Scalar T>
PolyMatrix2<T> polymatrix_mul(const PolyMatrix2<T>& l, const PolyMatrix2<T>& r)
{
    return l * r;
}

}  // namespace bpick

#endif  // BPICK_POLY_MATRIX_HPP
