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

#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace bpick;
using namespace bpick::testing;
using P = Polynomial<Q>;

namespace {

P z_minus(Q r) { return P::linear_root(r); }

PolyMatrix2<Q> random_pm(Gen& g)
{
    auto rp = [&] {
        std::vector<Q> c;
        for (int k = 0, n = g.integer(1, 3); k < n; ++k)
            c.push_back(g.quarter(-3, 3));
        return P(c);
    };
    return {rp(), rp(), rp(), rp()};
}

}  // namespace

TEST_CASE("polynomial basics", "[polyrat]")
{
    P p{Q(1), Q(0), Q(0)};
    CHECK(p.coeffs().size() == 1);
    CHECK(*p.degree() == 0);
    CHECK_FALSE(P{}.degree().has_value());
    CHECK(P{Q(0)}.is_zero());

    const P a = z_minus(1) * z_minus(2);
    CHECK(a == P{Q(2), Q(-3), Q(1)});
    auto [quot, rem] = a.deflate(Q(2));
    CHECK(quot == z_minus(1));
    CHECK(rem == 0);
    auto [dq, dr] = divmod(a, z_minus(3));
    CHECK(dq * z_minus(3) + dr == a);
    CHECK(gcd(a, z_minus(2) * z_minus(5)) == z_minus(2));
    CHECK(a.str() == "z^2 - 3*z + 2");
}

TEST_CASE("rational evaluation", "[polyrat]")
{
    CHECK(rat_eval(ident<Q>(), EQ(q(0))) == EQ(q(0)));
    const auto g = ratfn<Q>({-1}, {0, 2});
    CHECK(rat_eval(g, EQ(q(1))) == EQ(q(-1, 2)));
    const auto h = ratfn<Q>({1}, {0, -1, 1});
    CHECK(rat_eval(h, EQ::infinity()) == EQ(q(0)));
    CHECK(rat_eval(h, EQ(q(1))).is_infinite());
    CHECK(rat_eval(ident<Q>(), EQ::infinity()).is_infinite());
    CHECK(rat_eval(ratfn<Q>({1, 2}, {3, 4}), EQ::infinity()) == EQ(q(1, 2)));

    // common factors are removed on construction
    const auto r = RationalFunction<Q>(z_minus(1) * z_minus(2), z_minus(1) * z_minus(3));
    CHECK(r.num() == z_minus(2));
    CHECK(r.den() == z_minus(3));
    CHECK(rat_eval(r, EQ(q(1))) == EQ(q(1, 2)));
    // monic denominator
    const auto m = ratfn<Q>({2}, {4, 2});
    CHECK(m.den().lead() == 1);
    CHECK(m.num() == P{Q(1)});
}

TEST_CASE("derivatives", "[polyrat]")
{
    CHECK(rat_derivative_at(ident<Q>(), q(7)) == 1);
    CHECK(rat_derivative_at(ratfn<Q>({-1}, {0, 1}), q(2)) == q(1, 4));
    CHECK(rat_derivative_at(ratfn<Q>({0, 0, 1}, {1}), q(3)) == 6);
    CHECK_THROWS_AS(rat_derivative_at(ratfn<Q>({-1}, {0, 1}), q(0)), Error);
}

TEST_CASE("residues", "[polyrat]")
{
    CHECK(rat_residue_at(ratfn<Q>({-1}, {0, 1}), q(0)) == -1);
    CHECK(rat_residue_at(ratfn<Q>({-1}, {0, 2}), q(0)) == q(-1, 2));
    // partial fractions oracle: 1/(z(z-1)) = -1/z + 1/(z-1)
    const auto f = ratfn<Q>({1}, {0, -1, 1});
    CHECK(rat_residue_at(f, q(1)) == 1);
    CHECK(rat_residue_at(f, q(0)) == -1);
    try {
        (void)rat_residue_at(ratfn<Q>({1}, {0, 0, 1}), q(0));
        FAIL("double pole accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotASimplePole);
    }
    CHECK_THROWS_AS(rat_residue_at(f, q(2)), Error);
}

TEST_CASE("polynomial matrix determinants", "[polyrat]")
{
    CHECK(polymatrix_det(PolyMatrix2<Q>::identity()) == P{Q(1)});

    const auto finite = augmentation_matrix(EQ(q(5, 3)), Q(2), Q(0));
    CHECK(polymatrix_det(finite) == P{Q(0), Q(0), Q(4)});
    const auto infinite = augmentation_matrix(EQ::infinity(), Q(3), Q(1));
    CHECK(polymatrix_det(infinite) == Q(9) * z_minus(1) * z_minus(1));

    // the two-node example: t = (2, 3/2) at nodes 0 and 1
    const auto a1 = augmentation_matrix(EQ(q(0)), Q(2), Q(0));
    const auto a2 = augmentation_matrix(EQ(q(-1, 2)), q(3, 2), Q(1));
    CHECK(polymatrix_det(polymatrix_mul(a1, a2)) == Q(9) * P{Q(0), Q(0), Q(1)} * z_minus(1) * z_minus(1));

    Gen g(3);
    const auto a = random_pm(g);
    CHECK(polymatrix_mul(a, PolyMatrix2<Q>::identity()) == a);
}

TEST_CASE("determinant is multiplicative", "[polyrat][property]")
{
    Gen g(5);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_pm(g), b = random_pm(g);
        CHECK(polymatrix_det(polymatrix_mul(a, b)) == polymatrix_det(a) * polymatrix_det(b));
    }
}

TEST_CASE("derivative matches finite differences", "[polyrat][property]")
{
    Gen g(7);
    for (int trial = 0; trial < 100; ++trial) {
        const auto f = g.pick_function(static_cast<std::size_t>(g.integer(0, 3)));
        const auto fd = f.cast<double>();
        const Q x = g.quarter(-5, 5) + q(1, 8);
        if (f.is_pole_at(x))
            continue;
        // exact: the symbolic derivative
        CHECK(f.derivative_at(x) == f.derivative().value_at(x));
        const double xd = to_double(x);
        const double num = central_diff([&](double t) { return fd.value_at(t); }, xd, 1e-6);
        const double d = fd.derivative_at(xd);
        CHECK(std::abs(num - d) <= 1e-5 * std::max(1.0, std::abs(d)));
    }
}

TEST_CASE("residue matches the limit of (z - x) f(z)", "[polyrat][property]")
{
    Gen g(9);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<PoleTerm<Q>> terms{{g.positive(3), g.quarter(-3, 3)}};
        const auto f = make_pick_function(g.positive(2), g.quarter(-2, 2), terms);
        const Q x = terms[0].pole;
        const double r = to_double(rat_residue_at(f, x));
        const double z = to_double(x) + 1e-7;
        const double lim = 1e-7 * f.cast<double>().value_at(z);
        CHECK(std::abs(lim - r) <= 1e-5 * std::abs(r));
        CHECK(r == to_double(-terms[0].weight));
    }
}

TEST_CASE("reduction is idempotent", "[polyrat][property]")
{
    Gen g(13);
    for (int trial = 0; trial < 50; ++trial) {
        const auto f = g.pick_function(static_cast<std::size_t>(g.integer(0, 3)));
        const Q c = g.quarter(-4, 4);
        // multiply through by a common factor and rebuild
        const auto blown = RationalFunction<Q>(f.num() * z_minus(c), f.den() * z_minus(c));
        CHECK(blown == f);
        CHECK(RationalFunction<Q>(f.num(), f.den()) == f);
        const auto common = gcd(f.num(), f.den());
        CHECK(common.degree().value_or(0) == 0);
    }
}
