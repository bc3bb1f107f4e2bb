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

TEST_CASE("extended reals have a single point at infinity", "[scalars]")
{
    EQ a(q(3, 2)), b = EQ::infinity(), c = inf<Q>();
    CHECK(a.is_finite());
    CHECK(b.is_infinite());
    CHECK(b == c);
    CHECK_FALSE(a == b);
    CHECK(a == EQ(q(6, 4)));
    CHECK(a.str() == "3/2");
    CHECK(b.str() == "inf");
    CHECK_THROWS_AS(b.value(), Error);

    ED x(1.0), y(1.0 + 1e-12);
    CHECK_FALSE(x == y);
    CHECK(x.same_as(y, 1e-9));
    CHECK_FALSE(x.same_as(ED::infinity(), 1e-9));
}

TEST_CASE("rational parsing", "[scalars]")
{
    CHECK(parse_rational("3/4") == q(3, 4));
    CHECK(parse_rational("-6/8") == q(-3, 4));
    CHECK(parse_rational("12") == q(12));
    CHECK(parse_rational("0.125") == q(1, 8));
    CHECK(parse_rational("-2.5e-1") == q(-1, 4));
    CHECK(parse_rational("1e3") == q(1000));
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
    CHECK(rational_from_shortest(0.1) == q(1, 10));
    CHECK(to_string(q(-7, 3)) == "-7/3");
    CHECK(to_string(q(4)) == "4");
}

TEST_CASE("moebius application on the extended line", "[scalars]")
{
    using M = Moebius<Q>;
    CHECK(extreal_moebius_apply(M(1, 0, 0, 1), EQ(q(5))) == EQ(q(5)));
    CHECK(extreal_moebius_apply(M(0, -1, 1, 0), EQ::infinity()) == EQ(q(0)));
    CHECK(extreal_moebius_apply(M(0, -1, 1, -2), EQ(q(2))).is_infinite());
    // c = 0 sends infinity to infinity
    CHECK(extreal_moebius_apply(M(2, 1, 0, 1), EQ::infinity()).is_infinite());
    CHECK_THROWS_AS(M(1, 2, 2, 4), Error);
    CHECK_THROWS_AS(Moebius<double>(1.0, 2.0, 2.0, 4.0 + 1e-15), Error);
}

TEST_CASE("moebius composition and inversion", "[scalars]")
{
    using M = Moebius<Q>;
    const M neg_inv(0, -1, 1, 0);
    const auto id = M::identity();
    const auto c = moebius_compose(id, neg_inv);
    CHECK(c.a() == neg_inv.a());
    CHECK(c.b() == neg_inv.b());
    CHECK(c.c() == neg_inv.c());
    CHECK(c.d() == neg_inv.d());
    CHECK(moebius_compose(neg_inv, neg_inv).apply(EQ(q(3))) == EQ(q(3)));

    const auto inv = moebius_invert(neg_inv);
    CHECK(inv.a() == 0);
    CHECK(inv.b() == 1);
    CHECK(inv.c() == -1);
    CHECK(inv.d() == 0);
    for (Q z : {q(1), q(-2), q(5, 3)})
        CHECK(inv.apply(EQ(z)) == neg_inv.apply(EQ(z)));
    CHECK(moebius_invert(M(2, 0, 0, 1)).apply(EQ(q(6))) == EQ(q(3)));

    // m o m^-1 is a scalar multiple of the identity
    const M m(2, 3, 1, 4);
    const auto s = moebius_compose(m, moebius_invert(m));
    CHECK(s.b() == 0);
    CHECK(s.c() == 0);
    CHECK(s.a() == s.d());
}

TEST_CASE("moebius properties on random maps", "[scalars][property]")
{
    Gen g(11);
    using M = Moebius<Q>;
    auto random_map = [&] {
        for (;;) {
            Q a = g.quarter(-3, 3), b = g.quarter(-3, 3), c = g.quarter(-3, 3), d = g.quarter(-3, 3);
            if (a * d - b * c != 0)
                return M(a, b, c, d);
        }
    };
    for (int trial = 0; trial < 100; ++trial) {
        const auto m1 = random_map(), m2 = random_map(), m3 = random_map();
        CHECK(moebius_compose(m1, m2).det() == m1.det() * m2.det());
        std::vector<EQ> pts{EQ::infinity(), EQ(g.quarter(-5, 5)), EQ(g.quarter(-5, 5))};
        // the pole of m1 and its image of infinity
        if (m1.c() != 0)
            pts.push_back(EQ(Q(-m1.d() / m1.c())));
        for (const auto& z : pts) {
            CHECK(moebius_invert(m1).apply(m1.apply(z)) == z);
            CHECK(moebius_compose(moebius_compose(m1, m2), m3).apply(z) ==
                  moebius_compose(m1, moebius_compose(m2, m3)).apply(z));
            CHECK(moebius_compose(m1, m2).apply(z) == m1.apply(m2.apply(z)));
        }
    }
}

TEST_CASE("float moebius agrees with the exact one", "[scalars]")
{
    Moebius<double> m(2.0, 3.0, 1.0, 4.0);
    const auto z = m.inverse().apply(m.apply(ED(0.3)));
    CHECK(z.same_as(ED(0.3), 1e-12));
    CHECK(m.apply(ED(-4.0)).is_infinite());
}
