/*
   Copyright 2026 The dpa authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
*/
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dpa/field.hpp"
#include "dpa/kpoly.hpp"

using namespace dpa;

TEST_CASE("cyclotomic identities") {
    auto K3 = Tower::cyclotomic(3);
    FE z = K3->zeta();
    CHECK((z * z + z + K3->one()).is_zero());

    auto K4 = Tower::cyclotomic(4);
    FE i = K4->zeta();
    CHECK(i * i == K4->from_rat(-1));

    auto K7 = Tower::cyclotomic(7);
    FE prod = K7->one();
    for (int k = 1; k <= 6; ++k) prod = prod * (K7->one() - K7->zeta_power(k));
    CHECK(prod == K7->from_rat(7));
}

TEST_CASE("zeta has exact multiplicative order m") {
    for (int m : {3, 4, 5, 7, 8, 12, 24}) {
        auto K = Tower::cyclotomic(m);
        auto ord = K->zeta().torsion_order();
        REQUIRE(ord.has_value());
        CHECK(*ord == m);
    }
}

TEST_CASE("field axioms on pseudo-random elements") {
    auto K = Tower::cyclotomic(5);
    auto elem = [&](int seed) {
        FE e = K->zero();
        long s = seed;
        for (int i = 0; i < 4; ++i) {
            s = (s * 1103515245 + 12345) & 0x7fffffff;
            e = e + K->zeta_power(i) * K->from_rat(rat((s % 17) - 8, 1 + (s % 5)));
        }
        return e;
    };
    for (int t = 0; t < 12; ++t) {
        FE a = elem(3 * t + 1), b = elem(3 * t + 2), c = elem(3 * t + 3);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b - b == a);
        if (!b.is_zero()) CHECK(a * b * b.inverse() == a);
    }
}

TEST_CASE("roots of unity in towers") {
    auto K3 = Tower::cyclotomic(3);
    auto r6 = K3->root_of_unity(6); // zeta_6 = -zeta_3^2
    REQUIRE(r6.has_value());
    CHECK(*r6->torsion_order() == 6);
    CHECK(!K3->root_of_unity(4).has_value());
    CHECK(Tower::enlarged_conductor(3, 4) == 12);
    CHECK(Tower::enlarged_conductor(7, 6) == 21);
}

TEST_CASE("embedding into larger conductor") {
    auto K3 = Tower::cyclotomic(3);
    auto K12 = Tower::cyclotomic(12);
    FE z3 = K3->zeta();
    FE lifted = embed(z3, K12);
    CHECK(lifted == K12->zeta_power(4));
    CHECK(embed(K3->from_rat(rat(5, 3)), K12) == K12->from_rat(rat(5, 3)));
    FE sum = z3 + K12->zeta();
    CHECK(sum.tower()->conductor() == 12);
}

TEST_CASE("extensions") {
    auto Q = Tower::rationals();
    SUBCASE("adjoin sqrt2 over Q") {
        auto E = Q->extended({Q->from_rat(-2), Q->zero(), Q->one()}); // u^2 - 2
        FE u = E->u_gen();
        CHECK(u * u == E->from_rat(2));
        CHECK(u.inverse() * u == E->one());
        FE v = E->one() + u;
        CHECK(v * v.inverse() == E->one());
    }
    SUBCASE("adjoin cube root of 2 over Q(zeta_3)") {
        auto K3 = Tower::cyclotomic(3);
        auto E = K3->extended({K3->from_rat(-2), K3->zero(), K3->zero(), K3->one()});
        FE u = E->u_gen();
        FE w = embed(K3->zeta(), E);
        CHECK(u.pow(3) == E->from_rat(2));
        CHECK((w * u).pow(3) == E->from_rat(2));
        CHECK((w * w * u).pow(3) == E->from_rat(2));
    }
    SUBCASE("u^2+u+1 over Q(zeta_3) is rejected") {
        auto K3 = Tower::cyclotomic(3);
        CHECK_THROWS_AS(K3->extended({K3->one(), K3->one(), K3->one()}), Error);
    }
}

TEST_CASE("factorization over towers") {
    SUBCASE("x^2+x+1 splits over Q(zeta_3)") {
        auto K3 = Tower::cyclotomic(3);
        KPoly f(K3, {K3->one(), K3->one(), K3->one()});
        auto fac = factor_k(f);
        REQUIRE(fac.factors.size() == 2);
        std::vector<FE> roots = roots_in_tower(f);
        REQUIRE(roots.size() == 2);
        CHECK(((roots[0] == K3->zeta() && roots[1] == K3->zeta_power(2)) ||
               (roots[1] == K3->zeta() && roots[0] == K3->zeta_power(2))));
    }
    SUBCASE("x^2+1 irreducible over Q(zeta_3)") {
        auto K3 = Tower::cyclotomic(3);
        KPoly f(K3, {K3->one(), K3->zero(), K3->one()});
        CHECK(kpoly_irreducible(f) == Irreducibility::Yes);
    }
    SUBCASE("x^2-2 splits over Q(sqrt2)") {
        auto Q = Tower::rationals();
        auto E = Q->extended({Q->from_rat(-2), Q->zero(), Q->one()});
        KPoly f(E, {E->from_rat(-2), E->zero(), E->one()});
        auto roots = roots_in_tower(f);
        REQUIRE(roots.size() == 2);
        CHECK(roots[0] == -E->u_gen());
        CHECK(roots[1] == E->u_gen());
    }
    SUBCASE("x^7-1 over Q(zeta_7) fully splits") {
        auto K7 = Tower::cyclotomic(7);
        std::vector<FE> c(8, K7->zero());
        c[0] = K7->from_rat(-1);
        c[7] = K7->one();
        KPoly f(K7, c);
        auto fac = factor_k(f, 64);
        int linear = 0;
        for (auto& g : fac.factors)
            if (g.poly.degree() == 1) ++linear;
        CHECK(linear == 7);
    }
    SUBCASE("degree cap reports Unknown") {
        auto K7 = Tower::cyclotomic(7);
        std::vector<FE> c(8, K7->zero());
        c[0] = K7->zeta();
        c[1] = K7->one();
        c[7] = K7->one();
        KPoly f(K7, c);
        CHECK(kpoly_irreducible(f, 24) == Irreducibility::Unknown);
    }
}

TEST_CASE("squarefree and resultant over towers") {
    auto K3 = Tower::cyclotomic(3);
    FE z = K3->zeta();
    KPoly lin1(K3, {-z, K3->one()});
    KPoly lin2(K3, {K3->from_rat(1), K3->one()});
    KPoly f = lin1 * lin1 * lin2;
    auto sq = squarefree_k(f);
    REQUIRE(sq.parts.size() == 2);
    CHECK_FALSE(resultant_k(lin1, lin2).is_zero());
    CHECK(resultant_k(lin1, lin1).is_zero());
}
