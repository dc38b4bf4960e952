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

#include "dpa/surface.hpp"

using namespace dpa;

static Surface sextic(const std::string& eq, TowerPtr tw = Tower::rationals()) {
    auto r = make_ring({"x", "y", "z", "t"}, {1, 1, 2, 3});
    return Surface::sextic_cone(parse_wpoly(eq, r, tw));
}

static Surface quartic(const std::string& eq, TowerPtr tw = Tower::rationals()) {
    auto r = make_ring({"x", "y", "z", "t"}, {1, 1, 1, 2});
    return Surface::quartic_double_plane(parse_wpoly(eq, r, tw));
}

TEST_CASE("degrees") {
    CHECK(sextic("t^2 - z^3 - x*y*(x^4 - y^4)").degree() == 1);
    CHECK(quartic("t^2 - x^4 - y^4 - z^4").degree() == 2);
    CHECK(Surface::p2(Tower::rationals()).degree() == 9);
    CHECK(Surface::p1xp1(Tower::rationals()).degree() == 8);
    CHECK(Surface::lookup(5).degree() == 5);
}

TEST_CASE("smoothness") {
    SUBCASE("fermat cubic is smooth") {
        auto r = make_ring({"x", "y", "z", "t"}, {1, 1, 1, 1});
        auto F = parse_wpoly("x^3 + y^3 + z^3 + t^3", r, Tower::rationals());
        CHECK(Surface::cubic(F).is_smooth().smooth);
    }
    SUBCASE("paper dihedral sextic is smooth") {
        Surface X = sextic("t^2 - z^3 - z*x^2*y^2 - x^6 - y^6 - x^3*y^3");
        CHECK(X.is_smooth().smooth);
    }
    SUBCASE("sextic with vanishing degree-6 part is singular") {
        Surface X = sextic("t^2 - z^3 - z*x^2*y^2");
        auto rep = X.is_smooth();
        CHECK_FALSE(rep.smooth);
        REQUIRE(rep.witness.has_value());
        CHECK(X.equations()[0].eval(rep.witness->coords).is_zero());
    }
    SUBCASE("octahedral sextic is smooth") {
        CHECK(sextic("t^2 - z^3 - x*y*(x^4 - y^4)").is_smooth().smooth);
    }
    SUBCASE("nodal cubic is singular") {
        auto r = make_ring({"x", "y", "z", "t"}, {1, 1, 1, 1});
        auto F = parse_wpoly("x*y*z - t^3 + x^3 + y^3 + z^3 - x^3", r, Tower::rationals());
        // x*y*z + y^3 + z^3 - t^3: singular at [1:0:0:0]
        auto rep = Surface::cubic(F).is_smooth();
        CHECK_FALSE(rep.smooth);
    }
    SUBCASE("diagonal quadric pair") {
        auto r = make_ring({"x0", "x1", "x2", "x3", "x4"}, {1, 1, 1, 1, 1});
        auto tw = Tower::rationals();
        auto q1 = parse_wpoly("x0^2 + x1^2 + x2^2 + x3^2 + x4^2", r, tw);
        auto q2 = parse_wpoly("x1^2 + 2*x2^2 + 3*x3^2 + 4*x4^2", r, tw);
        CHECK(Surface::quadric_pair(q1, q2).is_smooth().smooth);
        auto q3 = parse_wpoly("x0^2 + x1^2 + 2*x2^2 + 3*x3^2 + 4*x4^2", r, tw);
        CHECK_FALSE(Surface::quadric_pair(q1, q3).is_smooth().smooth);
    }
}

TEST_CASE("smoothness is invariant under coordinate changes") {
    auto r = make_ring({"x", "y", "z", "t"}, {1, 1, 2, 3});
    auto tw = Tower::rationals();
    WPoly eq = parse_wpoly("t^2 - z^3 - z*x^2*y^2 - x^6 - y^6 - x^3*y^3", r, tw);
    Surface X = Surface::sextic_cone(eq);
    REQUIRE(X.is_smooth().smooth);
    // invertible weighted change x -> x + y
    std::vector<WPoly> change = {parse_wpoly("x + y", r, tw), WPoly::variable(r, tw, 1),
                                 WPoly::variable(r, tw, 2), WPoly::variable(r, tw, 3)};
    Surface Y = Surface::sextic_cone(eq.substitute(change));
    CHECK(Y.is_smooth().smooth);
    // and a singular input stays singular
    WPoly bad = parse_wpoly("t^2 - z^3 - z*x^2*y^2", r, tw);
    Surface Z1 = Surface::sextic_cone(bad);
    Surface Z2 = Surface::sextic_cone(bad.substitute(change));
    CHECK_FALSE(Z1.is_smooth().smooth);
    CHECK_FALSE(Z2.is_smooth().smooth);
}

TEST_CASE("anticanonical bases") {
    Surface X1 = sextic("t^2 - z^3 - z*x^2*y^2 - x^6 - y^6 - x^3*y^3");
    Surface X2 = quartic("t^2 - x^4 - y^4 - z^4 - 2*x^2*y^2 - 3*x^2*z^2 - 5*y^2*z^2");
    auto rc = make_ring({"x", "y", "z", "t"}, {1, 1, 1, 1});
    Surface X3 = Surface::cubic(parse_wpoly("x^3 + y^3 + z^3 + t^3", rc, Tower::rationals()));
    auto rp = make_ring({"x0", "x1", "x2", "x3", "x4"}, {1, 1, 1, 1, 1});
    Surface X4 = Surface::quadric_pair(
        parse_wpoly("x0^2 + x1^2 + x2^2 + x3^2 + x4^2", rp, Tower::rationals()),
        parse_wpoly("x1^2 + 2*x2^2 + 3*x3^2 + 4*x4^2", rp, Tower::rationals()));
    Surface P2 = Surface::p2(Tower::rationals());
    Surface PP = Surface::p1xp1(Tower::rationals());

    SUBCASE("dimension formula for n <= 4") {
        for (int n = 1; n <= 4; ++n) {
            CHECK((int)X1.anticanonical_basis(n).size() == Surface::anticanonical_dim(1, n));
            CHECK((int)X2.anticanonical_basis(n).size() == Surface::anticanonical_dim(2, n));
            CHECK((int)X3.anticanonical_basis(n).size() == Surface::anticanonical_dim(3, n));
            CHECK((int)X4.anticanonical_basis(n).size() == Surface::anticanonical_dim(4, n));
            CHECK((int)P2.anticanonical_basis(n).size() == Surface::anticanonical_dim(9, n));
            CHECK((int)PP.anticanonical_basis(n).size() == Surface::anticanonical_dim(8, n));
        }
    }
    SUBCASE("named small cases") {
        auto b1 = X1.anticanonical_basis(1); // {x, y}
        REQUIRE(b1.size() == 2);
        auto b2 = X1.anticanonical_basis(2); // {x^2, xy, y^2, z}
        REQUIRE(b2.size() == 4);
        CHECK(X2.anticanonical_basis(2).size() == 7);
    }
    SUBCASE("reduction kills t^2") {
        auto rs = X1.ring();
        WPoly t2 = parse_wpoly("t^2", rs, X1.tower());
        WPoly red = X1.reduce(t2);
        CHECK(red.degree_in(3) == 0);
        // t^2 == z^3 + z f4 + f6 on X
        WPoly expect = parse_wpoly("z^3 + z*x^2*y^2 + x^6 + y^6 + x^3*y^3", rs, X1.tower());
        CHECK(red == expect);
    }
}

TEST_CASE("points and normalization") {
    Surface X = sextic("t^2 - z^3 - x*y*(x^4 - y^4)");
    auto tw = X.tower();
    SUBCASE("base point normal form") {
        auto p = X.normalize_point({tw->zero(), tw->zero(), tw->from_rat(4), tw->from_rat(-8)});
        // lambda = z/t = -1/2: z -> z^3/t^2 = 1, t -> 1
        CHECK(p.coords[2] == tw->one());
        CHECK(p.coords[3] == tw->one());
        CHECK(X.contains(p));
    }
    SUBCASE("weight-1 normalization") {
        auto p = X.normalize_point({tw->from_rat(2), tw->from_rat(4), tw->zero(), tw->zero()});
        CHECK(p.coords[0] == tw->one());
        CHECK(p.coords[1] == tw->from_rat(2));
    }
}

TEST_CASE("local charts") {
    SUBCASE("plane chart at a coordinate point") {
        Surface P2 = Surface::p2(Tower::rationals());
        auto tw = P2.tower();
        SurfacePoint p = P2.normalize_point({tw->zero(), tw->zero(), tw->one()});
        Chart ch = P2.local_chart(p, 6);
        CHECK(ch.param_vars.size() == 2);
        WPoly germ = P2.germ_of_section(
            parse_wpoly("x^2 + y^3", P2.ring(), tw), ch);
        auto gr = ch.germ_ring;
        CHECK(germ == parse_wpoly("s1^2 + s2^3", gr, tw));
    }
    SUBCASE("sextic base point series") {
        Surface X = sextic("t^2 - z^3 - z*x^2*y^2 - x^6 - y^6 - x^3*y^3");
        auto tw = X.tower();
        SurfacePoint p = X.normalize_point({tw->zero(), tw->zero(), tw->one(), tw->one()});
        REQUIRE(X.contains(p));
        Chart ch = X.local_chart(p, 7);
        // residual of the equation vanishes through order 7
        WPoly res = X.equations()[0].substitute(ch.images, false).truncate_total_degree(7);
        CHECK(res.is_zero());
        // t = 1 + (f4 + f6)/2 + O(8): check the quadratic term 1/2 s1^2 s2^2 appears
        const WPoly& tser = ch.images[3];
        Expo e(2, 0);
        CHECK(tser.coeff({0, 0}) == tw->one());
        CHECK(tser.coeff({2, 2}) == tw->from_rat(rat(1, 2)));
        CHECK(tser.coeff({6, 0}) == tw->from_rat(rat(1, 2)));
    }
    SUBCASE("quartic ramification point chart") {
        Surface X = quartic("t^2 - x^4 - y^4 - z^4 - 2*x^2*y^2 - 3*x^2*z^2 - 5*y^2*z^2");
        auto tw = X.tower();
        // need a point on t=0: x^4+y^4+z^4+... = 0 has no rational point; use
        // a smooth off-ramification point instead: [0:0:1:t] with t^2 = 1
        SurfacePoint p = X.normalize_point({tw->zero(), tw->zero(), tw->one(), tw->from_rat(-1)});
        REQUIRE(X.contains(p));
        Chart ch = X.local_chart(p, 6);
        WPoly res = X.equations()[0].substitute(ch.images, false).truncate_total_degree(6);
        CHECK(res.is_zero());
    }
    SUBCASE("quadric pair chart solves two equations") {
        auto rp = make_ring({"x0", "x1", "x2", "x3", "x4"}, {1, 1, 1, 1, 1});
        auto tw = Tower::rationals();
        Surface X = Surface::quadric_pair(
            parse_wpoly("x0^2 - x1^2 + 2*x2^2 - 2*x3^2", rp, tw),
            parse_wpoly("x0^2 - x2^2 + 5*x3^2 - 5*x4^2", rp, tw));
        SurfacePoint p = X.normalize_point(
            {tw->one(), tw->one(), tw->one(), tw->one(), tw->one()});
        REQUIRE(X.contains(p));
        Chart ch = X.local_chart(p, 5);
        for (const auto& eq : X.equations())
            CHECK(eq.substitute(ch.images, false).truncate_total_degree(5).is_zero());
    }
}
