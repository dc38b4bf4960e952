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

#include "dpa/germ.hpp"

using namespace dpa;

static CurveGerm G(const std::string& s) { return germ_from_string(s, Tower::rationals()); }

static Rat lct_of(const std::string& s, long num = 1, long den = 1) {
    auto res = resolve_and_lct({{G(s), rat(num, den)}});
    return res.lct;
}

TEST_CASE("classification normal forms") {
    CHECK(classify_germ(G("y^2 - x^2")).tag == GermClass::Tag::Ak);
    CHECK(classify_germ(G("y^2 - x^2")).k == 1);
    CHECK(classify_germ(G("y^2 - x^3")).k == 2);
    CHECK(classify_germ(G("y^2 - x^4")).k == 3);
    CHECK(classify_germ(G("y^2 - x^5")).k == 4);
    CHECK(classify_germ(G("x^3 + y^3")).tag == GermClass::Tag::Ordinary);
    CHECK(classify_germ(G("x^3 + y^3")).multiplicity == 3);
    CHECK(classify_germ(G("x + y^2")).tag == GermClass::Tag::Smooth);
    CHECK(classify_germ(G("x*y*(x+y)")).tag == GermClass::Tag::Ordinary);
    CHECK(classify_germ(G("y*(y - x^2)")).tag == GermClass::Tag::Ak); // tacnodal pair
    CHECK(classify_germ(G("y*(y - x^2)")).k == 3);
    CHECK(classify_germ(G("x^2*y")).tag == GermClass::Tag::Other); // non-reduced
}

TEST_CASE("newton polygon lct") {
    auto nl = [&](const std::string& s) {
        auto r = newton_lct(G(s));
        REQUIRE(r.ok);
        return r.lct;
    };
    CHECK(nl("x*y") == 1);
    CHECK(nl("x^2 + y^3") == rat(5, 6));
    CHECK(nl("x^2 + y^4") == rat(3, 4));
    CHECK(nl("x^3 + y^3") == rat(2, 3));
    CHECK(nl("x^2 + y^5") == rat(7, 10));
    CHECK(nl("x^3 + y^4") == rat(7, 12));
    CHECK(nl("x + y^5") == 1); // smooth
    CHECK(nl("y*x^2 + y^4") == rat(5, 8)); // cusp plus transverse line
    SUBCASE("degenerate face reported") {
        auto r = newton_lct(G("(x + y)^2"));
        CHECK_FALSE(r.ok);
        CHECK(!r.reason.empty());
    }
}

TEST_CASE("resolution lct agrees with the newton oracle") {
    // acceptance set: {xy, x^2+y^3, x^2+y^4, x^3+y^3, x^2+y^5, x^3+y^4}
    std::vector<std::pair<std::string, Rat>> cases = {
        {"x*y", rat(1)},        {"x^2 + y^3", rat(5, 6)}, {"x^2 + y^4", rat(3, 4)},
        {"x^3 + y^3", rat(2, 3)}, {"x^2 + y^5", rat(7, 10)}, {"x^3 + y^4", rat(7, 12)},
    };
    for (auto& [s, expect] : cases) {
        CAPTURE(s);
        auto nr = newton_lct(G(s));
        REQUIRE(nr.ok);
        CHECK(nr.lct == expect);
        CHECK(lct_of(s) == expect);
    }
}

TEST_CASE("resolution details") {
    SUBCASE("single cusp has depth-3 tree") {
        auto res = resolve_and_lct({{G("x^2 + y^3"), rat(1)}});
        CHECK(res.lct == rat(5, 6));
        CHECK(res.tree.size() == 3);
        // discrepancy/multiplicity pairs (1,2),(2,3),(4,6)
        std::vector<std::pair<int, Rat>> pairs;
        for (auto& n : res.tree) pairs.push_back({n.discrepancy, n.mult});
        std::sort(pairs.begin(), pairs.end());
        CHECK(pairs[0] == std::make_pair(1, Rat(2)));
        CHECK(pairs[1] == std::make_pair(2, Rat(3)));
        CHECK(pairs[2] == std::make_pair(4, Rat(6)));
    }
    SUBCASE("node resolves in one blow-up") {
        auto res = resolve_and_lct({{G("y^2 - x^2"), rat(1)}});
        CHECK(res.lct == 1);
        CHECK(res.tree.size() == 1);
    }
    SUBCASE("tree certificate revalidates") {
        auto res = resolve_and_lct({{G("x^3 + y^4"), rat(1)}});
        for (auto& n : res.tree) {
            int expect = 1;
            for (int p : n.parents) expect += res.tree[(size_t)p].discrepancy;
            CHECK(n.discrepancy == expect);
        }
    }
    SUBCASE("depth cap reports") {
        CHECK_THROWS_AS(resolve_and_lct({{G("x^2 + y^3"), rat(1)}}, 2), Error);
    }
}

TEST_CASE("lct invariance properties") {
    SUBCASE("coordinate changes") {
        // apply x -> x + 2y, y -> y - x to the cusp and to the tacnode
        auto tw = Tower::rationals();
        auto ring = make_ring({"x", "y"}, {1, 1});
        for (std::string s : {"x^2 + y^3", "x^2 + y^4", "x^3 + y^3"}) {
            CurveGerm g = G(s);
            Rat base = resolve_and_lct({{g, rat(1)}}).lct;
            std::vector<WPoly> sub = {parse_wpoly("x + 2*y", ring, tw),
                                      parse_wpoly("y - x", ring, tw)};
            CurveGerm h = g;
            h.poly = g.poly.substitute(sub, false);
            CHECK(resolve_and_lct({{h, rat(1)}}).lct == base);
            // multiply by a unit (1 + x)
            CurveGerm u = g;
            u.poly = g.poly * parse_wpoly("1 + x", ring, tw);
            // unit multiplication keeps the germ's local structure: same lct
            CHECK(resolve_and_lct({{u, rat(1)}}).lct == base);
        }
    }
    SUBCASE("powers scale lct") {
        for (std::string s : {"x^2 + y^3", "y^2 - x^2"}) {
            Rat base = lct_of(s);
            CurveGerm g = G(s);
            CurveGerm g2 = g, g3 = g;
            g2.poly = g.poly * g.poly;
            g3.poly = g.poly * g.poly * g.poly;
            CHECK(resolve_and_lct({{g2, rat(1)}}).lct == base / 2);
            CHECK(resolve_and_lct({{g3, rat(1)}}).lct == base / 3);
        }
    }
    SUBCASE("A_k lct formula") {
        for (int k = 1; k <= 6; ++k) {
            std::string s = "y^2 - x^" + std::to_string(k + 1);
            CurveGerm g = G(s);
            auto cls = classify_germ(g);
            CHECK(cls.k == k);
            Rat expect = rat(1, 2) + rat(1, k + 1);
            if (expect > 1) expect = 1;
            CHECK(resolve_and_lct({{g, rat(1)}}).lct == std::min(Rat(1), expect));
        }
    }
    SUBCASE("multiplicity bounds 1/m <= lct <= 2/m") {
        for (std::string s : {"x^2 + y^3", "x^3 + y^3", "x^3 + y^4", "x^2+y^5"}) {
            CurveGerm g = G(s);
            int m = g.multiplicity();
            Rat l = resolve_and_lct({{g, rat(1)}}).lct;
            CHECK(l >= rat(1, m));
            CHECK(l <= rat(2, m));
        }
    }
}

TEST_CASE("configurations of several germs") {
    SUBCASE("cusp plus transverse smooth branch at 5/8") {
        auto res = resolve_and_lct({{G("y^2 - x^3"), rat(1)}, {G("x"), rat(1)}});
        CHECK(res.lct == rat(5, 8));
        // matches the quasi-homogeneous weight computation for x(y^2-x^3)
        CHECK(lct_of("x*(y^2 - x^3)") == rat(5, 8));
    }
    SUBCASE("three concurrent lines") {
        auto res = resolve_and_lct(
            {{G("x"), rat(1)}, {G("y"), rat(1)}, {G("x + y"), rat(1)}});
        CHECK(res.lct == rat(2, 3));
    }
    SUBCASE("six concurrent lines at coefficient 1 each") {
        std::vector<std::pair<CurveGerm, Rat>> comp;
        comp.push_back({G("x"), rat(1)});
        comp.push_back({G("y"), rat(1)});
        for (int c = 1; c <= 4; ++c)
            comp.push_back({G("x + " + std::to_string(c) + "*y"), rat(1)});
        CHECK(resolve_and_lct(comp).lct == rat(2, 6));
    }
    SUBCASE("fractional coefficients") {
        // (X, (5/8)(cusp + line)) is exactly log canonical
        auto res = resolve_and_lct({{G("y^2 - x^3"), rat(5, 8)}, {G("x"), rat(5, 8)}});
        CHECK(res.lct == 1);
    }
}

TEST_CASE("germ extraction at surface points") {
    SUBCASE("double root of the sextic branch data gives a double germ") {
        auto r = make_ring({"x", "y", "z", "t"}, {1, 1, 2, 3});
        auto tw = Tower::rationals();
        // f4 nonzero at the double root keeps the surface smooth there
        Surface X = Surface::sextic_cone(
            parse_wpoly("t^2 - z^3 - z*(x^4 + x^2*y^2 + y^4) - x^2*(x^4 + y^4)", r, tw));
        REQUIRE(X.is_smooth().smooth);
        SurfacePoint p = X.normalize_point({tw->zero(), tw->one(), tw->zero(), tw->zero()});
        REQUIRE(X.contains(p));
        CurveGerm g = extract_germ(X, parse_wpoly("z", X.ring(), tw), p, 10);
        CHECK(g.multiplicity() == 2);
    }
    SUBCASE("smooth plane quartic point gives a smooth germ") {
        auto K7 = Tower::cyclotomic(7);
        Surface P2 = Surface::p2(K7);
        SurfacePoint p = P2.normalize_point({K7->one(), K7->zero(), K7->zero()});
        CurveGerm g =
            extract_germ(P2, parse_wpoly("x^3*y + y^3*z + z^3*x", P2.ring(), K7), p, 8);
        CHECK(g.multiplicity() == 1);
        CHECK(classify_germ(g).tag == GermClass::Tag::Smooth);
    }
}

TEST_CASE("truncated germs stabilize") {
    // simulate a truncated extraction of a cusp
    auto g = G("y^2 - x^3 + x^9");
    g.exact = false;
    g.trunc_order = 8;
    auto res = resolve_and_lct({{g, rat(1)}});
    CHECK(res.lct == rat(5, 6));
}
