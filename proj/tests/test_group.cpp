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

#include "dpa/group.hpp"

using namespace dpa;

namespace {

PAut map_of(const Surface& X, const std::vector<std::string>& images) {
    PAut g;
    for (const auto& s : images) g.images.push_back(parse_wpoly(s, X.ring(), X.tower()));
    return g;
}

Surface klein_quartic_cover() {
    auto K7 = Tower::cyclotomic(7);
    auto r = make_ring({"x", "y", "z", "t"}, {1, 1, 1, 2});
    return Surface::quartic_double_plane(
        parse_wpoly("t^2 - x^3*y - y^3*z - z^3*x", r, K7));
}

Surface eps3_pair() {
    auto K3 = Tower::cyclotomic(3);
    auto r = make_ring({"x0", "x1", "x2", "x3", "x4"}, {1, 1, 1, 1, 1});
    return Surface::quadric_pair(
        parse_wpoly("x0^2 + zeta(3)*x1^2 + zeta(3)^2*x2^2 + x3^2", r, K3),
        parse_wpoly("x0^2 + zeta(3)^2*x1^2 + zeta(3)*x2^2 + x4^2", r, K3));
}

} // namespace

TEST_CASE("closure orders") {
    SUBCASE("tau on a sextic has order 2") {
        auto r = make_ring({"x", "y", "z", "t"}, {1, 1, 2, 3});
        Surface X = Surface::sextic_cone(
            parse_wpoly("t^2 - z^3 - z*x^2*y^2 - x^6 - y^6 - x^3*y^3", r, Tower::rationals()));
        auto G = FiniteGroup::closure(X, {map_of(X, {"x", "y", "z", "-t"})});
        CHECK(G.size() == 2);
    }
    SUBCASE("sign flips on the quadric pair give Z2^4") {
        Surface X = eps3_pair();
        std::vector<PAut> gens;
        for (int i = 1; i <= 4; ++i) {
            std::vector<std::string> imgs = {"x0", "x1", "x2", "x3", "x4"};
            imgs[(size_t)i] = "-" + imgs[(size_t)i];
            gens.push_back(map_of(X, imgs));
        }
        auto G = FiniteGroup::closure(X, gens);
        CHECK(G.size() == 16);
        CHECK(G.is_abelian());
        CHECK(G.structure_label() == "Z2^4");
        CHECK(G.linear_characters().size() == 16);
    }
    SUBCASE("Klein stabilizer group has order 42") {
        Surface X = klein_quartic_cover();
        auto G = FiniteGroup::closure(
            X, {map_of(X, {"zeta(7)*x", "zeta(7)^4*y", "zeta(7)^2*z", "t"}),
                map_of(X, {"y", "z", "x", "t"}), map_of(X, {"x", "y", "z", "-t"})});
        CHECK(G.size() == 42);
        CHECK_FALSE(G.is_abelian());
        CHECK(G.linear_characters().size() == 6); // abelianization Z6
        CHECK(G.structure_label() == "Z2x(Z7:Z3)");
    }
    SUBCASE("generator permutation yields the same element set") {
        Surface X = klein_quartic_cover();
        auto g1 = map_of(X, {"zeta(7)*x", "zeta(7)^4*y", "zeta(7)^2*z", "t"});
        auto g2 = map_of(X, {"y", "z", "x", "t"});
        auto A = FiniteGroup::closure(X, {g1, g2});
        auto B = FiniteGroup::closure(X, {g2, g1});
        REQUIRE(A.size() == B.size());
        for (int i = 0; i < A.size(); ++i) CHECK(B.index_of(A.elem(i)) >= 0);
    }
    SUBCASE("non-preserving map rejected") {
        Surface X = klein_quartic_cover();
        CHECK_THROWS_AS(FiniteGroup::closure(X, {map_of(X, {"y", "x", "z", "t"})}), Error);
    }
}

TEST_CASE("order-21 subgroup characters") {
    Surface X = klein_quartic_cover();
    auto G = FiniteGroup::closure(
        X, {map_of(X, {"zeta(7)*x", "zeta(7)^4*y", "zeta(7)^2*z", "t"}),
            map_of(X, {"y", "z", "x", "t"})});
    CHECK(G.size() == 21);
    CHECK(G.linear_characters().size() == 3);
    // Lagrange for every element order
    for (int i = 0; i < G.size(); ++i) CHECK(G.size() % G.element_order(i) == 0);
}

TEST_CASE("subgroups of bounded index") {
    SUBCASE("Z2^4 has 15 subgroups of index 2") {
        Surface X = eps3_pair();
        std::vector<PAut> gens;
        for (int i = 1; i <= 4; ++i) {
            std::vector<std::string> imgs = {"x0", "x1", "x2", "x3", "x4"};
            imgs[(size_t)i] = "-" + imgs[(size_t)i];
            gens.push_back(map_of(X, imgs));
        }
        auto G = FiniteGroup::closure(X, gens);
        CHECK(G.subgroups_of_index(1).size() == 1);
        CHECK(G.subgroups_of_index(2).size() == 15);
    }
    SUBCASE("order-42 group has the order-14 subgroup at index 3") {
        Surface X = klein_quartic_cover();
        auto G = FiniteGroup::closure(
            X, {map_of(X, {"zeta(7)*x", "zeta(7)^4*y", "zeta(7)^2*z", "t"}),
                map_of(X, {"y", "z", "x", "t"}), map_of(X, {"x", "y", "z", "-t"})});
        auto subs = G.subgroups_of_index(3);
        REQUIRE_FALSE(subs.empty());
        bool found14 = false;
        for (const auto& H : subs) {
            CHECK(G.size() % (int)H.size() == 0); // Lagrange
            CHECK((int)H.size() * 3 == G.size());
            // check it is closed
            auto closed = G.subgroup_closure(H);
            CHECK(closed.size() == H.size());
            if (H.size() == 14) found14 = true;
        }
        CHECK(found14);
    }
}

TEST_CASE("fixed loci") {
    SUBCASE("tau fixes the ramification curve pointwise") {
        Surface X = klein_quartic_cover();
        auto G = FiniteGroup::closure(X, {map_of(X, {"x", "y", "z", "-t"})});
        std::vector<int> all = {0, 1};
        auto fix = fixed_locus(X, G, all);
        REQUIRE(fix.curve_conditions.size() == 1);
        REQUIRE(fix.curve_conditions[0].size() == 1);
        CHECK(fix.curve_conditions[0][0] == parse_wpoly("t", X.ring(), X.tower()));
    }
    SUBCASE("diag(1,1,-1) on the plane fixes a line and a point") {
        Surface P2 = Surface::p2(Tower::rationals());
        auto G = FiniteGroup::closure(P2, {map_of(P2, {"x", "y", "-z"})});
        auto fix = fixed_locus(P2, G, {G.identity() == 0 ? 1 : 0});
        CHECK(fix.curve_conditions.size() == 1); // the line z = 0
        REQUIRE(fix.points.size() == 1);         // [0:0:1]
        CHECK(fix.points[0].coords[2] == P2.tower()->one());
        CHECK(fix.points[0].coords[0].is_zero());
    }
    SUBCASE("sign group on the pair has no fixed points") {
        Surface X = eps3_pair();
        std::vector<PAut> gens;
        for (int i = 1; i <= 4; ++i) {
            std::vector<std::string> imgs = {"x0", "x1", "x2", "x3", "x4"};
            imgs[(size_t)i] = "-" + imgs[(size_t)i];
            gens.push_back(map_of(X, imgs));
        }
        auto G = FiniteGroup::closure(X, gens);
        auto fix = fixed_locus(X, G, G.generator_indices());
        CHECK(fix.points.empty());
        CHECK(fix.curve_conditions.empty());
        CHECK(fix.obstructions.empty());
    }
    SUBCASE("orbit arithmetic on the Klein cover") {
        Surface X = klein_quartic_cover();
        auto tw = X.tower();
        auto G = FiniteGroup::closure(
            X, {map_of(X, {"zeta(7)*x", "zeta(7)^4*y", "zeta(7)^2*z", "t"}),
                map_of(X, {"y", "z", "x", "t"}), map_of(X, {"x", "y", "z", "-t"})});
        SurfacePoint p = X.normalize_point({tw->one(), tw->zero(), tw->zero(), tw->zero()});
        REQUIRE(X.contains(p));
        std::set<SurfacePoint> orbit;
        for (int i = 0; i < G.size(); ++i) orbit.insert(G.elem(i).apply(X, p));
        CHECK(orbit.size() == 3);
    }
}
