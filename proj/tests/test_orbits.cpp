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

#include "dpa/orbits.hpp"

using namespace dpa;

namespace {

PAut map_of(const Surface& X, const std::vector<std::string>& images) {
    PAut g;
    for (const auto& s : images) g.images.push_back(parse_wpoly(s, X.ring(), X.tower()));
    return g;
}

Surface klein_cover() {
    auto K7 = Tower::cyclotomic(7);
    auto r = make_ring({"x", "y", "z", "t"}, {1, 1, 1, 2});
    return Surface::quartic_double_plane(parse_wpoly("t^2 - x^3*y - y^3*z - z^3*x", r, K7));
}

FiniteGroup klein42(const Surface& X) {
    return FiniteGroup::closure(
        X, {map_of(X, {"zeta(7)*x", "zeta(7)^4*y", "zeta(7)^2*z", "t"}),
            map_of(X, {"y", "z", "x", "t"}), map_of(X, {"x", "y", "z", "-t"})});
}

} // namespace

TEST_CASE("orbit lengths on the Klein cover") {
    Surface X = klein_cover();
    auto tw = X.tower();
    auto G = klein42(X);
    SurfacePoint p = X.normalize_point({tw->one(), tw->zero(), tw->zero(), tw->zero()});
    auto rec = orbit_of(X, G, p);
    CHECK(rec.length == 3);
    CHECK(rec.stabilizer_order == 14);
    CHECK(G.size() % rec.length == 0);
    SUBCASE("orbits of length at most 3 are exactly the coordinate triangle") {
        auto scan = orbits_of_length_at_most(X, G, 3);
        CHECK(scan.obstructions.empty());
        REQUIRE(scan.orbits.size() >= 1);
        bool found3 = false;
        for (const auto& o : scan.orbits) {
            CHECK(G.size() % o.length == 0);
            if (o.length == 3) found3 = true;
            // closure under the action
            for (int i = 0; i < G.size(); ++i) {
                SurfacePoint q = G.elem(i).apply(X, o.points[0]);
                CHECK(std::find(o.points.begin(), o.points.end(), q) != o.points.end());
            }
        }
        CHECK(found3);
    }
}

TEST_CASE("fixed points") {
    SUBCASE("tau fixes the ramification curve") {
        Surface X = klein_cover();
        auto G = FiniteGroup::closure(X, {map_of(X, {"x", "y", "z", "-t"})});
        CHECK(has_fixed_point(X, G));
    }
    SUBCASE("sign group on the pair has none") {
        auto K3 = Tower::cyclotomic(3);
        auto r = make_ring({"x0", "x1", "x2", "x3", "x4"}, {1, 1, 1, 1, 1});
        Surface X = Surface::quadric_pair(
            parse_wpoly("x0^2 + zeta(3)*x1^2 + zeta(3)^2*x2^2 + x3^2", r, K3),
            parse_wpoly("x0^2 + zeta(3)^2*x1^2 + zeta(3)*x2^2 + x4^2", r, K3));
        std::vector<PAut> gens;
        for (int i = 1; i <= 4; ++i) {
            std::vector<std::string> imgs = {"x0", "x1", "x2", "x3", "x4"};
            imgs[(size_t)i] = "-" + imgs[(size_t)i];
            gens.push_back(map_of(X, imgs));
        }
        auto G = FiniteGroup::closure(X, gens);
        CHECK_FALSE(has_fixed_point(X, G));
        auto scan = orbits_of_length_at_most(X, G, 1);
        CHECK(scan.orbits.empty());
        CHECK(scan.fixed_curves.empty());
    }
    SUBCASE("trivial group fixes everything") {
        Surface P2 = Surface::p2(Tower::rationals());
        auto G = FiniteGroup::closure(P2, {});
        CHECK(has_fixed_point(P2, G));
        auto scan = orbits_of_length_at_most(P2, G, 2);
        CHECK(scan.all_points);
    }
}

TEST_CASE("suborbit structure") {
    Surface X = klein_cover();
    auto tw = X.tower();
    auto G42 = klein42(X);
    auto G21 = FiniteGroup::closure(
        X, {map_of(X, {"zeta(7)*x", "zeta(7)^4*y", "zeta(7)^2*z", "t"}),
            map_of(X, {"y", "z", "x", "t"})});
    SurfacePoint p = X.normalize_point({tw->one(), tw->zero(), tw->zero(), tw->zero()});
    auto big = orbit_of(X, G42, p);
    auto small = orbit_of(X, G21, p);
    // every G-orbit is a union of H-orbits
    for (const auto& q : small.points)
        CHECK(std::find(big.points.begin(), big.points.end(), q) != big.points.end());
    CHECK(big.length % small.length == 0);
}
