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

#include "dpa/invariant.hpp"

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

/// exact semi-invariance of a section under every group element
bool semi_invariant_exact(const Surface& X, const FiniteGroup& G, const WPoly& s) {
    for (int i = 0; i < G.size(); ++i) {
        WPoly img = X.reduce(G.elem(i).pullback(s));
        if (img.is_zero()) return false;
        FE ratio = img.leading_coeff() * s.leading_coeff().inverse();
        if (!(img == s.retower(img.tower()).scaled(ratio))) return false;
    }
    return true;
}

} // namespace

TEST_CASE("induced matrices") {
    SUBCASE("tau acts as identity on the degree-1 sextic basis") {
        auto r = make_ring({"x", "y", "z", "t"}, {1, 1, 2, 3});
        Surface X = Surface::sextic_cone(
            parse_wpoly("t^2 - z^3 - z*x^2*y^2 - x^6 - y^6 - x^3*y^3", r, Tower::rationals()));
        auto G = FiniteGroup::closure(X, {map_of(X, {"x", "y", "z", "-t"})});
        auto rep = induced_matrices(X, G, 1);
        REQUIRE(rep.basis.size() == 2);
        for (const auto& M : rep.matrices)
            CHECK(M == Matrix::identity(X.tower(), 2));
    }
    SUBCASE("tau negates the t-coordinate at level 2 on the quartic") {
        Surface X = klein_cover();
        auto G = FiniteGroup::closure(X, {map_of(X, {"x", "y", "z", "-t"})});
        auto rep = induced_matrices(X, G, 2);
        REQUIRE(rep.basis.size() == 7);
        // find the t column
        int tcol = -1;
        for (size_t i = 0; i < rep.basis.size(); ++i)
            if (rep.basis[i][3] == 1) tcol = (int)i;
        REQUIRE(tcol >= 0);
        int tau = -1;
        for (int i = 0; i < G.size(); ++i)
            if (i != G.identity()) tau = i;
        const Matrix& M = rep.matrices[(size_t)tau];
        CHECK(M.at(tcol, tcol) == X.tower()->from_rat(-1));
    }
    SUBCASE("plane cycle permutes quartic monomials") {
        Surface P2 = Surface::p2(Tower::rationals());
        auto G = FiniteGroup::closure(P2, {map_of(P2, {"y", "z", "x"})});
        auto basis = graded_monomials(*P2.ring(), 4);
        auto rep = induced_on_basis(P2, G, basis, 4);
        // image of x^3 y is y^3 z: check matrix column
        int from = -1, to = -1;
        for (size_t i = 0; i < basis.size(); ++i) {
            if (basis[i] == Expo{3, 1, 0}) from = (int)i;
            if (basis[i] == Expo{0, 3, 1}) to = (int)i;
        }
        REQUIRE(from >= 0);
        REQUIRE(to >= 0);
        int cyc = G.identity() == 0 ? 1 : 0;
        // pullback of x^3 y under (x->y, y->z, z->x) is y^3 z
        CHECK(rep.matrices[(size_t)cyc].at(to, from) == P2.tower()->one());
    }
}

TEST_CASE("invariant curves on the Klein double cover") {
    Surface X = klein_cover();
    auto G42 = FiniteGroup::closure(
        X, {map_of(X, {"zeta(7)*x", "zeta(7)^4*y", "zeta(7)^2*z", "t"}),
            map_of(X, {"y", "z", "x", "t"}), map_of(X, {"x", "y", "z", "-t"})});
    REQUIRE(G42.size() == 42);
    SUBCASE("no invariant curves at level 1") {
        auto scan = semi_invariant_lines(X, G42, 1);
        CHECK(scan.curves.empty());
        CHECK(scan.families.empty());
        CHECK(scan.complete);
    }
    SUBCASE("exactly the ramification section at level 2") {
        auto scan = semi_invariant_lines(X, G42, 2);
        REQUIRE(scan.curves.size() == 1);
        CHECK(scan.families.empty());
        CHECK(scan.curves[0].section == parse_wpoly("t", X.ring(), X.tower()));
        CHECK(semi_invariant_exact(X, G42, scan.curves[0].section));
    }
    SUBCASE("level 3 finds the coordinate triangle") {
        auto scan = semi_invariant_lines(X, G42, 3);
        REQUIRE(scan.curves.size() == 1);
        CHECK(scan.curves[0].section == parse_wpoly("x*y*z", X.ring(), X.tower()));
        CHECK(semi_invariant_exact(X, G42, scan.curves[0].section));
    }
    SUBCASE("monotonicity under the order-21 subgroup") {
        auto G21 = FiniteGroup::closure(
            X, {map_of(X, {"zeta(7)*x", "zeta(7)^4*y", "zeta(7)^2*z", "t"}),
                map_of(X, {"y", "z", "x", "t"})});
        auto scan42 = semi_invariant_lines(X, G42, 2);
        auto scan21 = semi_invariant_lines(X, G21, 2);
        for (const auto& c : scan42.curves) {
            bool found = false;
            for (const auto& d : scan21.curves)
                if (d.section == c.section) found = true;
            CHECK(found);
        }
    }
}

TEST_CASE("plane invariants of the order-21 group") {
    auto K7 = Tower::cyclotomic(7);
    Surface P2 = Surface::p2(K7);
    auto G = FiniteGroup::closure(
        P2, {map_of(P2, {"zeta(7)*x", "zeta(7)^4*y", "zeta(7)^2*z"}),
             map_of(P2, {"y", "z", "x"})});
    REQUIRE(G.size() == 21);
    SUBCASE("degrees 1 and 2 are empty") {
        CHECK(scan_system(P2, G, graded_monomials(*P2.ring(), 1), 1).curves.empty());
        CHECK(scan_system(P2, G, graded_monomials(*P2.ring(), 2), 2).curves.empty());
    }
    SUBCASE("degree 4 splits into three semi-invariant quartics") {
        auto scan = scan_system(P2, G, graded_monomials(*P2.ring(), 4), 4);
        CHECK(scan.families.empty());
        REQUIRE(scan.curves.size() == 3);
        WPoly klein = parse_wpoly("x^3*y + y^3*z + z^3*x", P2.ring(), K7);
        bool found = false;
        for (const auto& c : scan.curves)
            if (c.section == klein.retower(join_towers(klein.tower(), c.section.tower())))
                found = true;
        CHECK(found);
    }
}

TEST_CASE("pencil family on the dihedral sextic") {
    auto r = make_ring({"x", "y", "z", "t"}, {1, 1, 2, 3});
    auto K3 = Tower::cyclotomic(3);
    Surface X = Surface::sextic_cone(
        parse_wpoly("t^2 - z^3 - z*x^2*y^2 - x^6 - y^6 - x^3*y^3", r, K3));
    auto G = FiniteGroup::closure(
        X, {map_of(X, {"x", "zeta(3)*y", "zeta(3)*z", "t"}), map_of(X, {"y", "x", "z", "t"}),
            map_of(X, {"x", "y", "z", "-t"})});
    CHECK(G.size() == 12);
    auto scan = semi_invariant_lines(X, G, 2);
    // the invariant members form the whole pencil a*xy + b*z
    CHECK(scan.curves.empty());
    REQUIRE(scan.families.size() == 1);
    CHECK(scan.families[0].family_dim == 2);
    for (const auto& s : scan.families[0].family_basis)
        CHECK(semi_invariant_exact(X, G, s));
}

TEST_CASE("conjugation equivariance") {
    Surface X = klein_cover();
    auto d7 = map_of(X, {"zeta(7)*x", "zeta(7)^4*y", "zeta(7)^2*z", "t"});
    auto c3 = map_of(X, {"y", "z", "x", "t"});
    auto tau = map_of(X, {"x", "y", "z", "-t"});
    auto G = FiniteGroup::closure(X, {d7, c3, tau});
    // conjugate by a diagonal h that preserves the surface
    auto h = map_of(X, {"zeta(7)^2*x", "zeta(7)*y", "zeta(7)^4*z", "t"});
    REQUIRE(preserves_ideal(X, h));
    // h^-1 within the closed diagonal subgroup: h has order 7
    PAut hinv = h;
    for (int i = 0; i < 5; ++i) hinv = normalize_paut(X, compose_paut(hinv, h));
    std::vector<PAut> conj_gens;
    for (const auto& g : {d7, c3, tau})
        conj_gens.push_back(normalize_paut(X, compose_paut(compose_paut(h, g), hinv)));
    auto Gc = FiniteGroup::closure(X, conj_gens);
    REQUIRE(Gc.size() == G.size());
    auto a = semi_invariant_lines(X, G, 3);
    auto b = semi_invariant_lines(X, Gc, 3);
    REQUIRE(a.curves.size() == b.curves.size());
    // the conjugated list is the h-pullback of the original list
    for (const auto& cur : a.curves) {
        WPoly image = hinv.pullback(cur.section);
        image = image.scaled(image.leading_coeff().inverse());
        bool found = false;
        for (const auto& cb : b.curves)
            if (cb.section == image) found = true;
        CHECK(found);
    }
}

TEST_CASE("base points") {
    SUBCASE("sextic anticanonical pencil has one base point") {
        auto r = make_ring({"x", "y", "z", "t"}, {1, 1, 2, 3});
        Surface X = Surface::sextic_cone(
            parse_wpoly("t^2 - z^3 - z*x^2*y^2 - x^6 - y^6 - x^3*y^3", r, Tower::rationals()));
        auto bp = base_points(X, {parse_wpoly("x", X.ring(), X.tower()),
                                  parse_wpoly("y", X.ring(), X.tower())});
        CHECK(bp.finite);
        REQUIRE(bp.points.size() == 1);
        auto tw = bp.points[0].coords[0].tower();
        CHECK(bp.points[0].coords[2] == tw->one());
        CHECK(bp.points[0].coords[3] == tw->one());
    }
    SUBCASE("full plane cubic system is base point free") {
        Surface P2 = Surface::p2(Tower::rationals());
        std::vector<WPoly> secs;
        for (const auto& e : graded_monomials(*P2.ring(), 3))
            secs.push_back(section_from_expo(P2, e));
        auto bp = base_points(P2, secs);
        CHECK(bp.points.empty());
        CHECK(bp.finite);
    }
    SUBCASE("quartic anticanonical system is base point free") {
        Surface X = klein_cover();
        std::vector<WPoly> secs;
        for (const auto& e : X.anticanonical_basis(1)) secs.push_back(section_from_expo(X, e));
        auto bp = base_points(X, secs);
        CHECK(bp.points.empty());
    }
}
