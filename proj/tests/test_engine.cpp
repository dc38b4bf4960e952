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

#include "dpa/catalog.hpp"

using namespace dpa;

namespace {

Surface from_catalog(const std::string& key, SurfaceSpec* out_spec = nullptr) {
    const CatalogEntry* e = catalog_find(key);
    REQUIRE(e != nullptr);
    SurfaceSpec spec = parse_spec(e->text);
    if (out_spec) *out_spec = spec;
    return build_surface(spec);
}

} // namespace

TEST_CASE("base thresholds of the trivial group") {
    CHECK(gafa_lct_trivial(Surface::p2(Tower::rationals())).value() == rat(1, 3));
    CHECK(gafa_lct_trivial(Surface::p1xp1(Tower::rationals())).value() == rat(1, 2));
    CHECK(gafa_lct_trivial(Surface::lookup(5)).value() == rat(1, 2));
    CHECK(gafa_lct_trivial(Surface::lookup(7)).value() == rat(1, 3));
    SUBCASE("degree-1 cuspidal split") {
        auto r = make_ring({"x", "y", "z", "t"}, {1, 1, 2, 3});
        auto tw = Tower::rationals();
        Surface with_cusp = Surface::sextic_cone(parse_wpoly("t^2 - z^3 - x^6 - y^6", r, tw));
        CHECK(gafa_lct_trivial(with_cusp).value() == rat(5, 6));
        Surface no_cusp = Surface::sextic_cone(
            parse_wpoly("t^2 - z^3 - z*x^4 - x^6 - x^3*y^3 - y^6 - x*y^5", r, tw));
        // f4 = x^4 and f6 share no root iff x does not divide f6; machine checks
        if (no_cusp.is_smooth().smooth)
            CHECK(gafa_lct_trivial(no_cusp).value() == rat(1));
    }
    SUBCASE("degree-4 constant") {
        Surface X = from_catalog("dp4-eps3");
        CHECK(gafa_lct_trivial(X).value() == rat(2, 3));
    }
}

TEST_CASE("line thresholds") {
    auto Q = Tower::rationals();
    CHECK(lct_p1(Q, {}) == rat(1, 2));
    auto K4 = Tower::cyclotomic(4);
    FE i = K4->zeta();
    FE h = K4->from_rat(rat(1, 2));
    Matrix s(K4, 2, 2), w(K4, 2, 2);
    s.at(0, 0) = i;
    s.at(1, 1) = -i;
    w.at(0, 0) = (K4->one() + i) * h;
    w.at(0, 1) = (-K4->one() + i) * h;
    w.at(1, 0) = (K4->one() + i) * h;
    w.at(1, 1) = (K4->one() - i) * h;
    CHECK(lct_p1(K4, {s, w}) == rat(2)); // tetrahedral
    auto K3 = Tower::cyclotomic(3);
    Matrix r3(K3, 2, 2), f(K3, 2, 2);
    r3.at(0, 0) = K3->zeta();
    r3.at(1, 1) = K3->one();
    f.at(0, 1) = K3->one();
    f.at(1, 0) = K3->one();
    CHECK(lct_p1(K3, {r3, f}) == rat(1)); // dihedral
}

TEST_CASE("lookup table") {
    CHECK(classify_lookup(5, 120, "S5").value() == rat(2));
    CHECK(classify_lookup(5, 60, "A5").value() == rat(2));
    CHECK(classify_lookup(5, 20, "Z5:Z4").value() == rat(1));
    CHECK(classify_lookup(5, 10, "D5").value() == rat(4, 5));
    CHECK(classify_lookup(5, 5, "Z5").value() == rat(4, 5));
    CHECK(classify_lookup(5, 1, "1").value() == rat(1, 2));
    CHECK(classify_lookup(7, 2, "any").value() == rat(1, 3));
    auto d6 = classify_lookup(6, 6, "any");
    CHECK_FALSE(d6.exact);
    CHECK(d6.lower == rat(1, 2));
    CHECK(d6.upper == rat(1));
    auto d8 = classify_lookup(8, 4, "any");
    CHECK(d8.lower == rat(1, 3));
    CHECK(d8.upper == rat(1, 2));
}

TEST_CASE("upper bounds from invariant curves") {
    SurfaceSpec spec;
    Surface X = from_catalog("dp2-klein", &spec);
    auto G = build_group(spec, X, "z2x7x3");
    auto up = lct_upper_from_invariant_curves(X, G, 3);
    REQUIRE(up.found);
    CHECK(up.upper == rat(15, 8)); // the triangle at level 3 beats the smooth level-2 curve
    // abelian subgroup: tau alone gives an upper bound of 2 through level 2
    auto Gt = build_group(spec, X, "full");
    auto res = classify(X, Gt, build_options(spec, X));
    CHECK(res.value() == rat(2));
    CHECK(up.upper <= res.value()); // upper bounds are sound for subgroups
}

TEST_CASE("group monotonicity of exact values") {
    SurfaceSpec spec;
    Surface X = from_catalog("dp2-klein", &spec);
    auto Gsub = build_group(spec, X, "z2x7x3");
    auto Gfull = build_group(spec, X, "full");
    auto a = classify(X, Gsub, build_options(spec, X));
    auto b = classify(X, Gfull, build_options(spec, X));
    REQUIRE(a.exact);
    REQUIRE(b.exact);
    CHECK(a.value() <= b.value());

    SurfaceSpec spec4;
    Surface X4 = from_catalog("dp4-eps3", &spec4);
    auto g1 = classify(X4, build_group(spec4, X4, "gamma"), build_options(spec4, X4));
    auto g2 = classify(X4, build_group(spec4, X4, "full"), build_options(spec4, X4));
    CHECK(g1.value() <= g2.value());
}

TEST_CASE("classify matches the base table on trivial groups") {
    for (const std::string key : {"dp1-cuspidal", "dp2-tacnodal", "dp3-eckardt"}) {
        SurfaceSpec spec;
        Surface X = from_catalog(key, &spec);
        auto G = build_group(spec, X, "full"); // no generators: trivial
        REQUIRE(G.size() == 1);
        auto res = classify(X, G, build_options(spec, X));
        auto base = gafa_lct_trivial(X);
        CHECK(res.value() == base.value());
    }
}

TEST_CASE("reynolds projectors are idempotent") {
    // build the honest matrix group at level 2 for the order-42 subgroup and
    // check the character-averaging projectors exactly
    SurfaceSpec spec;
    Surface X = from_catalog("dp2-klein", &spec);
    auto G = build_group(spec, X, "z2x7x3");
    auto rep = induced_matrices(X, G, 2);
    REQUIRE(rep.system_stable);
    // close the actual matrix group
    std::vector<Matrix> elems;
    auto find = [&](const Matrix& m) {
        for (size_t i = 0; i < elems.size(); ++i)
            if (elems[i] == m) return (int)i;
        return -1;
    };
    std::vector<int> queue;
    for (int gi : G.generator_indices()) {
        if (find(rep.matrices[(size_t)gi]) < 0) {
            elems.push_back(rep.matrices[(size_t)gi]);
            queue.push_back((int)elems.size() - 1);
        }
    }
    elems.push_back(Matrix::identity(X.tower(), (int)rep.basis.size()));
    size_t head = 0;
    std::vector<Matrix> gens = elems;
    while (head < elems.size() && elems.size() < 800) {
        Matrix cur = elems[head++];
        for (const auto& g : gens) {
            Matrix p = cur * g;
            if (find(p) < 0) elems.push_back(p);
        }
    }
    REQUIRE(elems.size() < 800);
    int N = (int)rep.basis.size();
    auto tw = X.tower();
    // trivial-character projector
    Matrix P(tw, N, N);
    for (const auto& m : elems) P = P + m;
    P = P.scaled(tw->from_rat(rat(1, (long)elems.size())));
    CHECK(P * P == P);
    CHECK(P.rank() <= N);
}

TEST_CASE("named members of the dihedral sextic pencil") {
    SurfaceSpec spec;
    Surface X = from_catalog("dp1-d12", &spec);
    for (const std::string s : {"z", "x*y", "x^2 + y^2", "x^2 - y^2"}) {
        CAPTURE(s);
        auto ana = log_pair_lct(X, {{parse_wpoly(s, X.ring(), X.tower()), rat(1)}});
        CHECK(ana.lct == rat(1)); // worst singularities are nodes
    }
}

TEST_CASE("interval results never invent values") {
    SurfaceSpec spec;
    Surface X = from_catalog("p2-klein", &spec);
    auto G = build_group(spec, X, "full");
    auto res = classify(X, G, build_options(spec, X));
    CHECK_FALSE(res.exact);
    CHECK(res.lower == rat(4, 3));
    CHECK_THROWS_AS(res.value(), Error);
}
