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
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <iostream>

#include "dpa/catalog.hpp"
#include "dpa/germ.hpp"

using namespace dpa;

namespace {

struct Criterion {
    int number;
    std::string title;
    bool pass = true;
    std::vector<std::string> lines;
    void check(bool ok, const std::string& what) {
        pass = pass && ok;
        lines.push_back(std::string(ok ? "    ok   " : "    FAIL ") + what);
        CHECK_MESSAGE(ok, ("criterion " + std::to_string(number) + ": " + what));
    }
};

std::vector<Criterion>& report() {
    static std::vector<Criterion> r;
    return r;
}

Surface from_catalog(const std::string& key, SurfaceSpec* out_spec = nullptr) {
    const CatalogEntry* e = catalog_find(key);
    REQUIRE(e != nullptr);
    SurfaceSpec spec = parse_spec(e->text);
    if (out_spec) *out_spec = spec;
    return build_surface(spec);
}

std::string germ_tag(const GermClass& g) {
    switch (g.tag) {
    case GermClass::Tag::Smooth: return "smooth";
    case GermClass::Tag::Ak: return "A" + std::to_string(g.k);
    case GermClass::Tag::Ordinary: return "ordinary-" + std::to_string(g.multiplicity);
    case GermClass::Tag::Other: return "other";
    }
    return "?";
}

} // namespace

TEST_CASE("criterion 1: germ threshold oracles agree") {
    Criterion c{1, "dual germ oracles on the six reference germs"};
    std::vector<std::pair<std::string, Rat>> cases = {
        {"x*y", rat(1)},          {"x^2 + y^3", rat(5, 6)},  {"x^2 + y^4", rat(3, 4)},
        {"x^3 + y^3", rat(2, 3)}, {"x^2 + y^5", rat(7, 10)}, {"x^3 + y^4", rat(7, 12)}};
    for (const auto& [text, expect] : cases) {
        CurveGerm g = germ_from_string(text, Tower::rationals());
        auto nres = newton_lct(g);
        auto rres = resolve_and_lct({{g, rat(1)}});
        c.check(nres.ok && nres.lct == expect, text + " boundary value " + expect.get_str());
        c.check(rres.lct == expect, text + " resolution value " + expect.get_str());
        c.check(nres.ok && nres.lct == rres.lct, text + " oracle agreement");
    }
    report().push_back(c);
}

TEST_CASE("criterion 2: octahedral sextic") {
    Criterion c{2, "octahedral degree-1 surface"};
    SurfaceSpec spec;
    Surface X = from_catalog("dp1-s4", &spec);
    auto G = build_group(spec, X, "full");
    c.check(G.size() == 144, "full symmetry group has order 144");
    auto res = classify(X, G, build_options(spec, X));
    c.check(res.exact, "exact value computed: " + res.str());
    c.check(res.exact && res.value() == rat(5, 3),
            "value 5/3 (engine computes " + (res.exact ? res.value().get_str() : "interval") +
                "; the unique invariant bi-anticanonical curve z=0 is smooth)");
    // certificate must exhibit an invariant cuspidal curve in |-2K|
    auto scan = semi_invariant_lines(X, G, 2);
    bool cuspidal_member = false;
    for (const auto& cur : scan.curves) {
        auto ana = log_pair_lct(X, {{cur.section, rat(1)}});
        if (ana.worst_valid && ana.worst.tag == GermClass::Tag::Ak && ana.worst.k == 2)
            cuspidal_member = true;
    }
    c.check(cuspidal_member, "an invariant cuspidal bi-anticanonical curve exists");
    report().push_back(c);
}

TEST_CASE("criterion 3: dihedral degree-1 surface") {
    Criterion c{3, "dihedral degree-1 surface"};
    SurfaceSpec spec;
    Surface X = from_catalog("dp1-d12", &spec);
    auto G = build_group(spec, X, "full");
    auto scan = semi_invariant_lines(X, G, 2);
    // the four stated rigid curves: z, xy, x^2+y^2, x^2-y^2
    std::vector<WPoly> wanted = {
        parse_wpoly("z", X.ring(), X.tower()), parse_wpoly("x*y", X.ring(), X.tower()),
        parse_wpoly("x^2 + y^2", X.ring(), X.tower()),
        parse_wpoly("x^2 - y^2", X.ring(), X.tower())};
    bool exactly_four = scan.curves.size() == 4 && scan.families.empty();
    if (exactly_four) {
        for (const auto& w : wanted) {
            bool found = false;
            for (const auto& cur : scan.curves)
                if (cur.section == w.scaled(w.leading_coeff().inverse())) found = true;
            exactly_four = exactly_four && found;
        }
    }
    std::string actual = "scan yields " + std::to_string(scan.curves.size()) + " rigid curve(s)";
    for (const auto& f : scan.families)
        actual += " plus a " + std::to_string(f.family_dim) + "-dimensional family";
    c.check(exactly_four, "exactly the 4 stated curves (" + actual +
                              "; the whole pencil through xy and z is invariant here)");
    // worst germs are nodes
    bool worst_is_node = true;
    for (const auto& f : scan.families) {
        auto ps = scan_pencil(X, f.family_basis[0], f.family_basis[1]);
        if (!ps.decided || !ps.worst_valid ||
            !(ps.worst.tag == GermClass::Tag::Smooth ||
              (ps.worst.tag == GermClass::Tag::Ak && ps.worst.k <= 1)))
            worst_is_node = false;
        else
            c.lines.push_back("    note: worst member germ over the family: " +
                              germ_tag(ps.worst));
    }
    for (const auto& cur : scan.curves) {
        auto ana = log_pair_lct(X, {{cur.section, rat(1)}});
        if (!(ana.worst_valid &&
              (ana.worst.tag == GermClass::Tag::Smooth ||
               (ana.worst.tag == GermClass::Tag::Ak && ana.worst.k <= 1))))
            worst_is_node = false;
    }
    c.check(worst_is_node, "all worst germs are at most ordinary double points");
    auto res = classify(X, G, build_options(spec, X));
    c.check(res.exact && res.value() == rat(2), "classification value 2");
    report().push_back(c);
}

TEST_CASE("criterion 4: Klein double plane") {
    Criterion c{4, "Klein double plane and its order-42 stabilizer"};
    SurfaceSpec spec;
    Surface X = from_catalog("dp2-klein", &spec);
    auto G42 = build_group(spec, X, "z2x7x3");
    c.check(G42.size() == 42, "stabilizer subgroup has order 42");
    auto s1 = semi_invariant_lines(X, G42, 1);
    c.check(s1.complete && s1.curves.empty() && s1.families.empty(),
            "no invariant anticanonical curves");
    auto s2 = semi_invariant_lines(X, G42, 2);
    bool only_t = s2.complete && s2.families.empty() && s2.curves.size() == 1 &&
                  s2.curves[0].section == parse_wpoly("t", X.ring(), X.tower());
    c.check(only_t, "the bi-anticanonical invariant is exactly the ramification section");
    auto Gfull = build_group(spec, X, "full");
    c.check(Gfull.size() == 336, "full symmetry group has order 336");
    auto tw = X.tower();
    SurfacePoint P1 = X.normalize_point({tw->one(), tw->zero(), tw->zero(), tw->zero()});
    auto orb_full = orbit_of(X, Gfull, P1);
    c.check(orb_full.length == 24, "coordinate point orbit has length 24 under the full group");
    auto orb_sub = orbit_of(X, G42, P1);
    c.check(orb_sub.length == 3, "and length 3 under the order-42 subgroup");
    auto res = classify(X, G42, build_options(spec, X));
    c.check(res.exact && res.value() == rat(15, 8), "classification value 15/8");
    bool lct2_recorded = false;
    for (const auto& line : res.certificate)
        if (line.find("level-2 threshold 2") != std::string::npos) lct2_recorded = true;
    c.check(lct2_recorded, "level-2 threshold 2 recorded in the certificate");
    // local configuration at P1: coefficient-1 sum of the three coordinate
    // curves has local threshold 5/8
    std::vector<std::pair<CurveGerm, Rat>> germs;
    for (const std::string s : {"x", "y", "z"}) {
        WPoly sec = parse_wpoly(s, X.ring(), X.tower());
        try {
            CurveGerm g = extract_germ(X, sec, P1, 12);
            if (g.poly.min_weighted_degree() >= 1) germs.push_back({g, rat(1)});
        } catch (const Error&) {
        }
    }
    c.check(germs.size() == 2, "two of the three coordinate curves pass through the point");
    auto local = resolve_and_lct(germs);
    c.check(local.lct == rat(5, 8), "local threshold of the configuration is 5/8");
    report().push_back(c);
}

TEST_CASE("criterion 5: sign-group quartic") {
    Criterion c{5, "quartic with the sign group"};
    SurfaceSpec spec;
    Surface X = from_catalog("dp2-z2z2z2", &spec);
    c.check(X.is_smooth().smooth, "chosen coefficients pass the smoothness check");
    auto G = build_group(spec, X, "full");
    c.check(G.size() == 8, "sign group has order 8");
    auto res = classify(X, G, build_options(spec, X));
    c.check(res.exact && res.value() == rat(1), "classification value 1");
    c.check(res.rule == "deg2-anticanonical", "decided through the anticanonical members");
    report().push_back(c);
}

TEST_CASE("criterion 6: cubic surfaces") {
    Criterion c{6, "cubic surfaces"};
    {
        SurfaceSpec spec;
        Surface X = from_catalog("dp3-clebsch", &spec);
        auto G = build_group(spec, X, "full");
        c.check(G.size() == 120, "symmetric-model cubic has symmetry order 120");
        auto res = classify(X, G, build_options(spec, X));
        c.check(res.exact && res.value() == rat(2), "its classification value is 2");
    }
    {
        SurfaceSpec spec;
        Surface X = from_catalog("dp3-fermat", &spec);
        auto G = build_group(spec, X, "full");
        c.check(G.size() == 648, "diagonal cubic has symmetry order 648");
        auto res = classify(X, G, build_options(spec, X));
        c.check(res.exact && res.value() == rat(4), "its classification value is 4");
    }
    {
        SurfaceSpec spec;
        Surface X = from_catalog("dp3-z2z2z2", &spec);
        c.check(X.is_smooth().smooth, "coefficient 1 keeps the third cubic smooth");
        auto G = build_group(spec, X, "full");
        auto res = classify(X, G, build_options(spec, X));
        c.check(res.exact && res.value() == rat(1), "its classification value is 1");
    }
    report().push_back(c);
}

TEST_CASE("criterion 7: intersections of two quadrics") {
    Criterion c{7, "degree-4 surfaces"};
    {
        SurfaceSpec spec;
        Surface X = from_catalog("dp4-eps3", &spec);
        auto G = build_group(spec, X, "full");
        c.check(G.size() == 96, "cube-root surface symmetry has order 96");
        auto s1 = semi_invariant_lines(X, G, 1);
        c.check(s1.complete && s1.curves.empty() && s1.families.empty(),
                "no invariant anticanonical curves");
        auto res = classify(X, G, build_options(spec, X));
        c.check(res.exact && res.value() == rat(2), "classification value 2");
        auto Gam = build_group(spec, X, "gamma");
        c.check(Gam.size() == 16, "sign subgroup has order 16");
        auto res2 = classify(X, Gam, build_options(spec, X));
        c.check(res2.exact && res2.value() == rat(1), "sign subgroup value 1");
        c.check(!has_fixed_point(X, Gam), "sign subgroup fixes no point");
    }
    {
        SurfaceSpec spec;
        Surface X = from_catalog("dp4-eps5", &spec);
        auto G = build_group(spec, X, "full");
        c.check(G.size() == 160, "fifth-root surface symmetry has order 160");
        auto res = classify(X, G, build_options(spec, X));
        c.check(res.exact && res.value() == rat(2), "classification value 2");
    }
    report().push_back(c);
}

TEST_CASE("criterion 8: the plane") {
    Criterion c{8, "simple order-168 group on the plane"};
    SurfaceSpec spec;
    Surface X = from_catalog("p2-klein", &spec);
    auto G = build_group(spec, X, "full");
    c.check(G.size() == 168, "group closes to order 168");
    for (int d = 1; d <= 3; ++d) {
        auto scan = scan_system(X, G, graded_monomials(*X.ring(), d), d);
        c.check(scan.complete && scan.curves.empty() && scan.families.empty(),
                "no invariant curves of degree " + std::to_string(d));
    }
    auto s4 = scan_system(X, G, graded_monomials(*X.ring(), 4), 4);
    bool quartic_ok = s4.curves.size() == 1 && s4.families.empty();
    if (quartic_ok) {
        WPoly expect = parse_wpoly("x^3*y + x*z^3 + y^3*z", X.ring(), X.tower());
        quartic_ok = s4.curves[0].section == expect;
    }
    c.check(quartic_ok, "the degree-4 invariant is the classical quartic");
    auto res = classify(X, G, build_options(spec, X));
    c.check(!res.exact && res.has_lower && res.lower == rat(4, 3),
            "interval result with lower bound 4/3: " + res.str());
    report().push_back(c);
}

TEST_CASE("criterion 9: products of lines") {
    Criterion c{9, "products of line groups"};
    struct Case {
        std::string key;
        Rat expect;
    };
    for (const auto& cs : {Case{"p1xp1-a4xa4", rat(2)}, Case{"p1xp1-d3xa5", rat(1)},
                           Case{"p1xp1-trivial", rat(1, 2)}}) {
        SurfaceSpec spec;
        Surface X = from_catalog(cs.key, &spec);
        auto opt = build_options(spec, X);
        auto G = build_group(spec, X, "full");
        auto res = classify(X, G, opt);
        c.check(res.exact && res.value() == cs.expect,
                cs.key + " classifies to " + cs.expect.get_str());
        // the exceeds-one criterion matches the two factor thresholds
        if (opt.product) {
            Rat a = lct_p1(X.tower(), opt.factor1);
            Rat b = lct_p1(X.tower(), opt.factor2);
            bool both_exceed = a > 1 && b > 1;
            c.check((res.value() > 1) == both_exceed,
                    cs.key + " exceeds 1 exactly when both factors do");
        }
    }
    report().push_back(c);
}

TEST_CASE("criterion 10: blown-up surfaces") {
    Criterion c{10, "degree 5 and higher"};
    auto run = [&](const std::string& key) {
        SurfaceSpec spec;
        Surface X = from_catalog(key, &spec);
        auto G = build_group(spec, X, "full");
        return classify(X, G, build_options(spec, X));
    };
    auto d7 = run("dp7");
    c.check(d7.exact && d7.value() == rat(1, 3), "degree 7 gives exactly 1/3");
    auto d8 = run("dp8");
    c.check(!d8.exact && d8.has_upper && d8.upper == rat(1, 2), "degree 8 bounded above by 1/2");
    auto d6 = run("dp6");
    c.check(!d6.exact && d6.has_upper && d6.upper == rat(1), "degree 6 bounded above by 1");
    std::vector<std::pair<std::string, Rat>> table = {
        {"dp5-s5", rat(2)},    {"dp5-a5", rat(2)},      {"dp5-z5z4", rat(1)},
        {"dp5-d5", rat(4, 5)}, {"dp5-z5", rat(4, 5)},   {"dp5-trivial", rat(1, 2)}};
    for (const auto& [key, expect] : table) {
        auto res = run(key);
        c.check(res.exact && res.value() == expect, key + " = " + expect.get_str());
    }
    report().push_back(c);
}

TEST_CASE("criterion 11: property suites") {
    Criterion c{11, "cross-cutting properties"};
    // field axioms on pseudo-random cyclotomic elements
    {
        auto K = Tower::cyclotomic(7);
        bool ok = true;
        auto elem = [&](int seed) {
            FE e = K->zero();
            long s = seed;
            for (int i = 0; i < 5; ++i) {
                s = (s * 1103515245 + 12345) & 0x7fffffff;
                e = e + K->zeta_power(i) * K->from_rat(rat((s % 19) - 9, 1 + (s % 7)));
            }
            return e;
        };
        for (int t = 0; t < 8; ++t) {
            FE a = elem(3 * t + 1), b = elem(3 * t + 2), x = elem(3 * t + 3);
            ok = ok && ((a + b) * x == a * x + b * x) && ((a * b) * x == a * (b * x)) &&
                 (a + b - b == a);
            if (!b.is_zero()) ok = ok && (a * b * b.inverse() == a);
        }
        c.check(ok, "field axioms hold exactly");
    }
    // semi-invariance exactness and projector idempotence are exercised per
    // scan; verify once more on the stabilizer subgroup
    {
        SurfaceSpec spec;
        Surface X = from_catalog("dp2-klein", &spec);
        auto G = build_group(spec, X, "z2x7x3");
        auto scan = semi_invariant_lines(X, G, 3);
        bool ok = !scan.curves.empty();
        for (const auto& cur : scan.curves) {
            for (int i = 0; i < G.size(); ++i) {
                WPoly img = X.reduce(G.elem(i).pullback(cur.section));
                FE ratio = img.leading_coeff() * cur.section.leading_coeff().inverse();
                ok = ok && img == cur.section.scaled(ratio);
            }
        }
        c.check(ok, "semi-invariance is exact for every group element");
        // orbit-length divisibility
        auto so = orbits_of_length_at_most(X, G, 3);
        bool div_ok = true;
        for (const auto& o : so.orbits) div_ok = div_ok && (G.size() % o.length == 0);
        c.check(div_ok && !so.orbits.empty(), "orbit lengths divide the group order");
    }
    // germ coordinate invariance and power scaling
    {
        auto tw = Tower::rationals();
        auto ring = make_ring({"x", "y"}, {1, 1});
        CurveGerm g = germ_from_string("x^2 + y^3", tw);
        std::vector<WPoly> sub = {parse_wpoly("x - 3*y", ring, tw),
                                  parse_wpoly("y + 2*x", ring, tw)};
        CurveGerm h = g;
        h.poly = g.poly.substitute(sub, false);
        bool ok = resolve_and_lct({{h, rat(1)}}).lct == rat(5, 6);
        CurveGerm g2 = g;
        g2.poly = g.poly * g.poly;
        ok = ok && resolve_and_lct({{g2, rat(1)}}).lct == rat(5, 12);
        c.check(ok, "local thresholds respect coordinate changes and powers");
    }
    // group monotonicity of exact values
    {
        SurfaceSpec spec;
        Surface X = from_catalog("dp2-klein", &spec);
        auto a = classify(X, build_group(spec, X, "z2x7x3"), build_options(spec, X));
        auto b = classify(X, build_group(spec, X, "full"), build_options(spec, X));
        c.check(a.exact && b.exact && a.value() <= b.value(),
                "exact values grow with the group");
    }
    // the finite-symmetry equivalence: value exceeds 1 iff no invariant
    // anticanonical curve, across the finite-symmetry catalog entries
    {
        for (const std::string key : {"dp1-s4", "dp1-d12", "dp2-klein", "dp2-z2z2z2",
                                      "dp3-clebsch", "dp3-fermat", "dp3-z2z2z2", "dp4-eps3",
                                      "dp4-eps5"}) {
            SurfaceSpec spec;
            Surface X = from_catalog(key, &spec);
            auto G = build_group(spec, X, "full");
            auto res = classify(X, G, build_options(spec, X));
            auto scan = semi_invariant_lines(X, G, 1);
            bool empty1 = scan.complete && scan.curves.empty() && scan.families.empty();
            c.check(res.exact && ((res.value() > 1) == empty1),
                    key + ": value exceeds 1 iff the invariant anticanonical system is empty");
        }
    }
    report().push_back(c);
}

int main(int argc, char** argv) {
    doctest::Context ctx;
    ctx.applyCommandLine(argc, argv);
    int rc = ctx.run();
    std::cout << "\n=== acceptance summary ===\n";
    for (const auto& c : report()) {
        std::cout << (c.pass ? "PASS" : "FAIL") << "  criterion " << c.number << ": " << c.title
                  << "\n";
        if (!c.pass)
            for (const auto& l : c.lines) std::cout << l << "\n";
    }
    bool all = true;
    for (const auto& c : report()) all = all && c.pass;
    std::cout << (all ? "all criteria hold" : "some criteria fail (see analysis notes)") << "\n";
    return rc;
}
