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
#include "dpa/catalog.hpp"

#include <sstream>

namespace dpa {

namespace {

// Klein's order-2 symmetry of the quartic x^3 y + y^3 z + z^3 x, written with
// the quadratic Gauss sum: sqrt(-7) = 1 + 2(zeta + zeta^2 + zeta^4).
std::string klein_involution_rows(const std::string& tvar) {
    auto entry = [&](int a, int b) {
        return "(zeta(7)^" + std::to_string(a) + " - zeta(7)^" + std::to_string(b) + ")";
    };
    std::string den = "(-1)*(2*zeta(7) + 2*zeta(7)^2 + 2*zeta(7)^4 + 1)/7";
    auto row = [&](int a1, int b1, int a2, int b2, int a3, int b3) {
        return den + "*(" + entry(a1, b1) + "*x + " + entry(a2, b2) + "*y + " + entry(a3, b3) +
               "*z)";
    };
    std::string out = "generator s: " + row(1, 6, 2, 5, 4, 3) + " ; " + row(2, 5, 4, 3, 1, 6) +
                      " ; " + row(4, 3, 1, 6, 2, 5);
    if (!tvar.empty()) out += " ; " + tvar;
    return out + "\n";
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> out;
    auto add = [&](const std::string& key, const std::string& text) {
        out.push_back({key, "spec_version: 1\nlabel: " + key + "\n" + text});
    };

    // --- degree 1: sextic hypersurfaces in P(1,1,2,3) ---
    add("dp1-s4",
        "kind: sextic-wp1123\n"
        "conductor: 24\n"
        "variables: x y z t\n"
        "equation: t^2 - z^3 - x*y*(x^4 - y^4)\n"
        "generator r4: zeta(24)^6*x ; y ; -zeta(24)^6*z ; zeta(24)^3*t\n"
        "generator swap: y ; x ; -z ; zeta(24)^6*t\n"
        "generator r3: x + zeta(24)^6*y ; x - zeta(24)^6*y ; -2*zeta(24)^6*z ; (2 + 2*zeta(24)^6)*t\n"
        "generator w: x ; y ; zeta(3)*z ; t\n"
        "generator tau: x ; y ; z ; -t\n"
        "expect lct full: 2 anchor octahedral root configuration, smooth bi-anticanonical curve\n"
        "expect invariant-count full n=1: 0\n"
        "expect invariant-count full n=2: 1\n");

    add("dp1-d12",
        "kind: sextic-wp1123\n"
        "conductor: 3\n"
        "variables: x y z t\n"
        "equation: t^2 - z^3 - z*x^2*y^2 - x^6 - y^6 - x^3*y^3\n"
        "generator d: x ; zeta(3)*y ; zeta(3)*z ; t\n"
        "generator swap: y ; x ; z ; t\n"
        "generator tau: x ; y ; z ; -t\n"
        "expect lct full: 2 anchor dihedral sextic, all invariant members at worst nodal\n"
        "expect invariant-count full n=1: 0\n"
        "expect invariant-count full n=2: 1\n");

    add("dp1-cuspidal",
        "kind: sextic-wp1123\n"
        "variables: x y z t\n"
        "equation: t^2 - z^3 - x^6 - y^6\n"
        "expect lct full: 5/6 anchor cuspidal anticanonical members exist\n");

    // --- degree 2: quartic hypersurfaces in P(1,1,1,2) ---
    add("dp2-klein",
        "kind: quartic-wp1112\n"
        "conductor: 7\n"
        "variables: x y z t\n"
        "equation: t^2 - x^3*y - y^3*z - z^3*x\n"
        "generator d7: zeta(7)*x ; zeta(7)^4*y ; zeta(7)^2*z ; t\n"
        "generator c3: y ; z ; x ; t\n" +
        klein_involution_rows("t") +
        "generator tau: x ; y ; z ; -t\n"
        "subgroup z2x7x3: d7 c3 tau\n"
        "expect lct full: 2 anchor full symmetry of the Klein double plane\n"
        "expect lct z2x7x3: 15/8 anchor order-42 stabilizer of the coordinate triangle\n"
        "expect invariant-count full n=1: 0\n"
        "expect invariant-count z2x7x3 n=1: 0\n"
        "expect invariant-count z2x7x3 n=2: 1\n"
        "expect invariant-count z2x7x3 n=3: 1\n");

    add("dp2-z2z2z2",
        "kind: quartic-wp1112\n"
        "variables: x y z t\n"
        "equation: t^2 - x^4 - y^4 - z^4 - x^2*y^2 - 3*x^2*z^2 - 5*y^2*z^2\n"
        "generator sx: -x ; y ; z ; t\n"
        "generator sy: x ; -y ; z ; t\n"
        "generator tau: x ; y ; z ; -t\n"
        "expect lct full: 1 anchor three invariant anticanonical curves, all smooth\n"
        "expect invariant-count full n=1: 3\n");

    add("dp2-tacnodal",
        "kind: quartic-wp1112\n"
        "variables: x y z t\n"
        "equation: t^2 - x^4 - y^4 - z^4\n"
        "expect lct full: 3/4 anchor four-fold tangent lines of the diagonal quartic\n");

    // --- degree 3: cubic surfaces ---
    add("dp3-clebsch",
        "kind: cubic-p3\n"
        "variables: y0 y1 y2 y3\n"
        "equation: y0^3 + y1^3 + y2^3 + y3^3 - (y0 + y1 + y2 + y3)^3\n"
        "generator s01: y1 ; y0 ; y2 ; y3\n"
        "generator s12: y0 ; y2 ; y1 ; y3\n"
        "generator s23: y0 ; y1 ; y3 ; y2\n"
        "generator s34: y0 ; y1 ; y2 ; -(y0 + y1 + y2 + y3)\n"
        "expect lct full: 2 anchor symmetric diagonal model, order 120\n"
        "expect invariant-count full n=1: 0\n");

    add("dp3-fermat",
        "kind: cubic-p3\n"
        "conductor: 3\n"
        "variables: x y z t\n"
        "equation: x^3 + y^3 + z^3 + t^3\n"
        "generator m1: zeta(3)*x ; y ; z ; t\n"
        "generator m2: x ; zeta(3)*y ; z ; t\n"
        "generator m3: x ; y ; zeta(3)*z ; t\n"
        "generator p1: y ; x ; z ; t\n"
        "generator p2: y ; z ; x ; t\n"
        "generator p3: x ; y ; t ; z\n"
        "expect lct full: 4 anchor diagonal cubic with full monomial symmetry\n"
        "expect invariant-count full n=1: 0\n");

    add("dp3-z2z2z2",
        "kind: cubic-p3\n"
        "variables: x y z t\n"
        "equation: x^3 + x*(y^2 + z^2 + t^2) + y*z*t\n"
        "generator c3: x ; z ; t ; y\n"
        "generator ss: x ; y ; -z ; -t\n"
        "generator sw: x ; z ; y ; t\n"
        "hypothesis picard_generated_by_K: true source=DoIs06\n"
        "expect lct full: 1 anchor unique invariant anticanonical curve is a nodal triangle\n"
        "expect invariant-count full n=1: 1\n");

    add("dp3-eckardt",
        "kind: cubic-p3\n"
        "conductor: 3\n"
        "variables: x y z t\n"
        "equation: x^3 + y^3 + z^3 + t^3\n"
        "expect lct full: 2/3 anchor diagonal cubic carries triple-tangent-plane points\n");

    // --- degree 4: intersections of two quadrics ---
    add("dp4-eps3",
        "kind: quadric-pair-p4\n"
        "conductor: 3\n"
        "variables: x0 x1 x2 x3 x4\n"
        "equation: x0^2 + zeta(3)*x1^2 + zeta(3)^2*x2^2 + x3^2\n"
        "equation2: x0^2 + zeta(3)^2*x1^2 + zeta(3)*x2^2 + x4^2\n"
        "generator t1: x0 ; -x1 ; x2 ; x3 ; x4\n"
        "generator t2: x0 ; x1 ; -x2 ; x3 ; x4\n"
        "generator t3: x0 ; x1 ; x2 ; -x3 ; x4\n"
        "generator t4: x0 ; x1 ; x2 ; x3 ; -x4\n"
        "generator i1: x0 ; x2 ; x1 ; x4 ; x3\n"
        "generator i2: x1 ; x2 ; x0 ; zeta(3)*x3 ; zeta(3)^2*x4\n"
        "subgroup gamma: t1 t2 t3 t4\n"
        "expect lct full: 2 anchor order 96 with empty invariant anticanonical system\n"
        "expect lct gamma: 1 anchor sign group is abelian and fixes no point\n"
        "expect invariant-count full n=1: 0\n");

    add("dp4-eps5",
        "kind: quadric-pair-p4\n"
        "conductor: 5\n"
        "variables: x0 x1 x2 x3 x4\n"
        "equation: x0^2 + zeta(5)*x1^2 + zeta(5)^2*x2^2 + zeta(5)^3*x3^2 + zeta(5)^4*x4^2\n"
        "equation2: zeta(5)^4*x0^2 + zeta(5)^3*x1^2 + zeta(5)^2*x2^2 + zeta(5)*x3^2 + x4^2\n"
        "generator t1: x0 ; -x1 ; x2 ; x3 ; x4\n"
        "generator t2: x0 ; x1 ; -x2 ; x3 ; x4\n"
        "generator t3: x0 ; x1 ; x2 ; -x3 ; x4\n"
        "generator t4: x0 ; x1 ; x2 ; x3 ; -x4\n"
        "generator c5: x1 ; x2 ; x3 ; x4 ; x0\n"
        "generator rev: x4 ; x3 ; x2 ; x1 ; x0\n"
        "expect lct full: 2 anchor order 160 with empty invariant anticanonical system\n"
        "expect invariant-count full n=1: 0\n");

    // --- the plane ---
    add("p2-klein",
        "kind: p2\n"
        "conductor: 7\n"
        "variables: x y z\n"
        "generator d7: zeta(7)*x ; zeta(7)^4*y ; zeta(7)^2*z\n"
        "generator c3: y ; z ; x\n" +
        klein_involution_rows("") +
        "expect lct full: [4/3, 4/3] anchor simple group of order 168 on the plane\n"
        "expect invariant-count full n=1: 0\n");

    // --- products of lines ---
    add("p1xp1-a4xa4",
        "kind: p1xp1\n"
        "conductor: 4\n"
        "factor1 s: zeta(4)*x0 ; -zeta(4)*x1\n"
        "factor1 w: (1 + zeta(4))/2*x0 + (-1 + zeta(4))/2*x1 ; (1 + zeta(4))/2*x0 + (1 - zeta(4))/2*x1\n"
        "factor2 s: zeta(4)*x0 ; -zeta(4)*x1\n"
        "factor2 w: (1 + zeta(4))/2*x0 + (-1 + zeta(4))/2*x1 ; (1 + zeta(4))/2*x0 + (1 - zeta(4))/2*x1\n"
        "expect lct full: 2 anchor tetrahedral groups on both rulings\n");

    add("p1xp1-d3xa5",
        "kind: p1xp1\n"
        "conductor: 15\n"
        "factor1 r: zeta(3)*x0 ; x1\n"
        "factor1 f: x1 ; x0\n"
        "factor2 a: zeta(5)^3*x0 ; zeta(5)^2*x1\n"
        "factor2 b: (-(zeta(5) - zeta(5)^4))/(zeta(5) + zeta(5)^4 - zeta(5)^2 - zeta(5)^3)*x0 + "
        "(zeta(5)^2 - zeta(5)^3)/(zeta(5) + zeta(5)^4 - zeta(5)^2 - zeta(5)^3)*x1 ; "
        "(zeta(5)^2 - zeta(5)^3)/(zeta(5) + zeta(5)^4 - zeta(5)^2 - zeta(5)^3)*x0 + "
        "(zeta(5) - zeta(5)^4)/(zeta(5) + zeta(5)^4 - zeta(5)^2 - zeta(5)^3)*x1\n"
        "expect lct full: 1 anchor dihedral ruling forces the polar orbit\n");

    add("p1xp1-trivial",
        "kind: p1xp1\n"
        "expect lct full: 1/2 anchor base value of the quadric\n");

    // --- blown-up descriptors: degrees 5..8 ---
    auto dp5 = [&](const std::string& key, int order, const std::string& label,
                   const std::string& value, const std::string& anchor) {
        add(key, "kind: blowup-p2\ndegree: 5\ngroup_order: " + std::to_string(order) +
                     "\ngroup_label: " + label + "\nexpect lct full: " + value + " anchor " +
                     anchor + "\n");
    };
    dp5("dp5-s5", 120, "S5", "2", "full symmetry of the degree-5 surface");
    dp5("dp5-a5", 60, "A5", "2", "index-two symmetry of the degree-5 surface");
    dp5("dp5-z5z4", 20, "Z5:Z4", "1", "metacyclic subgroup of order 20");
    dp5("dp5-d5", 10, "D5", "4/5", "dihedral subgroup of order 10");
    dp5("dp5-z5", 5, "Z5", "4/5", "cyclic subgroup of order 5");
    dp5("dp5-trivial", 1, "1", "1/2", "base value of the degree-5 surface");

    add("dp6",
        "kind: blowup-p2\ndegree: 6\ngroup_order: 12\ngroup_label: generic\n"
        "expect lct full: [1/2, 1] anchor hexagon of negative curves is invariant\n");
    add("dp7",
        "kind: blowup-p2\ndegree: 7\ngroup_order: 2\ngroup_label: generic\n"
        "expect lct full: 1/3 anchor rigid anticanonical chain of negative curves\n");
    add("dp8",
        "kind: blowup-p2\ndegree: 8\ngroup_order: 2\ngroup_label: generic\n"
        "expect lct full: [1/3, 1/2] anchor section and fiber classes are invariant\n");

    return out;
}

} // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

const CatalogEntry* catalog_find(const std::string& key) {
    for (const auto& e : catalog_entries())
        if (e.key == key) return &e;
    return nullptr;
}

VerifyReport verify_catalog(const std::vector<std::string>& only_keys) {
    VerifyReport rep;
    for (const auto& entry : catalog_entries()) {
        if (!only_keys.empty() &&
            std::find(only_keys.begin(), only_keys.end(), entry.key) == only_keys.end())
            continue;
        SurfaceSpec spec;
        Surface X = Surface::p2(Tower::rationals());
        try {
            spec = parse_spec(entry.text);
            X = build_surface(spec);
        } catch (const Error& e) {
            rep.items.push_back({entry.key, "parse/build", false, e.what()});
            rep.all_pass = false;
            continue;
        }
        // cache groups per reference
        std::map<std::string, FiniteGroup> groups;
        auto group_of = [&](const std::string& ref) -> FiniteGroup& {
            auto it = groups.find(ref);
            if (it == groups.end())
                it = groups.emplace(ref, build_group(spec, X, ref)).first;
            return it->second;
        };
        for (const auto& e : spec.expectations) {
            VerifyItem item;
            item.key = entry.key;
            try {
                if (e.kind == SpecExpectation::Kind::Lct) {
                    item.what = "lct " + e.group_ref;
                    ClassifyOptions opt = build_options(spec, X);
                    LctResult res = classify(X, group_of(e.group_ref), opt);
                    if (e.interval) {
                        item.pass = !res.exact && res.has_lower && res.has_upper &&
                                    res.lower == e.lo && res.upper == e.hi;
                    } else {
                        item.pass = res.exact && res.value() == e.lo;
                    }
                    item.detail = res.str();
                } else {
                    item.what = "invariant-count " + e.group_ref +
                                " n=" + std::to_string(e.level);
                    auto scan = semi_invariant_lines(X, group_of(e.group_ref), e.level);
                    int count = (int)(scan.curves.size() + scan.families.size());
                    item.pass = scan.complete && count == e.count;
                    item.detail = std::to_string(count) + " invariant line(s)";
                }
            } catch (const Error& err) {
                item.pass = false;
                item.detail = err.what();
            }
            if (!item.pass) rep.all_pass = false;
            rep.items.push_back(std::move(item));
        }
    }
    return rep;
}

} // namespace dpa
