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

TEST_CASE("catalog inventory") {
    CHECK(catalog_entries().size() >= 12);
    CHECK(catalog_find("dp2-klein") != nullptr);
    CHECK(catalog_find("nonexistent") == nullptr);
    // every entry parses and builds
    for (const auto& e : catalog_entries()) {
        CAPTURE(e.key);
        SurfaceSpec spec = parse_spec(e.text);
        CHECK(spec.label == e.key);
        Surface X = build_surface(spec);
        (void)X;
    }
}

TEST_CASE("spec round trip") {
    for (const std::string key : {"dp2-klein", "dp4-eps3", "dp5-a5", "p1xp1-a4xa4"}) {
        const CatalogEntry* e = catalog_find(key);
        REQUIRE(e != nullptr);
        SurfaceSpec a = parse_spec(e->text);
        std::string ser = serialize_spec(a);
        SurfaceSpec b = parse_spec(ser);
        CHECK(a.label == b.label);
        CHECK(a.kind_str == b.kind_str);
        CHECK(a.conductor == b.conductor);
        CHECK(a.equations == b.equations);
        CHECK(a.generators == b.generators);
        CHECK(a.subgroups == b.subgroups);
        CHECK(a.expectations.size() == b.expectations.size());
        CHECK(serialize_spec(b) == ser); // canonical form is a fixed point
    }
}

TEST_CASE("validation diagnostics") {
    SUBCASE("weight mismatch in a generator") {
        std::string text =
            "spec_version: 1\nlabel: bad\nkind: sextic-wp1123\nvariables: x y z t\n"
            "equation: t^2 - z^3 - x^6 - y^6\n"
            "generator g: x ; y ; z ; x\n";
        SurfaceSpec spec = parse_spec(text);
        Surface X = build_surface(spec);
        CHECK_THROWS_AS(build_group(spec, X, "full"), Error);
    }
    SUBCASE("generator moving the ideal") {
        std::string text =
            "spec_version: 1\nlabel: bad\nkind: quartic-wp1112\nvariables: x y z t\n"
            "equation: t^2 - x^3*y - y^3*z - z^3*x\n"
            "generator g: y ; x ; z ; t\n";
        SurfaceSpec spec = parse_spec(text);
        Surface X = build_surface(spec);
        CHECK_THROWS_AS(build_group(spec, X, "full"), Error);
    }
    SUBCASE("missing version") {
        CHECK_THROWS_AS(parse_spec("kind: p2\n"), Error);
    }
    SUBCASE("unknown key") {
        CHECK_THROWS_AS(parse_spec("spec_version: 1\nkind: p2\nnonsense: 1\n"), Error);
    }
    SUBCASE("singular input is rejected") {
        std::string text =
            "spec_version: 1\nlabel: sing\nkind: sextic-wp1123\nvariables: x y z t\n"
            "equation: t^2 - z^3 - z*x^2*y^2\n";
        SurfaceSpec spec = parse_spec(text);
        CHECK_THROWS_AS(build_surface(spec), Error);
    }
}

TEST_CASE("verify subset runs clean and deterministically") {
    std::vector<std::string> keys = {"dp5-s5", "dp5-d5", "dp6",  "dp7",
                                     "dp8",    "p1xp1-trivial", "dp1-cuspidal"};
    auto rep1 = verify_catalog(keys);
    auto rep2 = verify_catalog(keys);
    CHECK(rep1.all_pass);
    REQUIRE(rep1.items.size() == rep2.items.size());
    for (size_t i = 0; i < rep1.items.size(); ++i) {
        CHECK(rep1.items[i].pass == rep2.items[i].pass);
        CHECK(rep1.items[i].detail == rep2.items[i].detail);
    }
}
