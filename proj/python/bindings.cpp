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
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dpa/catalog.hpp"
#include "dpa/germ.hpp"

namespace py = pybind11;
using namespace dpa;

namespace {

SurfaceSpec load_spec(const std::string& key_or_text) {
    if (const CatalogEntry* e = catalog_find(key_or_text)) return parse_spec(e->text);
    return parse_spec(key_or_text);
}

py::dict classify_py(const std::string& key_or_text, const std::string& subgroup, int n_max) {
    SurfaceSpec spec = load_spec(key_or_text);
    Surface X = build_surface(spec);
    FiniteGroup G = build_group(spec, X, subgroup);
    ClassifyOptions opt = build_options(spec, X);
    opt.n_max = n_max;
    LctResult res = classify(X, G, opt);
    py::dict out;
    out["label"] = spec.label;
    out["group_order"] = G.size();
    out["group_structure"] = G.structure_label();
    out["exact"] = res.exact;
    if (res.has_lower) out["lower"] = res.lower.get_str();
    if (res.has_upper) out["upper"] = res.upper.get_str();
    if (res.exact) out["lct"] = res.value().get_str();
    out["rule"] = res.rule;
    out["certificate"] = res.certificate;
    return out;
}

std::string germ_lct_py(const std::string& text) {
    CurveGerm g = germ_from_string(text, Tower::rationals());
    return resolve_and_lct({{g, rat(1)}}).lct.get_str();
}

py::list invariants_py(const std::string& key_or_text, int n, const std::string& subgroup) {
    SurfaceSpec spec = load_spec(key_or_text);
    Surface X = build_surface(spec);
    FiniteGroup G = build_group(spec, X, subgroup);
    auto scan = semi_invariant_lines(X, G, n);
    py::list out;
    for (const auto& c : scan.curves) out.append(c.section.str());
    for (const auto& f : scan.families) {
        py::dict fam;
        fam["dimension"] = f.family_dim;
        py::list basis;
        for (const auto& s : f.family_basis) basis.append(s.str());
        fam["basis"] = basis;
        out.append(fam);
    }
    return out;
}

py::list orbits_py(const std::string& key_or_text, int k, const std::string& subgroup) {
    SurfaceSpec spec = load_spec(key_or_text);
    Surface X = build_surface(spec);
    FiniteGroup G = build_group(spec, X, subgroup);
    auto scan = orbits_of_length_at_most(X, G, k);
    py::list out;
    for (const auto& o : scan.orbits) {
        py::dict rec;
        rec["length"] = o.length;
        rec["stabilizer_order"] = o.stabilizer_order;
        py::list pts;
        for (const auto& p : o.points) pts.append(p.str());
        rec["points"] = pts;
        out.append(rec);
    }
    return out;
}

py::list catalog_py() {
    py::list out;
    for (const auto& e : catalog_entries()) out.append(e.key);
    return out;
}

py::list verify_all_py(const std::vector<std::string>& only) {
    auto rep = verify_catalog(only);
    py::list out;
    for (const auto& item : rep.items) {
        py::dict d;
        d["key"] = item.key;
        d["check"] = item.what;
        d["pass"] = item.pass;
        d["detail"] = item.detail;
        out.append(d);
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_dpa, m) {
    m.doc() = "exact equivariant log canonical thresholds of del Pezzo surfaces";
    m.def("classify", &classify_py, py::arg("spec"), py::arg("subgroup") = "full",
          py::arg("n_max") = 6,
          "classify a catalog entry or spec document; returns the threshold data");
    m.def("germ_lct", &germ_lct_py, py::arg("poly"),
          "local threshold of a two-variable curve germ at the origin");
    m.def("invariants", &invariants_py, py::arg("spec"), py::arg("n"),
          py::arg("subgroup") = "full", "invariant curves in |-nK|");
    m.def("orbits", &orbits_py, py::arg("spec"), py::arg("k"), py::arg("subgroup") = "full",
          "orbits of length at most k");
    m.def("catalog", &catalog_py, "catalog entry keys");
    m.def("catalog_entry", [](const std::string& key) {
        const CatalogEntry* e = catalog_find(key);
        if (!e) throw py::key_error(key);
        return e->text;
    });
    m.def("verify_all", &verify_all_py, py::arg("only") = std::vector<std::string>{},
          "run catalog expectations; returns one record per check");
    py::register_exception<Error>(m, "DpaError");
}
