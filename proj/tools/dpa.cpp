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
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "dpa/catalog.hpp"
#include "dpa/germ.hpp"

using namespace dpa;
using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrKind::Parse, "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

SurfaceSpec load_spec(const std::string& key_or_path) {
    if (const CatalogEntry* e = catalog_find(key_or_path)) return parse_spec(e->text);
    return parse_spec(read_file(key_or_path));
}

json result_to_json(const LctResult& r) {
    json j;
    j["exact"] = r.exact;
    if (r.has_lower) j["lower"] = r.lower.get_str();
    if (r.has_upper) j["upper"] = r.upper.get_str();
    j["rule"] = r.rule;
    j["certificate"] = r.certificate;
    return j;
}

int run_classify(const std::string& target, const std::string& subgroup,
                 const std::string& format, int n_max) {
    SurfaceSpec spec = load_spec(target);
    Surface X = build_surface(spec);
    FiniteGroup G = build_group(spec, X, subgroup);
    ClassifyOptions opt = build_options(spec, X);
    opt.n_max = n_max;
    LctResult res = classify(X, G, opt);
    if (format == "machine") {
        json j = result_to_json(res);
        j["label"] = spec.label;
        j["group"] = subgroup;
        j["group_order"] = G.size();
        j["group_structure"] = G.structure_label();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (spec.label.empty() ? target : spec.label) << " with group " << subgroup
                  << " (order " << G.size() << ", " << G.structure_label() << ")\n";
        std::cout << "  " << res.str() << "\n";
        for (const auto& c : res.certificate) std::cout << "  - " << c << "\n";
    }
    return res.exact || (res.has_lower && res.has_upper) ? 0 : 1;
}

int run_invariants(const std::string& target, const std::string& subgroup, int n,
                   const std::string& format) {
    SurfaceSpec spec = load_spec(target);
    Surface X = build_surface(spec);
    FiniteGroup G = build_group(spec, X, subgroup);
    auto scan = semi_invariant_lines(X, G, n);
    if (format == "machine") {
        json j;
        j["label"] = spec.label;
        j["level"] = n;
        j["complete"] = scan.complete;
        j["curves"] = json::array();
        for (const auto& c : scan.curves) j["curves"].push_back(c.section.str());
        j["families"] = json::array();
        for (const auto& f : scan.families) {
            json fam;
            fam["dimension"] = f.family_dim;
            fam["basis"] = json::array();
            for (const auto& s : f.family_basis) fam["basis"].push_back(s.str());
            j["families"].push_back(fam);
        }
        j["obstructions"] = scan.obstructions;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "invariant curves at level " << n << (scan.complete ? "" : " (incomplete)")
                  << ":\n";
        for (const auto& c : scan.curves) std::cout << "  " << c.section.str() << "\n";
        for (const auto& f : scan.families)
            std::cout << "  family of dimension " << f.family_dim << " through "
                      << f.section.str() << "\n";
        if (scan.curves.empty() && scan.families.empty()) std::cout << "  (none)\n";
        for (const auto& o : scan.obstructions) std::cout << "  obstruction: " << o << "\n";
    }
    return scan.complete ? 0 : 1;
}

int run_orbits(const std::string& target, const std::string& subgroup, int k,
               const std::string& format) {
    SurfaceSpec spec = load_spec(target);
    Surface X = build_surface(spec);
    FiniteGroup G = build_group(spec, X, subgroup);
    auto scan = orbits_of_length_at_most(X, G, k);
    if (format == "machine") {
        json j;
        j["label"] = spec.label;
        j["k"] = k;
        j["all_points"] = scan.all_points;
        j["orbits"] = json::array();
        for (const auto& o : scan.orbits) {
            json jo;
            jo["length"] = o.length;
            jo["stabilizer_order"] = o.stabilizer_order;
            jo["points"] = json::array();
            for (const auto& p : o.points) jo["points"].push_back(p.str());
            j["orbits"].push_back(jo);
        }
        j["fixed_curves"] = scan.fixed_curves.size();
        j["obstructions"] = scan.obstructions;
        std::cout << j.dump(2) << "\n";
    } else {
        if (scan.all_points) {
            std::cout << "every orbit has length <= " << k << " (tiny group)\n";
            return 0;
        }
        std::cout << "orbits of length <= " << k << ":\n";
        for (const auto& o : scan.orbits) {
            std::cout << "  length " << o.length << " (stabilizer order " << o.stabilizer_order
                      << "): ";
            for (size_t i = 0; i < o.points.size(); ++i)
                std::cout << (i ? ", " : "") << o.points[i].str();
            std::cout << "\n";
        }
        if (scan.orbits.empty()) std::cout << "  (none)\n";
        for (size_t i = 0; i < scan.fixed_curves.size(); ++i)
            std::cout << "  pointwise-fixed curve certificate #" << (i + 1) << "\n";
        for (const auto& o : scan.obstructions) std::cout << "  obstruction: " << o << "\n";
    }
    return scan.obstructions.empty() ? 0 : 1;
}

int run_germ(const std::string& text, const std::string& format, int depth_cap) {
    CurveGerm g = germ_from_string(text, Tower::rationals());
    auto nres = newton_lct(g);
    auto rres = resolve_and_lct({{g, rat(1)}}, depth_cap);
    if (format == "machine") {
        json j;
        j["germ"] = text;
        j["lct"] = rres.lct.get_str();
        if (nres.ok) j["newton_lct"] = nres.lct.get_str();
        else j["newton_failure"] = nres.reason;
        json tree = json::array();
        for (const auto& n : rres.tree) {
            json jn;
            jn["discrepancy"] = n.discrepancy;
            jn["multiplicity"] = n.mult.get_str();
            jn["parents"] = n.parents;
            tree.push_back(jn);
        }
        j["blowup_tree"] = tree;
        try {
            auto cls = classify_germ(g);
            switch (cls.tag) {
            case GermClass::Tag::Smooth: j["class"] = "smooth"; break;
            case GermClass::Tag::Ak: j["class"] = "A" + std::to_string(cls.k); break;
            case GermClass::Tag::Ordinary:
                j["class"] = "ordinary multiplicity " + std::to_string(cls.multiplicity);
                break;
            case GermClass::Tag::Other: j["class"] = "other: " + cls.detail; break;
            }
        } catch (const Error&) {
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "lct = " << rres.lct.get_str();
        if (nres.ok) {
            std::cout << " (newton boundary agrees: " << (nres.lct == rres.lct ? "yes" : "NO")
                      << ")";
        }
        std::cout << "\n";
        std::cout << "blow-ups: " << rres.tree.size() << "\n";
    }
    return 0;
}

int run_verify(const std::string& format) {
    auto rep = verify_catalog();
    if (format == "machine") {
        json j = json::array();
        for (const auto& item : rep.items) {
            json ji;
            ji["key"] = item.key;
            ji["check"] = item.what;
            ji["pass"] = item.pass;
            ji["detail"] = item.detail;
            j.push_back(ji);
        }
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& item : rep.items)
            std::cout << (item.pass ? "PASS" : "FAIL") << "  " << item.key << "  " << item.what
                      << "  " << item.detail << "\n";
        std::cout << (rep.all_pass ? "all catalog expectations hold" : "MISMATCHES FOUND")
                  << "\n";
    }
    return rep.all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact equivariant log canonical thresholds of del Pezzo surfaces"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "text|machine")->check(CLI::IsMember({"text", "machine"}));
    int n_max = 6;
    app.add_option("--n-max", n_max, "deepest anticanonical level scanned");
    int depth_cap = 16;
    app.add_option("--depth-cap", depth_cap, "blow-up depth cap for germ resolution");

    std::string target, subgroup = "full", germ_text, show_key;
    int level = 1, k = 3;

    auto* cls = app.add_subcommand("classify", "equivariant threshold of a catalog entry or file");
    cls->add_option("spec", target, "catalog key or spec file")->required();
    cls->add_option("--subgroup", subgroup, "named subgroup (default: full)");

    auto* inv = app.add_subcommand("invariants", "invariant curves in |-nK|");
    inv->add_option("spec", target)->required();
    inv->add_option("-n", level, "level")->required();
    inv->add_option("--subgroup", subgroup);

    auto* orb = app.add_subcommand("orbits", "orbits of bounded length");
    orb->add_option("spec", target)->required();
    orb->add_option("-k", k, "orbit length bound")->required();
    orb->add_option("--subgroup", subgroup);

    auto* germ = app.add_subcommand("germ-lct", "local threshold of a plane curve germ");
    germ->add_option("poly", germ_text, "two-variable polynomial in x, y")->required();

    auto* cat = app.add_subcommand("catalog", "list or show catalog entries");
    auto* cat_list = cat->add_subcommand("list", "list entry keys");
    auto* cat_show = cat->add_subcommand("show", "print one entry");
    cat_show->add_option("key", show_key)->required();

    auto* ver = app.add_subcommand("verify-all", "run every catalog expectation");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cls->parsed()) return run_classify(target, subgroup, format, n_max);
        if (inv->parsed()) return run_invariants(target, subgroup, level, format);
        if (orb->parsed()) return run_orbits(target, subgroup, k, format);
        if (germ->parsed()) return run_germ(germ_text, format, depth_cap);
        if (ver->parsed()) return run_verify(format);
        if (cat->parsed()) {
            if (cat_list->parsed()) {
                for (const auto& e : catalog_entries()) std::cout << e.key << "\n";
                return 0;
            }
            if (cat_show->parsed()) {
                const CatalogEntry* e = catalog_find(show_key);
                if (!e) {
                    std::cerr << "unknown catalog key: " << show_key << "\n";
                    return 2;
                }
                std::cout << e->text;
                return 0;
            }
            std::cerr << "catalog needs 'list' or 'show <key>'\n";
            return 2;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == ErrKind::Parse || e.kind() == ErrKind::WeightMismatch ||
                       e.kind() == ErrKind::DoesNotPreserveIdeal
                   ? 2
                   : 1;
    }
    return 2;
}
