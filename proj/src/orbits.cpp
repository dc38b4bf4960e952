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
#include "dpa/orbits.hpp"

#include <algorithm>
#include <set>

namespace dpa {

OrbitRecord orbit_of(const Surface& X, const FiniteGroup& G, const SurfacePoint& p) {
    OrbitRecord rec;
    std::set<SurfacePoint> pts;
    int stab = 0;
    SurfacePoint base = X.normalize_point(p.coords);
    for (int i = 0; i < G.size(); ++i) {
        SurfacePoint q = G.elem(i).apply(X, base);
        if (q == base) ++stab;
        pts.insert(std::move(q));
    }
    rec.points.assign(pts.begin(), pts.end());
    rec.length = (int)rec.points.size();
    rec.stabilizer_order = stab;
    if (rec.length * stab != G.size())
        throw Error(ErrKind::Internal, "orbit-stabilizer mismatch");
    return rec;
}

ShortOrbitScan orbits_of_length_at_most(const Surface& X, const FiniteGroup& G, int k) {
    ShortOrbitScan out;
    if (G.size() <= k) {
        out.all_points = true;
        return out;
    }
    std::vector<SurfacePoint> seen; // equality-based, towers may differ
    auto seen_before = [&](const SurfacePoint& p) {
        for (const auto& q : seen)
            if (q == p) return true;
        return false;
    };
    auto consider = [&](const SurfacePoint& p, const std::string& how) {
        if (!X.contains(p)) return;
        if (seen_before(p)) return;
        OrbitRecord rec = orbit_of(X, G, p);
        for (const auto& q : rec.points) seen.push_back(q);
        if (rec.length <= k) {
            rec.how_found = how;
            out.orbits.push_back(std::move(rec));
        }
    };
    for (int idx = 1; idx <= k; ++idx) {
        if (G.size() % idx != 0) continue;
        for (const auto& H : G.subgroups_of_index(idx)) {
            // generators of the subgroup: greedy cover
            std::vector<int> gens;
            std::vector<int> closed = {G.identity()};
            for (int e : H) {
                if (std::find(closed.begin(), closed.end(), e) != closed.end()) continue;
                gens.push_back(e);
                closed = G.subgroup_closure(gens);
                if ((int)closed.size() == (int)H.size()) break;
            }
            if (gens.empty()) continue; // trivial subgroup: index 1 and |G| = 1
            auto fix = fixed_locus(X, G, gens);
            for (const auto& o : fix.obstructions) out.obstructions.push_back(o);
            for (const auto& p : fix.points)
                consider(p, "fixed point of an index-" + std::to_string(idx) + " subgroup");
            for (const auto& conds : fix.curve_conditions) {
                // pointwise-fixed curve: every point has stabilizer >= H, so
                // its orbit length <= idx <= k: a positive-dimensional family
                out.fixed_curves.push_back(conds);
            }
        }
    }
    std::sort(out.orbits.begin(), out.orbits.end(), [](const OrbitRecord& a, const OrbitRecord& b) {
        if (a.length != b.length) return a.length < b.length;
        if (a.points.size() != b.points.size()) return a.points.size() < b.points.size();
        for (size_t i = 0; i < a.points.size(); ++i) {
            if (a.points[i] == b.points[i]) continue;
            return a.points[i] < b.points[i];
        }
        return false;
    });
    // dedupe orbits that were found through different subgroups (towers of
    // distinct records may differ, so compare sets pairwise by value)
    std::vector<OrbitRecord> uniq;
    for (auto& rec : out.orbits) {
        bool dup = false;
        for (const auto& kept : uniq) {
            if (kept.length != rec.length) continue;
            bool same = true;
            for (const auto& p : rec.points) {
                bool found = false;
                for (const auto& q : kept.points)
                    if (p == q) { found = true; break; }
                if (!found) { same = false; break; }
            }
            if (same) { dup = true; break; }
        }
        if (!dup) uniq.push_back(std::move(rec));
    }
    out.orbits = std::move(uniq);
    std::sort(out.obstructions.begin(), out.obstructions.end());
    out.obstructions.erase(std::unique(out.obstructions.begin(), out.obstructions.end()),
                           out.obstructions.end());
    return out;
}

bool has_fixed_point(const Surface& X, const FiniteGroup& G) {
    if (G.size() == 1) return true;
    auto fix = fixed_locus(X, G, G.generator_indices());
    if (!fix.points.empty()) return true;
    if (!fix.curve_conditions.empty()) return true; // pointwise-fixed curve
    if (!fix.obstructions.empty())
        throw Error(ErrKind::ExtensionRequired,
                    "fixed-point search unresolved: " + fix.obstructions[0]);
    return false;
}

} // namespace dpa
