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
#pragma once

#include "dpa/curves.hpp"
#include "dpa/orbits.hpp"

namespace dpa {

/// Exact value or certified interval for the equivariant global threshold.
struct LctResult {
    Rat lower = rat(-1000000);
    Rat upper = rat(1000000);
    bool exact = false;
    bool has_lower = false;
    bool has_upper = false;
    std::string rule;
    std::vector<std::string> certificate;

    Rat value() const;
    void set_exact(const Rat& v, const std::string& r);
    void fold_lower(const Rat& v, const std::string& why);
    void fold_upper(const Rat& v, const std::string& why);
    std::string str() const;
};

/// Catalog-attested facts the engine may consume but not derive.
struct Hypotheses {
    bool picard_generated_by_K = false;
    std::string attestation;
};

/// The trivial-group threshold table, with the existence scans
/// (cuspidal / tacnodal member, triple-tangent-plane point) run exactly.
LctResult gafa_lct_trivial(const Surface& X);

/// Threshold of the projective line under a finite matrix group:
/// (smallest orbit length) / 2.
Rat lct_p1(const TowerPtr& tw, const std::vector<Matrix>& gens2x2);

struct UpperScanItem {
    int level;
    WPoly section;
    Rat upper;
    std::string note;
};
struct UpperScan {
    bool found = false;
    Rat upper = rat(1000000);
    std::vector<UpperScanItem> items;
    std::vector<std::string> notes;
};
/// Upper bounds from invariant curves at levels n <= n_max.
UpperScan lct_upper_from_invariant_curves(const Surface& X, const FiniteGroup& G, int n_max = 6);

struct ClassifyOptions {
    int n_max = 6;
    Hypotheses hyp;
    // product group data for P1xP1 (2x2 matrix generators per factor)
    bool product = false;
    std::vector<Matrix> factor1, factor2;
    // descriptor surfaces: abstract group order
    int lookup_group_order = 1;
    std::string lookup_group_label;
};

/// The classification decision tree over the modeled kinds.
LctResult classify(const Surface& X, const FiniteGroup& G, const ClassifyOptions& opt = {});

/// Descriptor-only classification for the blown-up kinds (degrees 5..8).
LctResult classify_lookup(int degree, int group_order, const std::string& label);

/// Product classification on P1xP1.
LctResult classify_product(const TowerPtr& tw, const std::vector<Matrix>& g1,
                           const std::vector<Matrix>& g2);

} // namespace dpa
