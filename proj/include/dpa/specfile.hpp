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

#include "dpa/engine.hpp"

namespace dpa {

/// Regression expectation attached to a catalog entry.
struct SpecExpectation {
    enum class Kind { Lct, InvariantCount };
    Kind kind = Kind::Lct;
    std::string group_ref = "full"; // "full" or a subgroup name
    bool interval = false;
    Rat lo, hi;        // Lct: value (lo == hi) or interval bounds
    int level = 0;     // InvariantCount
    int count = 0;     // InvariantCount (curves + families)
    std::string anchor;
};

/// Parsed surface-and-group description (the CLI input format).
struct SurfaceSpec {
    std::string label;
    std::string kind_str;
    int conductor = 1;
    std::vector<std::string> variables;
    std::vector<std::string> equations; // 0, 1 or 2 polynomial texts
    std::vector<std::pair<std::string, std::vector<std::string>>> generators;
    std::vector<std::pair<std::string, std::vector<std::string>>> subgroups;
    // p1xp1 products: per-factor generators as pairs of images in (x0,x1)
    std::vector<std::pair<std::string, std::vector<std::string>>> factor1, factor2;
    Hypotheses hyp;
    int lookup_degree = 0;
    int group_order = 1;
    std::string group_label;
    std::vector<SpecExpectation> expectations;
};

SurfaceSpec parse_spec(const std::string& text);
std::string serialize_spec(const SurfaceSpec& spec);

/// Validated surface from a spec (checks smoothness for the equation kinds).
Surface build_surface(const SurfaceSpec& spec, bool check_smooth = true);

/// Group from the named generator subset ("full" = all generators).
FiniteGroup build_group(const SurfaceSpec& spec, const Surface& X,
                        const std::string& group_ref);

ClassifyOptions build_options(const SurfaceSpec& spec, const Surface& X);

/// 2x2 matrices of a product factor.
std::vector<Matrix> build_factor(const SurfaceSpec& spec, const TowerPtr& tw, int which);

} // namespace dpa
