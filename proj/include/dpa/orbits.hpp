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

#include "dpa/group.hpp"

namespace dpa {

struct OrbitRecord {
    std::vector<SurfacePoint> points; // deduplicated, sorted
    int length = 0;
    int stabilizer_order = 0;
    std::string how_found;
};

/// Full orbit of a point with exact deduplication.
OrbitRecord orbit_of(const Surface& X, const FiniteGroup& G, const SurfacePoint& p);

struct ShortOrbitScan {
    std::vector<OrbitRecord> orbits;            // complete when no obstructions
    std::vector<std::vector<WPoly>> fixed_curves; // pointwise-fixed curve certificates
    std::vector<std::string> obstructions;
    bool all_points = false; // trivial group marker
};

/// Complete list of orbits of length <= k (k <= 6) via index-<=k stabilizer
/// subgroups and their fixed loci.
ShortOrbitScan orbits_of_length_at_most(const Surface& X, const FiniteGroup& G, int k);

/// True when some point of X (or a pointwise-fixed curve) is fixed by the
/// whole group.
bool has_fixed_point(const Surface& X, const FiniteGroup& G);

} // namespace dpa
