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

/// Action of every group element on a monomial basis of sections,
/// reduced modulo the surface ideal.
struct InducedRep {
    int level = 0;
    std::vector<Expo> basis;
    std::vector<Matrix> matrices; // indexed by group element
    bool system_stable = true;    // false when some element moves the class
};

InducedRep induced_matrices(const Surface& X, const FiniteGroup& G, int n);
InducedRep induced_on_basis(const Surface& X, const FiniteGroup& G,
                            const std::vector<Expo>& basis, int level_tag);

/// One invariant curve (or a positive-dimensional family of them).
struct InvariantCurve {
    int level = 0;
    WPoly section;                 // normalized cutting form (a family member
                                   // when family_dim >= 2)
    int family_dim = 1;
    std::vector<WPoly> family_basis; // full eigenspace basis when >= 2
    std::string character;
};

struct InvariantScan {
    std::vector<InvariantCurve> curves;    // one-dimensional eigenspaces
    std::vector<InvariantCurve> families;  // eigenspaces of dimension >= 2
    std::vector<std::string> obstructions; // cocycle or factorization issues
    std::vector<std::string> notes;
    bool complete = true;
    bool notes_fallback = false; // eigen-intersection route was used
};

/// Complete enumeration of group-stable lines in the section space:
/// closes the matrix group generated by the induced matrices and sweeps all
/// its linear characters, enlarging the coefficient field as needed.
InvariantScan semi_invariant_lines(const Surface& X, const FiniteGroup& G, int n);
InvariantScan scan_system(const Surface& X, const FiniteGroup& G,
                          const std::vector<Expo>& basis, int level_tag);

/// Common zero locus of sections on X.
struct BasePoints {
    std::vector<SurfacePoint> points;
    bool finite = true;
    std::vector<std::string> obstructions;
};
BasePoints base_points(const Surface& X, const std::vector<WPoly>& sections);

WPoly section_from_expo(const Surface& X, const Expo& e);

} // namespace dpa
