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

#include "dpa/germ.hpp"
#include "dpa/invariant.hpp"

namespace dpa {

struct PairAnalysis {
    Rat lct;
    GermClass worst;        // worst germ among the singular points analyzed
    bool worst_valid = false;
    std::vector<std::string> notes;
    std::vector<std::string> point_reports; // point -> local lct lines
};

/// Global lct of the log pair (X, sum a_i C_i): locates every non-snc point
/// of the support (component singularities and pairwise intersections),
/// resolves the local germs, and folds in the component-coefficient caps.
/// Throws ExtensionRequired when a singular point cannot be extracted.
PairAnalysis log_pair_lct(const Surface& X,
                          const std::vector<std::pair<WPoly, Rat>>& components);

/// Split monomial factors and binary forms into reduced components with
/// multiplicities; non-binary residues stay whole.
std::vector<std::pair<WPoly, int>> light_factor(const Surface& X, const WPoly& section);

struct PencilScan {
    bool decided = false;
    Rat min_member_lct;      // min over all members of lct(X, member)
    GermClass worst;         // worst germ class over all members
    bool worst_valid = false;
    std::vector<std::string> notes;
};

/// Worst-member analysis of the pencil {s1 + c*s2 : c} + {s2} on the
/// double-cover kinds with t-free sections (reduces members to branch
/// multiplicity data of a binary form). Undecided otherwise.
PencilScan scan_pencil(const Surface& X, const WPoly& s1, const WPoly& s2);

/// lct of (X, member) for a single t-free member on the double-cover kinds;
/// exact germ data from root multiplicities. nullopt if the shape is not
/// supported.
std::optional<PairAnalysis> double_cover_member(const Surface& X, const WPoly& section);

} // namespace dpa
