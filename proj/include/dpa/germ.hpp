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

#include "dpa/surface.hpp"

namespace dpa {

/// Curve germ at the origin of a two-variable chart. `exact` germs are
/// honest polynomials; truncated ones carry their accuracy order.
struct CurveGerm {
    WPoly poly;
    int trunc_order = 0; // meaningful when !exact
    bool exact = true;

    int multiplicity() const { return poly.is_zero() ? -1 : poly.min_weighted_degree(); }
};

CurveGerm germ_from_string(const std::string& text, const TowerPtr& tw);

/// Extract the germ of a section at a smooth surface point through a chart.
CurveGerm extract_germ(const Surface& X, const WPoly& section, const SurfacePoint& p, int order);

struct GermClass {
    enum class Tag { Smooth, Ak, Ordinary, Other };
    Tag tag = Tag::Smooth;
    int k = 0;            // A_k index
    int multiplicity = 1; // germ multiplicity
    std::string detail;
};
/// Classification by multiplicity, tangent cone, and (for double points)
/// the order of the Weierstrass discriminant. Throws TruncationInsufficient
/// when a truncated germ is too short to decide.
GermClass classify_germ(const CurveGerm& g);

struct NewtonLct {
    bool ok = false;
    Rat lct;
    std::string reason; // set on NondegeneracyFailure
};
/// Newton-polygon lct: min(1, 1/t0) at the diagonal crossing, valid when all
/// compact faces are nondegenerate.
NewtonLct newton_lct(const CurveGerm& g);

/// One exceptional divisor of the resolution.
struct BlowupNode {
    int discrepancy = 1;    // a(E)
    Rat mult;               // mult_E of the pulled-back divisor
    std::vector<int> parents; // exceptional divisors through the blown point
    int depth = 1;
};

struct ResolutionResult {
    Rat lct;               // min over components and exceptional divisors
    std::vector<BlowupNode> tree;
    bool hit_depth_cap = false;
};

/// Log resolution of sum(coeff_i * germ_i) by point blow-ups; the germs must
/// live in the same chart. Returns the lct of the local log pair and the
/// certificate tree. Throws TruncationInsufficient / DepthCap.
ResolutionResult resolve_and_lct(const std::vector<std::pair<CurveGerm, Rat>>& components,
                                 int depth_cap = 16);

/// Bivariate gcd / squarefree decomposition (exact polynomials).
WPoly bivariate_gcd(const WPoly& a, const WPoly& b, int uvar, int vvar);
std::vector<std::pair<WPoly, int>> bivariate_squarefree(const WPoly& f, int uvar, int vvar);

} // namespace dpa
