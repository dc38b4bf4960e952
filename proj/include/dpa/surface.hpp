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

#include "dpa/wpoly.hpp"

namespace dpa {

enum class SurfaceKind {
    P2,          // projective plane
    P1xP1,       // product of two lines; ring (x0,x1,y0,y1), bihomogeneous
    Cubic,       // cubic surface in P3
    QuadricPair, // intersection of two (diagonal) quadrics in P4
    Quartic1112, // t^2 = f4(x,y,z) in P(1,1,1,2)
    Sextic1123,  // t^2 = z^3 + z f4(x,y) + f6(x,y) in P(1,1,2,3)
    Lookup,      // blow-up of P2 described only by its degree
};

/// Point with canonical homogeneous coordinates (kind-aware normalization).
struct SurfacePoint {
    std::vector<FE> coords;
    bool operator==(const SurfacePoint& o) const;
    bool operator<(const SurfacePoint& o) const;
    std::size_t hash() const;
    std::string str() const;
};

struct SmoothnessReport {
    bool smooth = false;
    std::optional<SurfacePoint> witness;   // a singular point when found
    std::string obstruction;               // nonempty when undecided
    bool decided = true;
};

/// Two local parameters at a smooth point plus truncated series images of
/// every ambient coordinate; substituting `images` into an ambient polynomial
/// yields its germ at the point in the 2-variable germ ring.
struct Chart {
    WRingPtr germ_ring;          // two weight-1 variables "s1","s2"
    std::vector<WPoly> images;   // per ambient variable
    std::vector<int> param_vars; // ambient indices behind s1, s2
    int order = 0;               // series accurate through this total degree
};

class Surface {
  public:
    static Surface p2(const TowerPtr& tw);
    static Surface p1xp1(const TowerPtr& tw);
    static Surface cubic(const WPoly& eq);
    static Surface quartic_double_plane(const WPoly& eq);   // t^2 - f4 form
    static Surface sextic_cone(const WPoly& eq);            // t^2 - z^3 - ... form
    static Surface quadric_pair(const WPoly& q1, const WPoly& q2);
    static Surface lookup(int degree);

    SurfaceKind kind() const { return kind_; }
    const WRingPtr& ring() const { return ring_; }
    const TowerPtr& tower() const { return tw_; }
    const std::vector<WPoly>& equations() const { return eqs_; }

    /// K_X^2.
    int degree() const;

    SmoothnessReport is_smooth() const;

    /// Monomial basis of H^0(-nK) as exponent vectors (reduced normal forms).
    std::vector<Expo> anticanonical_basis(int n) const;
    static int anticanonical_dim(int K2, int n) { return n * (n + 1) * K2 / 2 + 1; }

    /// Normal form modulo the defining equations (t-power / eliminated-square
    /// reduction for the weighted kinds, leading-term division for the cubic).
    WPoly reduce(const WPoly& p) const;

    bool contains(const SurfacePoint& p) const;
    SurfacePoint normalize_point(std::vector<FE> coords) const;

    /// Exact local chart at a smooth point; series solved to `order`.
    Chart local_chart(const SurfacePoint& p, int order) const;
    /// Germ at p of the curve cut by `section` (restriction through the chart).
    WPoly germ_of_section(const WPoly& section, const Chart& chart) const;

    int lookup_degree() const { return lookup_degree_; }

  private:
    Surface() = default;
    void validate_equations() const;
    // quadric pair bookkeeping: the two variables eliminated by the diagonal
    // relations, and the relation polynomials x_i^2 = ...
    void build_pair_reduction();

    SurfaceKind kind_ = SurfaceKind::Lookup;
    WRingPtr ring_;
    TowerPtr tw_;
    std::vector<WPoly> eqs_;
    int lookup_degree_ = 0;
    int pair_elim_[2] = {-1, -1};
    std::vector<WPoly> pair_rhs_; // substitutes for x_i^2 of the eliminated pair
};

/// Solve a zero-dimensional polynomial system on an affine chart by iterated
/// resultants with exact verification. Returns the points found in the tower;
/// appends irreducible factors blocking root extraction to `obstructions`.
std::vector<std::vector<FE>> solve_affine_system(const std::vector<WPoly>& polys,
                                                 const std::vector<int>& vars,
                                                 const TowerPtr& tw,
                                                 std::vector<std::string>* obstructions);

} // namespace dpa
