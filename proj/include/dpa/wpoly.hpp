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

#include <map>
#include <optional>

#include "dpa/kpoly.hpp"
#include "dpa/matrix.hpp"

namespace dpa {

/// Variable names with positive integer weights. Immutable and shared.
struct WRing {
    std::vector<std::string> vars;
    std::vector<int> weights;

    int index_of(const std::string& name) const;
    bool operator==(const WRing& o) const { return vars == o.vars && weights == o.weights; }
};
using WRingPtr = std::shared_ptr<const WRing>;

WRingPtr make_ring(std::vector<std::string> vars, std::vector<int> weights);

using Expo = std::vector<int>;

/// Graded-lex term order: weighted degree first, then exponent vector.
struct TermOrder {
    const WRing* ring;
    bool operator()(const Expo& a, const Expo& b) const;
};

/// Weighted multivariate polynomial with exact coefficients.
/// No zero coefficients are stored; term order is deterministic.
class WPoly {
  public:
    WPoly() = default;
    WPoly(WRingPtr ring, TowerPtr tw);

    static WPoly zero(const WRingPtr& ring, const TowerPtr& tw);
    static WPoly constant(const WRingPtr& ring, const TowerPtr& tw, const FE& c);
    static WPoly variable(const WRingPtr& ring, const TowerPtr& tw, int var);
    static WPoly monomial(const WRingPtr& ring, const TowerPtr& tw, const Expo& e, const FE& c);

    const WRingPtr& ring() const { return ring_; }
    const TowerPtr& tower() const { return tw_; }
    const std::map<Expo, FE, TermOrder>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return (int)terms_.size(); }

    int weighted_degree() const;           // max over terms; -1 for zero
    int min_weighted_degree() const;       // min over terms
    bool is_homogeneous() const;
    int degree_in(int var) const;
    int min_degree_in(int var) const;      // order of vanishing in var
    bool depends_on(int var) const { return degree_in(var) > 0; }

    WPoly operator+(const WPoly& o) const;
    WPoly operator-(const WPoly& o) const;
    WPoly operator*(const WPoly& o) const;
    WPoly operator-() const;
    WPoly scaled(const FE& f) const;
    WPoly pow(int e) const;
    bool operator==(const WPoly& o) const;
    bool operator!=(const WPoly& o) const { return !(*this == o); }

    FE coeff(const Expo& e) const;
    FE leading_coeff() const;  // w.r.t. the term order
    Expo leading_expo() const;

    WPoly derivative(int var) const;
    FE eval(const std::vector<FE>& point) const;
    /// Full substitution; images[i] replaces variable i. When `check_weights`,
    /// each image must be homogeneous of the variable's weight (WeightMismatch).
    WPoly substitute(const std::vector<WPoly>& images, bool check_weights = true) const;
    /// Substitute a single variable, keep the rest.
    WPoly substitute_var(int var, const WPoly& image) const;
    /// Move coefficients into a (larger) tower.
    WPoly retower(const TowerPtr& target) const;
    /// Keep only terms of total degree <= bound (for truncated series work).
    WPoly truncate_total_degree(int bound) const;

    /// View as univariate in `var`: map degree -> coefficient polynomial.
    std::map<int, WPoly> univariate_in(int var) const;
    /// Exact division; throws Internal if not divisible.
    static WPoly divide_exact(const WPoly& a, const WPoly& b);

    std::string str() const;
    std::size_t hash() const;

  private:
    void add_term(const Expo& e, const FE& c);
    WRingPtr ring_;
    TowerPtr tw_;
    std::map<Expo, FE, TermOrder> terms_;
};

/// All monomial exponents of weighted degree d, in canonical order.
std::vector<Expo> graded_monomials(const WRing& ring, int d);

/// Classical resultant with respect to one variable (Sylvester determinant,
/// fraction-free elimination). Result does not involve `var`.
WPoly wpoly_resultant(const WPoly& p, const WPoly& q, int var);

/// Squarefree decomposition with respect to `var` for polynomials that are
/// univariate in `var` or binary forms in (`var`, one other variable).
/// parts multiplied with multiplicities give p up to a monomial unit.
struct WSquarefreePart {
    WPoly poly;
    int multiplicity;
};
struct WSquarefree {
    WPoly unit; // monomial * constant
    std::vector<WSquarefreePart> parts;
};
WSquarefree wpoly_squarefree(const WPoly& p, int var);

/// Convert a polynomial involving only `var` (and constants) to a KPoly.
KPoly wpoly_to_kpoly(const WPoly& p, int var);
WPoly kpoly_to_wpoly(const KPoly& p, const WRingPtr& ring, int var);

/// Dehomogenize a binary form in (x, y) to a KPoly in x (set y = 1).
KPoly binary_dehomogenize(const WPoly& p, int xvar, int yvar);

/// Gcd of two binary forms in the same two variables (monic-normalized).
WPoly binary_gcd(const WPoly& a, const WPoly& b, int xvar, int yvar);

/// Parse the polynomial text syntax: identifiers, ^, optional *, zeta(m),
/// rational constants. Throws Parse with location info.
WPoly parse_wpoly(const std::string& text, const WRingPtr& ring, const TowerPtr& tw);

} // namespace dpa
