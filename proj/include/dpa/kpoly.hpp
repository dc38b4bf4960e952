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

#include "dpa/field.hpp"

namespace dpa {

/// Dense univariate polynomial over a field tower.
class KPoly {
  public:
    KPoly() = default;
    explicit KPoly(TowerPtr tw) : tw_(std::move(tw)) {}
    KPoly(TowerPtr tw, std::vector<FE> c) : tw_(std::move(tw)), c_(std::move(c)) { trim(); }
    static KPoly constant(const TowerPtr& tw, const FE& v);
    static KPoly monomial(const TowerPtr& tw, int deg, const FE& v);
    static KPoly x(const TowerPtr& tw);
    static KPoly from_qpoly(const TowerPtr& tw, const QPoly& p);

    const TowerPtr& tower() const { return tw_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return (int)c_.size() - 1; }
    FE coeff(int i) const;
    const std::vector<FE>& coeffs() const { return c_; }
    const FE& lc() const { return c_.back(); }

    KPoly operator+(const KPoly& o) const;
    KPoly operator-(const KPoly& o) const;
    KPoly operator*(const KPoly& o) const;
    KPoly operator-() const;
    KPoly scaled(const FE& f) const;
    bool operator==(const KPoly& o) const;

    KPoly derivative() const;
    FE eval(const FE& x) const;
    KPoly monic() const;
    KPoly shifted(const FE& s) const; // x -> x + s
    static std::pair<KPoly, KPoly> divmod(const KPoly& a, const KPoly& b);
    static KPoly gcd(KPoly a, KPoly b); // monic

    std::string str(const std::string& var = "x") const;

  private:
    void trim();
    TowerPtr tw_;
    std::vector<FE> c_;
};

struct KFactor {
    KPoly poly; // monic irreducible
    int multiplicity = 1;
};

struct KFactorization {
    FE unit;
    std::vector<KFactor> factors;
};

/// Irreducible factorization over the tower (Trager norm method through the
/// primitive element). Throws DegreeCap when the norm degree exceeds the cap.
KFactorization factor_k(const KPoly& f, int norm_degree_cap = 24);

enum class Irreducibility { Yes, No, Unknown };
/// Degree-capped irreducibility test; Unknown above the cap.
Irreducibility kpoly_irreducible(const KPoly& f, int norm_degree_cap = 24);

/// Roots of f lying in its tower. Set `complete` false on DegreeCap.
std::vector<FE> roots_in_tower(const KPoly& f, bool* complete = nullptr);

/// Squarefree decomposition over the tower.
struct KSquarefree {
    FE unit;
    std::vector<KFactor> parts;
};
KSquarefree squarefree_k(const KPoly& f);

/// Resultant of two tower polynomials.
FE resultant_k(const KPoly& a, const KPoly& b);

/// Roots of an irreducible polynomial, preferring a small cyclotomic
/// conductor enlargement, then one fresh simple extension when the tower's
/// slot is free; blocked factors go to `obstructions`.
std::vector<FE> roots_via_extension(const KPoly& f, std::vector<std::string>* obstructions);

} // namespace dpa
