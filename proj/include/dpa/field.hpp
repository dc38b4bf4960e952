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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dpa/qpoly.hpp"

namespace dpa {

class Tower;
using TowerPtr = std::shared_ptr<const Tower>;

/// Exact element of Q(zeta_m), optionally extended by one root u of an
/// irreducible p(u). Representation: polynomial in u of degree < deg p,
/// whose coefficients are polynomials in zeta reduced mod the m-th
/// cyclotomic polynomial. Always canonical; equality is coefficient equality.
class FE {
  public:
    FE() = default; // zero over Q
    FE(const TowerPtr& tw, std::vector<QPoly> c);

    static FE from_rat(const TowerPtr& tw, const Rat& r);
    const TowerPtr& tower() const { return tw_; }
    const std::vector<QPoly>& parts() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rat rat_value() const; // requires is_rational

    FE operator+(const FE& o) const;
    FE operator-(const FE& o) const;
    FE operator*(const FE& o) const;
    FE operator-() const;
    FE inverse() const; // throws on zero
    FE operator/(const FE& o) const { return *this * o.inverse(); }
    FE pow(long e) const;
    bool operator==(const FE& o) const;
    bool operator!=(const FE& o) const { return !(*this == o); }
    bool operator<(const FE& o) const; // deterministic total order

    std::size_t hash() const;
    std::string str() const;

    /// Multiplicative order if this is a root of unity (bounded probe),
    /// std::nullopt otherwise.
    std::optional<int> torsion_order(int bound = 512) const;

  private:
    friend class Tower;
    void normalize();
    TowerPtr tw_;           // null means plain Q
    std::vector<QPoly> c_;  // u-power slots; zeta-polys reduced mod Phi_m
};

/// Field tower handle: Q(zeta_m) with at most one simple extension.
/// Immutable after creation.
class Tower : public std::enable_shared_from_this<Tower> {
  public:
    static TowerPtr rationals();
    static TowerPtr cyclotomic(int m);
    /// Adjoin a root of p(u) (coefficients over this tower's base part;
    /// this tower must not already carry an extension). Checks
    /// irreducibility by the norm method; throws NotIrreducible/DegreeCap.
    TowerPtr extended(const std::vector<FE>& ext_minpoly_coeffs,
                      const std::string& gen_name = "u") const;

    int conductor() const { return m_; }
    int phi() const { return phi_; }
    bool has_ext() const { return ext_deg_ > 1; }
    int ext_degree() const { return ext_deg_; }
    int abs_degree() const { return phi_ * ext_deg_; }
    const QPoly& cyclo() const { return cyclo_; }
    const std::vector<QPoly>& ext_minpoly() const { return ext_minpoly_; }
    const std::string& ext_gen_name() const { return ext_name_; }

    FE zero() const;
    FE one() const;
    FE from_rat(const Rat& r) const;
    FE zeta() const;                  // primitive m-th root of unity
    FE zeta_power(long k) const;
    FE u_gen() const;                 // extension generator (requires ext)
    /// reduce an arbitrary polynomial-in-zeta expression
    FE from_zeta_poly(const QPoly& p) const;

    /// Primitive D-th root of unity in this tower, or nullopt
    /// (exists iff D divides lcm(2, m)).
    std::optional<FE> root_of_unity(int D) const;
    /// Smallest conductor m' >= m, m | m', whose cyclotomic field contains
    /// a primitive D-th root.
    static int enlarged_conductor(int m, int D);

    bool same_as(const Tower& o) const;

    // --- primitive element (only meaningful when has_ext) ---
    /// Minimal polynomial over Q of the whole tower's primitive generator
    /// (zeta itself when no extension).
    const QPoly& primitive_minpoly() const { return prim_minpoly_; }
    /// Express an element as a Q-polynomial in the primitive generator.
    QPoly to_primitive(const FE& e) const;
    /// Inverse of to_primitive.
    FE from_primitive(const QPoly& p) const;

  private:
    Tower() = default;
    void build_primitive();
    FE make(std::vector<QPoly> c) const;

    int m_ = 1;
    int phi_ = 1;
    int ext_deg_ = 1;
    QPoly cyclo_;                    // Phi_m
    std::vector<QPoly> ext_minpoly_; // monic, coeffs = zeta-polys; empty if no ext
    std::string ext_name_ = "u";

    // primitive element gamma = zeta + prim_shift_ * u (or zeta)
    int prim_shift_ = 0;
    QPoly prim_minpoly_;
    std::vector<std::vector<Rat>> prim_basis_solver_; // inverse matrix: basis -> gamma powers
};

/// Embed an element into a compatible larger tower (conductor multiple,
/// same or embeddable extension). Throws ExtensionRequired when impossible.
FE embed(const FE& e, const TowerPtr& target);

/// Common tower for two elements (embeds as needed).
TowerPtr join_towers(const TowerPtr& a, const TowerPtr& b);

} // namespace dpa
