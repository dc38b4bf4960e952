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

#include <unordered_map>

#include "dpa/surface.hpp"

namespace dpa {

/// Projective automorphism given by per-variable image polynomials,
/// canonically normalized modulo weighted rescaling.
struct PAut {
    std::vector<WPoly> images;

    bool operator==(const PAut& o) const;
    std::size_t hash() const;
    std::string str() const;

    /// Point map.
    SurfacePoint apply(const Surface& X, const SurfacePoint& p) const;
    /// Pullback of a section: substitute images.
    WPoly pullback(const WPoly& section) const;
};

/// Canonical representative modulo x_i -> lambda^{w_i} x_i (block-wise for
/// the product surface).
PAut normalize_paut(const Surface& X, PAut g);

/// Composition as point maps: (a*b)(p) = a(b(p)).
PAut compose_paut(const PAut& a, const PAut& b);

/// Identity map on the surface's ambient space.
PAut identity_paut(const Surface& X);

/// Checks that g maps the surface ideal to itself (unit multiple for
/// hypersurfaces, 2-dim span for the quadric pair).
bool preserves_ideal(const Surface& X, const PAut& g);

/// A linear character of the group, evaluated through the abelianization.
/// Value on element e is zeta_D^(value_num(e)).
struct GroupCharacter {
    int root_order;              // D
    std::vector<long> value_num; // per element index, exponent of zeta_D
};

/// Word data of a closed group: BFS-tree exponent words over a generating
/// set plus the back-edge relation vectors (a complete presentation of the
/// abelianization).
struct WordPresentation {
    int n = 0;
    int id = 0;
    int r = 0;
    std::vector<std::vector<long long>> element_word;
    std::vector<std::vector<long long>> relations;
};

/// All linear characters determined by a word presentation.
std::vector<GroupCharacter> characters_from_presentation(const WordPresentation& wp);

/// Closed finite group of projective automorphisms of a fixed surface.
class FiniteGroup {
  public:
    /// BFS closure from generators. Throws DoesNotPreserveIdeal /
    /// NotFiniteWithinBound.
    static FiniteGroup closure(const Surface& X, const std::vector<PAut>& gens,
                               int bound = 1500);

    const Surface& surface() const { return *X_; }
    int size() const { return (int)elems_.size(); }
    const PAut& elem(int i) const { return elems_[(size_t)i]; }
    int identity() const { return id_; }
    const std::vector<int>& generator_indices() const { return gen_idx_; }

    int mult(int i, int j) const;  // memoized
    int inv(int i) const;
    int element_order(int i) const;
    int index_of(const PAut& g) const; // -1 when absent

    bool is_abelian() const;
    std::vector<int> commutator_subgroup() const;
    /// Characters of the abelianization; complete and deterministic.
    std::vector<GroupCharacter> linear_characters() const;

    /// All subgroups of index exactly k (element index sets), k <= 6.
    std::vector<std::vector<int>> subgroups_of_index(int k) const;
    /// Subgroup generated by the given element indices.
    std::vector<int> subgroup_closure(std::vector<int> seed) const;
    /// A small generating set (indices), greedily minimized.
    std::vector<int> small_generating_set() const;

    /// Restriction: new group object generated by a subset (same surface).
    FiniteGroup restricted(const std::vector<int>& subgroup_elems) const;

    std::vector<int> element_order_histogram() const;
    std::string structure_label() const;

  private:
    FiniteGroup() = default;
    const Surface* X_ = nullptr;
    std::shared_ptr<Surface> keep_; // owns the surface copy
    std::vector<PAut> elems_;
    std::vector<int> gen_idx_;
    int id_ = 0;
    mutable std::vector<int> inv_;
    mutable std::unordered_map<long long, int> mult_memo_;
    mutable std::unordered_map<std::size_t, std::vector<int>> index_buckets_;
    void build_index();
};

/// Fixed locus of a set of elements: isolated points plus positive-
/// dimensional pieces given by the ambient forms cutting them on X.
struct FixedLocus {
    std::vector<SurfacePoint> points;
    std::vector<std::vector<WPoly>> curve_conditions; // each: forms cutting a fixed curve
    std::vector<std::string> obstructions;            // unresolved factors
};

FixedLocus fixed_locus(const Surface& X, const FiniteGroup& G, const std::vector<int>& elems);

/// Points on X cut by extra ambient conditions; finite part plus a marker for
/// positive-dimensional components.
struct LocusPoints {
    std::vector<SurfacePoint> points;
    bool finite = true;
    std::vector<std::string> obstructions;
};
LocusPoints points_on_locus(const Surface& X, const std::vector<WPoly>& conditions);

} // namespace dpa
