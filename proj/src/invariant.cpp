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
#include "dpa/invariant.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

namespace dpa {

WPoly section_from_expo(const Surface& X, const Expo& e) {
    return WPoly::monomial(X.ring(), X.tower(), e, X.tower()->one());
}

InducedRep induced_on_basis(const Surface& X, const FiniteGroup& G,
                            const std::vector<Expo>& basis, int level_tag) {
    InducedRep rep;
    rep.level = level_tag;
    rep.basis = basis;
    TowerPtr tw = X.tower();
    std::map<Expo, int> basis_index;
    for (size_t i = 0; i < basis.size(); ++i) basis_index.emplace(basis[i], (int)i);
    int N = (int)basis.size();
    for (int gi = 0; gi < G.size(); ++gi) {
        const PAut& g = G.elem(gi);
        Matrix M(tw, N, N);
        for (int j = 0; j < N; ++j) {
            WPoly img = X.reduce(g.pullback(section_from_expo(X, basis[(size_t)j])));
            for (const auto& [e, c] : img.terms()) {
                auto it = basis_index.find(e);
                if (it == basis_index.end()) {
                    rep.system_stable = false;
                    return rep;
                }
                M.at(it->second, j) = embed(c, tw);
            }
        }
        rep.matrices.push_back(std::move(M));
    }
    return rep;
}

InducedRep induced_matrices(const Surface& X, const FiniteGroup& G, int n) {
    return induced_on_basis(X, G, X.anticanonical_basis(n), n);
}

namespace {

WPoly section_from_vector(const Surface& X, const std::vector<Expo>& basis,
                          const std::vector<FE>& v, const TowerPtr& tw) {
    WPoly s = WPoly::zero(X.ring(), tw);
    for (size_t i = 0; i < basis.size(); ++i) {
        if (v[i].is_zero()) continue;
        s = s + WPoly::monomial(X.ring(), tw, basis[i], v[i]);
    }
    // normalize: leading coefficient 1
    if (!s.is_zero()) s = s.scaled(s.leading_coeff().inverse());
    return s;
}

} // namespace

namespace {

/// the group generated by the induced matrices, represented as pairs
/// (group element, scalar): M_i M_j = kappa(i,j) * M_{mult(j,i)}
struct CocycleGroup {
    std::vector<std::pair<int, FE>> elems;
    std::vector<int> gens; // indices into elems
    int id = 0;
    WordPresentation wp;
    bool closed = true;
};

CocycleGroup close_cocycle_group(const FiniteGroup& G, const InducedRep& rep, int cap) {
    CocycleGroup H;
    const TowerPtr& tw = rep.matrices[0].tower();
    int N = rep.matrices[0].rows();
    // one nonzero anchor entry per element for scalar extraction
    std::vector<std::pair<int, int>> anchor((size_t)G.size());
    for (int i = 0; i < G.size(); ++i) {
        bool found = false;
        for (int r = 0; r < N && !found; ++r)
            for (int c = 0; c < N && !found; ++c)
                if (!rep.matrices[(size_t)i].at(r, c).is_zero()) {
                    anchor[(size_t)i] = {r, c};
                    found = true;
                }
        if (!found) throw Error(ErrKind::Internal, "zero induced matrix");
    }
    std::unordered_map<long long, FE> kappa_memo;
    auto kappa = [&](int i, int j) {
        long long key = ((long long)i << 32) | (unsigned)j;
        auto it = kappa_memo.find(key);
        if (it != kappa_memo.end()) return it->second;
        int prod = G.mult(j, i); // pullback composition is an anti-morphism
        auto [r, c] = anchor[(size_t)prod];
        FE acc = tw->zero();
        const Matrix& A = rep.matrices[(size_t)i];
        const Matrix& B = rep.matrices[(size_t)j];
        for (int k = 0; k < N; ++k) {
            if (A.at(r, k).is_zero() || B.at(k, c).is_zero()) continue;
            acc = acc + A.at(r, k) * B.at(k, c);
        }
        FE val = acc * rep.matrices[(size_t)prod].at(r, c).inverse();
        kappa_memo.emplace(key, val);
        return val;
    };
    auto find = [&](int g, const FE& s) {
        for (int i = 0; i < (int)H.elems.size(); ++i)
            if (H.elems[(size_t)i].first == g && H.elems[(size_t)i].second == s) return i;
        return -1;
    };
    H.elems.push_back({G.identity(), tw->one()});
    for (int gi : G.generator_indices()) {
        int idx = find(gi, tw->one());
        if (idx < 0) {
            H.elems.push_back({gi, tw->one()});
            idx = (int)H.elems.size() - 1;
        }
        H.gens.push_back(idx);
    }
    int r = (int)H.gens.size();
    H.wp.r = r;
    H.wp.id = 0;
    std::vector<std::vector<long long>> words(H.elems.size());
    words[0].assign((size_t)r, 0);
    for (int gi = 0; gi < r; ++gi)
        if (words[(size_t)H.gens[(size_t)gi]].empty()) {
            std::vector<long long> w((size_t)r, 0);
            w[(size_t)gi] = 1;
            words[(size_t)H.gens[(size_t)gi]] = w;
        }
    std::deque<int> queue;
    for (int i = 0; i < (int)H.elems.size(); ++i) queue.push_back(i);
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (int gi = 0; gi < r; ++gi) {
            auto [cg, cs] = H.elems[(size_t)cur];
            auto [gg, gs] = H.elems[(size_t)H.gens[(size_t)gi]];
            // matrix product (cs M_cg)(gs M_gg) = cs gs kappa(cg,gg) M_mult(gg,cg)
            int pg = G.mult(gg, cg);
            FE ps = cs * gs * kappa(cg, gg);
            std::vector<long long> cand = words[(size_t)cur];
            cand[(size_t)gi] += 1;
            int idx = find(pg, ps);
            if (idx < 0) {
                if ((int)H.elems.size() >= cap) {
                    H.closed = false;
                    H.wp.n = (int)H.elems.size();
                    H.wp.element_word = words;
                    return H;
                }
                H.elems.push_back({pg, ps});
                idx = (int)H.elems.size() - 1;
                words.resize(H.elems.size());
                words[(size_t)idx] = std::move(cand);
                queue.push_back(idx);
            } else {
                std::vector<long long> rel((size_t)r);
                bool nz = false;
                for (int i2 = 0; i2 < r; ++i2) {
                    rel[(size_t)i2] = cand[(size_t)i2] - words[(size_t)idx][(size_t)i2];
                    nz |= rel[(size_t)i2] != 0;
                }
                if (nz) H.wp.relations.push_back(std::move(rel));
            }
        }
    }
    H.wp.n = (int)H.elems.size();
    H.wp.element_word = std::move(words);
    return H;
}

} // namespace

InvariantScan scan_system(const Surface& X, const FiniteGroup& G,
                          const std::vector<Expo>& basis, int level_tag) {
    InvariantScan out;
    if (basis.empty()) return out;
    InducedRep rep = induced_on_basis(X, G, basis, level_tag);
    if (!rep.system_stable) return out; // class moved: no invariant members
    std::vector<Matrix> gens;
    for (int gi : G.generator_indices()) gens.push_back(rep.matrices[(size_t)gi]);
    if (gens.empty()) gens.push_back(rep.matrices[(size_t)G.identity()]);
    CocycleGroup H = close_cocycle_group(G, rep, 64 * std::max(1, G.size()));
    if (!H.closed) {
        // scalar part of the generated matrix group is infinite (the
        // normalized maps need not have root-of-unity determinants): fall back
        // to iterated eigenspace intersections, one eigenvalue per conjugate
        // class of each generator
        out.notes_fallback = true;
        int N = (int)basis.size();
        TowerPtr twc = X.tower();
        struct Space {
            std::vector<std::vector<FE>> rows; // basis vectors
        };
        std::vector<Space> spaces = {Space{}};
        {
            for (int i = 0; i < N; ++i) {
                std::vector<FE> e((size_t)N, twc->zero());
                e[(size_t)i] = twc->one();
                spaces[0].rows.push_back(std::move(e));
            }
        }
        for (const auto& Mg : gens) {
            // eigenvalues of Mg over the smallest usable field
            EigenResult ev;
            try {
                ev = eigen_lines(Mg, 64);
            } catch (const Error& e) {
                out.obstructions.push_back(std::string("eigen split failed: ") + e.what());
                out.complete = false;
                return out;
            }
            std::vector<FE> values;
            for (const auto& l : ev.lines) values.push_back(l.value);
            for (const auto& f : ev.unsplit) {
                std::vector<std::string> obs;
                auto extra = roots_via_extension(f, &obs);
                if (!extra.empty()) {
                    values.push_back(extra[0]); // one per conjugate class
                    out.notes.push_back("conjugate eigensystems folded through one root of " +
                                        f.str());
                } else {
                    out.obstructions.push_back("eigenvalue outside reachable fields: " + f.str());
                    out.complete = false;
                    return out;
                }
            }
            std::vector<Space> next;
            for (const auto& S : spaces) {
                int d = (int)S.rows.size();
                for (const auto& mu : values) {
                    TowerPtr tws = join_towers(twc, mu.tower());
                    for (const auto& row : S.rows)
                        for (const auto& v : row) tws = join_towers(tws, v.tower());
                    // kernel of (Mg - mu I) * B^T in coefficient space
                    Matrix A(tws, N, d);
                    for (int i = 0; i < N; ++i)
                        for (int j = 0; j < d; ++j) {
                            FE acc = tws->zero();
                            for (int k2 = 0; k2 < N; ++k2) {
                                FE m = embed(Mg.at(i, k2), tws);
                                if (i == k2) m = m - embed(mu, tws);
                                if (m.is_zero()) continue;
                                FE b = embed(S.rows[(size_t)j][(size_t)k2], tws);
                                if (b.is_zero()) continue;
                                acc = acc + m * b;
                            }
                            A.at(i, j) = acc;
                        }
                    auto kb = A.kernel_basis();
                    if (kb.empty()) continue;
                    Space T;
                    for (const auto& coeffs : kb) {
                        std::vector<FE> vec((size_t)N, tws->zero());
                        for (int j = 0; j < d; ++j) {
                            if (coeffs[(size_t)j].is_zero()) continue;
                            for (int k2 = 0; k2 < N; ++k2)
                                vec[(size_t)k2] =
                                    vec[(size_t)k2] +
                                    coeffs[(size_t)j] * embed(S.rows[(size_t)j][(size_t)k2], tws);
                        }
                        T.rows.push_back(std::move(vec));
                    }
                    next.push_back(std::move(T));
                }
            }
            spaces = std::move(next);
            if (spaces.empty()) break;
        }
        for (const auto& S : spaces) {
            InvariantCurve cur;
            cur.level = level_tag;
            cur.family_dim = (int)S.rows.size();
            cur.character = "eigen-intersection";
            TowerPtr tws = X.tower();
            for (const auto& row : S.rows)
                for (const auto& v : row) tws = join_towers(tws, v.tower());
            cur.section = section_from_vector(X, basis, [&] {
                std::vector<FE> r;
                for (const auto& v : S.rows[0]) r.push_back(embed(v, tws));
                return r;
            }(), tws);
            if (cur.family_dim >= 2) {
                for (const auto& row : S.rows) {
                    std::vector<FE> r;
                    for (const auto& v : row) r.push_back(embed(v, tws));
                    cur.family_basis.push_back(section_from_vector(X, basis, r, tws));
                }
                out.families.push_back(std::move(cur));
            } else {
                out.curves.push_back(std::move(cur));
            }
        }
        auto key2 = [](const InvariantCurve& c) { return c.section.str(); };
        std::sort(out.curves.begin(), out.curves.end(),
                  [&](const InvariantCurve& a, const InvariantCurve& b) {
                      return key2(a) < key2(b);
                  });
        std::sort(out.families.begin(), out.families.end(),
                  [&](const InvariantCurve& a, const InvariantCurve& b) {
                      return key2(a) < key2(b);
                  });
        return out;
    }
    auto chars = characters_from_presentation(H.wp);
    int N = (int)basis.size();
    TowerPtr tw = X.tower();
    for (const auto& chi : chars) {
        // field containing the character values
        TowerPtr twc = tw;
        if (chi.root_order > 1) {
            int m2 = Tower::enlarged_conductor(tw->conductor(), chi.root_order);
            if (m2 != tw->conductor()) {
                TowerPtr big = Tower::cyclotomic(m2);
                if (tw->has_ext()) {
                    twc = join_towers(tw, big);
                } else {
                    twc = big;
                }
            }
        }
        FE zroot = *twc->root_of_unity(std::max(1, chi.root_order));
        // stack (M_s - chi(s) I) over the generators of H
        int r = (int)H.gens.size();
        Matrix stacked(twc, N * r, N);
        for (int s = 0; s < r; ++s) {
            const Matrix& M = rep.matrices[(size_t)H.elems[(size_t)H.gens[(size_t)s]].first];
            FE val = zroot.pow(chi.value_num[(size_t)H.gens[(size_t)s]]);
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j) {
                    FE v = embed(M.at(i, j), twc);
                    if (i == j) v = v - val;
                    stacked.at(s * N + i, j) = v;
                }
        }
        auto kb = stacked.kernel_basis();
        if (kb.empty()) continue;
        InvariantCurve cur;
        cur.level = level_tag;
        cur.family_dim = (int)kb.size();
        cur.character = "zeta(" + std::to_string(chi.root_order) + ")-system";
        cur.section = section_from_vector(X, basis, kb[0], twc);
        if (kb.size() >= 2) {
            for (const auto& v : kb)
                cur.family_basis.push_back(section_from_vector(X, basis, v, twc));
            out.families.push_back(std::move(cur));
        } else {
            out.curves.push_back(std::move(cur));
        }
    }
    auto key = [](const InvariantCurve& c) { return c.section.str(); };
    std::sort(out.curves.begin(), out.curves.end(),
              [&](const InvariantCurve& a, const InvariantCurve& b) { return key(a) < key(b); });
    std::sort(out.families.begin(), out.families.end(),
              [&](const InvariantCurve& a, const InvariantCurve& b) { return key(a) < key(b); });
    return out;
}

InvariantScan semi_invariant_lines(const Surface& X, const FiniteGroup& G, int n) {
    return scan_system(X, G, X.anticanonical_basis(n), n);
}

BasePoints base_points(const Surface& X, const std::vector<WPoly>& sections) {
    BasePoints out;
    auto lp = points_on_locus(X, sections);
    out.points = lp.points;
    out.finite = lp.finite;
    out.obstructions = lp.obstructions;
    return out;
}

} // namespace dpa
