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
#include "dpa/group.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace dpa {

// ---------------------------------------------------------------------------
// PAut
// ---------------------------------------------------------------------------

bool PAut::operator==(const PAut& o) const {
    if (images.size() != o.images.size()) return false;
    for (size_t i = 0; i < images.size(); ++i)
        if (!(images[i] == o.images[i])) return false;
    return true;
}

std::size_t PAut::hash() const {
    std::size_t h = images.size();
    for (const auto& p : images) h = hash_combine(h, p.hash());
    return h;
}

std::string PAut::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < images.size(); ++i) {
        if (i) os << " ; ";
        os << images[i].str();
    }
    return os.str();
}

SurfacePoint PAut::apply(const Surface& X, const SurfacePoint& p) const {
    std::vector<FE> out;
    out.reserve(images.size());
    for (const auto& img : images) out.push_back(img.eval(p.coords));
    return X.normalize_point(std::move(out));
}

WPoly PAut::pullback(const WPoly& section) const {
    return section.substitute(images);
}

PAut identity_paut(const Surface& X) {
    PAut g;
    for (size_t i = 0; i < X.ring()->vars.size(); ++i)
        g.images.push_back(WPoly::variable(X.ring(), X.tower(), (int)i));
    return g;
}

PAut normalize_paut(const Surface& X, PAut g) {
    const auto& ring = X.ring();
    TowerPtr tw = X.tower();
    for (const auto& img : g.images) tw = join_towers(tw, img.tower());
    for (auto& img : g.images) img = img.retower(tw);
    if (X.kind() == SurfaceKind::P1xP1) {
        auto norm_block = [&](size_t from, size_t to) {
            for (size_t i = from; i < to; ++i) {
                if (g.images[i].is_zero()) continue;
                FE inv = g.images[i].leading_coeff().inverse();
                for (size_t j = from; j < to; ++j) g.images[j] = g.images[j].scaled(inv);
                return;
            }
            throw Error(ErrKind::UnsupportedMapShape, "zero block image");
        };
        norm_block(0, 2);
        norm_block(2, 4);
        return g;
    }
    for (size_t i = 0; i < ring->vars.size(); ++i) {
        if (ring->weights[i] != 1 || g.images[i].is_zero()) continue;
        FE c = g.images[i].leading_coeff();
        FE lambda = c.inverse();
        for (size_t j = 0; j < ring->vars.size(); ++j)
            g.images[j] = g.images[j].scaled(lambda.pow(ring->weights[j]));
        return g;
    }
    throw Error(ErrKind::UnsupportedMapShape, "no weight-1 coordinate has a nonzero image");
}

PAut compose_paut(const PAut& a, const PAut& b) {
    PAut r;
    r.images.reserve(a.images.size());
    for (const auto& img : a.images) r.images.push_back(img.substitute(b.images));
    return r;
}

bool preserves_ideal(const Surface& X, const PAut& g) {
    const auto& eqs = X.equations();
    if (eqs.empty()) return true;
    std::vector<WPoly> pulled;
    for (const auto& eq : eqs) pulled.push_back(g.pullback(eq));
    if (eqs.size() == 1) {
        const WPoly& e = eqs[0];
        const WPoly& p = pulled[0];
        if (p.is_zero()) return false;
        if (p.term_count() != e.term_count()) return false;
        FE ratio = p.leading_coeff() * e.leading_coeff().inverse();
        return p == e.scaled(ratio);
    }
    // quadric pair: each pulled equation must lie in span(q1, q2)
    // match on monomial coefficients: build the small linear system exactly
    for (const auto& p : pulled) {
        // collect all monomials
        std::set<Expo> monos;
        TowerPtr tw = join_towers(p.tower(), X.tower());
        for (const auto& [e, c] : p.terms()) monos.insert(e);
        for (const auto& eq : eqs)
            for (const auto& [e, c] : eq.terms()) monos.insert(e);
        Matrix M(tw, (int)monos.size(), 3);
        int r = 0;
        for (const auto& e : monos) {
            M.at(r, 0) = embed(eqs[0].coeff(e), tw);
            M.at(r, 1) = embed(eqs[1].coeff(e), tw);
            M.at(r, 2) = embed(p.coeff(e), tw);
            ++r;
        }
        // solvable iff rank of [q1 q2] equals rank of [q1 q2 p]
        Matrix M2(tw, (int)monos.size(), 2);
        for (int i = 0; i < (int)monos.size(); ++i) {
            M2.at(i, 0) = M.at(i, 0);
            M2.at(i, 1) = M.at(i, 1);
        }
        if (M.rank() != M2.rank()) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// FiniteGroup
// ---------------------------------------------------------------------------

void FiniteGroup::build_index() {
    index_buckets_.clear();
    for (int i = 0; i < (int)elems_.size(); ++i)
        index_buckets_[elems_[(size_t)i].hash()].push_back(i);
}

int FiniteGroup::index_of(const PAut& g) const {
    auto it = index_buckets_.find(g.hash());
    if (it == index_buckets_.end()) return -1;
    for (int i : it->second)
        if (elems_[(size_t)i] == g) return i;
    return -1;
}

FiniteGroup FiniteGroup::closure(const Surface& X, const std::vector<PAut>& gens, int bound) {
    FiniteGroup G;
    G.keep_ = std::make_shared<Surface>(X);
    G.X_ = G.keep_.get();
    for (const auto& g : gens)
        if (!preserves_ideal(X, g))
            throw Error(ErrKind::DoesNotPreserveIdeal, "generator moves the surface ideal: " + g.str());
    PAut id = normalize_paut(X, identity_paut(X));
    G.elems_.push_back(id);
    G.id_ = 0;
    G.build_index();
    std::vector<PAut> ngens;
    for (const auto& g : gens) {
        PAut n = normalize_paut(X, g);
        if (G.index_of(n) == -1 && !(n == id)) {
            G.elems_.push_back(n);
            G.index_buckets_[n.hash()].push_back((int)G.elems_.size() - 1);
        }
        ngens.push_back(n);
        if (G.index_of(n) == -1) {}
    }
    G.gen_idx_.clear();
    for (const auto& n : ngens) G.gen_idx_.push_back(G.index_of(n));
    std::deque<int> queue;
    for (int i = 0; i < (int)G.elems_.size(); ++i) queue.push_back(i);
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (int gi : G.gen_idx_) {
            PAut prod = normalize_paut(X, compose_paut(G.elems_[(size_t)cur], G.elems_[(size_t)gi]));
            if (G.index_of(prod) >= 0) continue;
            if ((int)G.elems_.size() >= bound)
                throw Error(ErrKind::NotFiniteWithinBound,
                            "closure exceeded bound " + std::to_string(bound));
            G.elems_.push_back(prod);
            int idx = (int)G.elems_.size() - 1;
            G.index_buckets_[prod.hash()].push_back(idx);
            queue.push_back(idx);
        }
    }
    G.inv_.assign(G.elems_.size(), -1);
    return G;
}

int FiniteGroup::mult(int i, int j) const {
    long long key = ((long long)i << 32) | (unsigned)j;
    auto it = mult_memo_.find(key);
    if (it != mult_memo_.end()) return it->second;
    PAut prod = normalize_paut(*X_, compose_paut(elems_[(size_t)i], elems_[(size_t)j]));
    int idx = index_of(prod);
    if (idx < 0) throw Error(ErrKind::Internal, "product escaped the closed group");
    mult_memo_.emplace(key, idx);
    return idx;
}

int FiniteGroup::inv(int i) const {
    if (inv_.empty()) inv_.assign(elems_.size(), -1);
    if (inv_[(size_t)i] >= 0) return inv_[(size_t)i];
    int acc = i, prev = id_;
    // i^(ord-1): walk powers
    while (true) {
        int nxt = mult(acc, i);
        if (nxt == id_) break;
        prev = acc;
        acc = nxt;
        (void)prev;
    }
    inv_[(size_t)i] = (acc == i && mult(i, i) == id_) ? i : acc;
    // the loop leaves acc = i^(ord-1)
    inv_[(size_t)i] = acc;
    return acc;
}

int FiniteGroup::element_order(int i) const {
    int ord = 1, cur = i;
    while (cur != id_) {
        cur = mult(cur, i);
        ++ord;
        if (ord > size()) throw Error(ErrKind::Internal, "order overflow");
    }
    return ord;
}

bool FiniteGroup::is_abelian() const {
    for (int a : gen_idx_)
        for (int b : gen_idx_)
            if (mult(a, b) != mult(b, a)) return false;
    return true;
}

std::vector<int> FiniteGroup::subgroup_closure(std::vector<int> seed) const {
    std::set<int> have(seed.begin(), seed.end());
    have.insert(id_);
    std::deque<int> queue(have.begin(), have.end());
    std::vector<int> gens(seed);
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (int g : gens) {
            int p = mult(cur, g);
            if (have.insert(p).second) queue.push_back(p);
        }
    }
    return std::vector<int>(have.begin(), have.end());
}

std::vector<int> FiniteGroup::commutator_subgroup() const {
    std::vector<int> comms;
    for (int a : gen_idx_)
        for (int b : gen_idx_) {
            int c = mult(mult(inv(a), inv(b)), mult(a, b));
            comms.push_back(c);
        }
    // normal closure: conjugate by generators until stable
    std::set<int> sub;
    for (int c : subgroup_closure(comms)) sub.insert(c);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> add;
        for (int s : sub)
            for (int g : gen_idx_) {
                int conj = mult(mult(g, s), inv(g));
                if (!sub.count(conj)) add.push_back(conj);
            }
        if (!add.empty()) {
            std::vector<int> base(sub.begin(), sub.end());
            base.insert(base.end(), add.begin(), add.end());
            auto closed = subgroup_closure(base);
            if (closed.size() > sub.size()) {
                sub = std::set<int>(closed.begin(), closed.end());
                grew = true;
            }
        }
    }
    return std::vector<int>(sub.begin(), sub.end());
}

// ---------------------------------------------------------------------------
// Characters through the abelianization (integer Smith normal form)
// ---------------------------------------------------------------------------

namespace {

// Smith normal form of A (rows x cols); returns diagonal entries and the
// column transform V with A' = A * V having the column lattice unchanged...
// We track the transform W such that quotient coordinates of x are (x * V).
struct SmithResult {
    std::vector<long long> diag; // d_1 | d_2 | ...
    std::vector<std::vector<long long>> V; // cols transform, square cols x cols
};

SmithResult smith_normal_form(std::vector<std::vector<long long>> A, int cols) {
    SmithResult out;
    int rows = (int)A.size();
    out.V.assign((size_t)cols, std::vector<long long>((size_t)cols, 0));
    for (int i = 0; i < cols; ++i) out.V[(size_t)i][(size_t)i] = 1;
    auto col_swap = [&](int a, int b) {
        for (auto& row : A) std::swap(row[(size_t)a], row[(size_t)b]);
        std::swap(out.V[(size_t)a], out.V[(size_t)b]);
    };
    auto col_add = [&](int dst, int src, long long f) { // col_dst += f * col_src
        for (auto& row : A) row[(size_t)dst] += f * row[(size_t)src];
        for (int i = 0; i < cols; ++i)
            out.V[(size_t)dst][(size_t)i] += f * out.V[(size_t)src][(size_t)i];
    };
    auto col_neg = [&](int a) {
        for (auto& row : A) row[(size_t)a] = -row[(size_t)a];
        for (int i = 0; i < cols; ++i) out.V[(size_t)a][(size_t)i] = -out.V[(size_t)a][(size_t)i];
    };
    auto row_swap = [&](int a, int b) { std::swap(A[(size_t)a], A[(size_t)b]); };
    auto row_add = [&](int dst, int src, long long f) {
        for (int j = 0; j < cols; ++j) A[(size_t)dst][(size_t)j] += f * A[(size_t)src][(size_t)j];
    };
    int r = 0, c = 0;
    while (r < rows && c < cols) {
        // find nonzero pivot
        int pr = -1, pc = -1;
        long long best = 0;
        for (int i = r; i < rows; ++i)
            for (int j = c; j < cols; ++j) {
                long long v = A[(size_t)i][(size_t)j];
                if (v != 0 && (best == 0 || std::abs(v) < std::abs(best))) {
                    best = v;
                    pr = i;
                    pc = j;
                }
            }
        if (pr < 0) break;
        row_swap(r, pr);
        col_swap(c, pc);
        if (A[(size_t)r][(size_t)c] < 0) col_neg(c);
        bool settled = false;
        int guard = 0;
        while (!settled) {
            if (++guard > 100000) throw Error(ErrKind::Internal, "snf loop");
            bool clean = true;
            long long p = A[(size_t)r][(size_t)c];
            for (int i = r + 1; i < rows; ++i) {
                long long q = A[(size_t)i][(size_t)c] / p;
                if (q) row_add(i, r, -q);
                if (A[(size_t)i][(size_t)c] != 0) clean = false;
            }
            for (int j = c + 1; j < cols; ++j) {
                long long q = A[(size_t)r][(size_t)j] / p;
                if (q) col_add(j, c, -q);
                if (A[(size_t)r][(size_t)j] != 0) clean = false;
            }
            if (!clean) {
                // move a smaller entry into the pivot slot and retry
                int br = -1, bc = -1;
                long long bv = 0;
                for (int i = r; i < rows; ++i)
                    for (int j = c; j < cols; ++j) {
                        long long v = A[(size_t)i][(size_t)j];
                        if (v != 0 && (bv == 0 || std::abs(v) < std::abs(bv))) {
                            bv = v; br = i; bc = j;
                        }
                    }
                row_swap(r, br);
                col_swap(c, bc);
                if (A[(size_t)r][(size_t)c] < 0) col_neg(c);
                continue;
            }
            // pivot must divide the whole remaining block; otherwise pull the
            // offending row into play and rerun the clearing pass
            p = A[(size_t)r][(size_t)c];
            settled = true;
            for (int i = r + 1; i < rows && settled; ++i)
                for (int j = c + 1; j < cols && settled; ++j)
                    if (A[(size_t)i][(size_t)j] % p != 0) {
                        row_add(r, i, 1);
                        settled = false;
                    }
        }
        ++r;
        ++c;
    }
    int k = std::min(rows, cols);
    for (int i = 0; i < k; ++i) out.diag.push_back(A[(size_t)i][(size_t)i]);
    return out;
}

} // namespace

std::vector<GroupCharacter> FiniteGroup::linear_characters() const {
    WordPresentation wp;
    wp.n = size();
    wp.id = id_;
    wp.r = (int)gen_idx_.size();
    wp.element_word.assign((size_t)wp.n, {});
    std::vector<bool> seen((size_t)wp.n, false);
    std::deque<int> queue;
    wp.element_word[(size_t)id_].assign((size_t)wp.r, 0);
    seen[(size_t)id_] = true;
    queue.push_back(id_);
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (int gi = 0; gi < wp.r; ++gi) {
            int nxt = mult(cur, gen_idx_[(size_t)gi]);
            std::vector<long long> cand = wp.element_word[(size_t)cur];
            cand[(size_t)gi] += 1;
            if (!seen[(size_t)nxt]) {
                seen[(size_t)nxt] = true;
                wp.element_word[(size_t)nxt] = std::move(cand);
                queue.push_back(nxt);
            } else {
                std::vector<long long> rel((size_t)wp.r);
                bool nonzero = false;
                for (int i = 0; i < wp.r; ++i) {
                    rel[(size_t)i] = cand[(size_t)i] - wp.element_word[(size_t)nxt][(size_t)i];
                    nonzero |= rel[(size_t)i] != 0;
                }
                if (nonzero) wp.relations.push_back(std::move(rel));
            }
        }
    }
    return characters_from_presentation(wp);
}

std::vector<GroupCharacter> characters_from_presentation(const WordPresentation& wp) {
    int r = wp.r, n = wp.n;
    auto snf = smith_normal_form(wp.relations, r);
    std::vector<long long> diag = snf.diag;
    diag.resize((size_t)r, 0);
    for (auto& d : diag)
        if (d == 0) d = 1; // finite quotient: no free parts survive
    long long D = 1;
    for (auto d : diag)
        if (d > 1) D = std::lcm(D, d);
    std::vector<std::vector<long long>> elem_coords((size_t)n);
    for (int e = 0; e < n; ++e) {
        std::vector<long long> y((size_t)r, 0);
        for (int i = 0; i < r; ++i) {
            long long acc = 0;
            for (int j = 0; j < r; ++j)
                acc += wp.element_word[(size_t)e][(size_t)j] * snf.V[(size_t)i][(size_t)j];
            y[(size_t)i] = acc;
        }
        elem_coords[(size_t)e] = std::move(y);
    }
    std::vector<GroupCharacter> out;
    std::vector<long long> a((size_t)r, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == r) {
            GroupCharacter chi;
            chi.root_order = (int)D;
            chi.value_num.assign((size_t)n, 0);
            for (int e = 0; e < n; ++e) {
                long long acc = 0;
                for (int j = 0; j < r; ++j) {
                    if (diag[(size_t)j] <= 1) continue;
                    long long co = ((elem_coords[(size_t)e][(size_t)j] % diag[(size_t)j]) +
                                    diag[(size_t)j]) % diag[(size_t)j];
                    acc += a[(size_t)j] * co * (D / diag[(size_t)j]);
                }
                chi.value_num[(size_t)e] = acc % D;
            }
            out.push_back(std::move(chi));
            return;
        }
        for (long long v = 0; v < diag[(size_t)i]; ++v) {
            a[(size_t)i] = v;
            rec(i + 1);
        }
        a[(size_t)i] = 0;
    };
    rec(0);
    std::sort(out.begin(), out.end(), [](const GroupCharacter& x, const GroupCharacter& y) {
        return x.value_num < y.value_num;
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const GroupCharacter& x, const GroupCharacter& y) {
                              return x.value_num == y.value_num;
                          }),
              out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Subgroups of bounded index via coset actions
// ---------------------------------------------------------------------------

std::vector<int> FiniteGroup::small_generating_set() const {
    // greedy minimization of the given generators
    std::vector<int> gens = gen_idx_;
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    bool changed = true;
    while (changed && gens.size() > 2) {
        changed = false;
        for (size_t i = 0; i < gens.size(); ++i) {
            std::vector<int> rest;
            for (size_t j = 0; j < gens.size(); ++j)
                if (j != i) rest.push_back(gens[j]);
            if ((int)subgroup_closure(rest).size() == size()) {
                gens = rest;
                changed = true;
                break;
            }
        }
    }
    if (gens.size() <= 2) return gens;
    // try pairs from a bounded pool
    int pool = std::min(size(), 48);
    for (int a = 1; a < pool; ++a)
        for (int b = a + 1; b < pool; ++b)
            if ((int)subgroup_closure({a, b}).size() == size()) return {a, b};
    return gens;
}

namespace {

using Perm = std::vector<int>;

Perm perm_mul(const Perm& a, const Perm& b) { // (a*b)(i) = a(b(i))
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[(size_t)b[i]];
    return r;
}

int perm_order(const Perm& p) {
    Perm cur = p;
    Perm id(p.size());
    std::iota(id.begin(), id.end(), 0);
    int o = 1;
    while (cur != id) {
        cur = perm_mul(cur, p);
        ++o;
    }
    return o;
}

std::vector<Perm> all_perms(int k) {
    Perm base(k);
    std::iota(base.begin(), base.end(), 0);
    std::vector<Perm> out;
    do out.push_back(base);
    while (std::next_permutation(base.begin(), base.end()));
    return out;
}

} // namespace

std::vector<std::vector<int>> FiniteGroup::subgroups_of_index(int k) const {
    if (k < 1 || k > 6) throw Error(ErrKind::Internal, "subgroup index capped at 6");
    std::vector<std::vector<int>> out;
    if (k == 1) {
        std::vector<int> all(size());
        std::iota(all.begin(), all.end(), 0);
        out.push_back(all);
        return out;
    }
    if (size() % k != 0) return out;
    auto gens = small_generating_set();
    int r = (int)gens.size();
    // element words: BFS parents over `gens`
    std::vector<int> parent((size_t)size(), -1), pgen((size_t)size(), -1);
    std::vector<int> order_bfs;
    {
        std::deque<int> queue;
        std::vector<bool> seen((size_t)size(), false);
        seen[(size_t)id_] = true;
        queue.push_back(id_);
        order_bfs.push_back(id_);
        while (!queue.empty()) {
            int cur = queue.front();
            queue.pop_front();
            for (int gi = 0; gi < r; ++gi) {
                int nxt = mult(cur, gens[(size_t)gi]);
                if (!seen[(size_t)nxt]) {
                    seen[(size_t)nxt] = true;
                    parent[(size_t)nxt] = cur;
                    pgen[(size_t)nxt] = gi;
                    queue.push_back(nxt);
                    order_bfs.push_back(nxt);
                }
            }
        }
        if ((int)order_bfs.size() != size())
            throw Error(ErrKind::Internal, "generating set does not generate");
    }
    auto perms = all_perms(k);
    std::vector<std::vector<const Perm*>> candidates((size_t)r);
    for (int gi = 0; gi < r; ++gi) {
        int ord = element_order(gens[(size_t)gi]);
        for (const auto& p : perms)
            if (ord % perm_order(p) == 0) candidates[(size_t)gi].push_back(&p);
    }
    std::set<std::vector<int>> found;
    std::vector<const Perm*> assign((size_t)r, nullptr);
    std::vector<Perm> phi((size_t)size());
    std::function<void(int)> rec = [&](int gi) {
        if (gi == r) {
            // build phi over all elements by BFS words, verify multiplicativity
            phi[(size_t)id_].resize((size_t)k);
            std::iota(phi[(size_t)id_].begin(), phi[(size_t)id_].end(), 0);
            for (int e : order_bfs) {
                if (e == id_) continue;
                phi[(size_t)e] = perm_mul(phi[(size_t)parent[(size_t)e]],
                                          *assign[(size_t)pgen[(size_t)e]]);
            }
            for (int e : order_bfs)
                for (int gi2 = 0; gi2 < r; ++gi2) {
                    int es = mult(e, gens[(size_t)gi2]);
                    if (phi[(size_t)es] != perm_mul(phi[(size_t)e], *assign[(size_t)gi2]))
                        return;
                }
            // transitivity of the image
            std::vector<bool> hit((size_t)k, false);
            hit[0] = true;
            bool grew = true;
            while (grew) {
                grew = false;
                for (int gi2 = 0; gi2 < r; ++gi2)
                    for (int i = 0; i < k; ++i)
                        if (hit[(size_t)i] && !hit[(size_t)(*assign[(size_t)gi2])[(size_t)i]]) {
                            hit[(size_t)(*assign[(size_t)gi2])[(size_t)i]] = true;
                            grew = true;
                        }
            }
            for (bool h : hit)
                if (!h) return;
            std::vector<int> H;
            for (int e = 0; e < size(); ++e)
                if (phi[(size_t)e][0] == 0) H.push_back(e);
            if ((int)H.size() * k == size()) found.insert(H);
            return;
        }
        for (const Perm* p : candidates[(size_t)gi]) {
            assign[(size_t)gi] = p;
            rec(gi + 1);
        }
    };
    rec(0);
    out.assign(found.begin(), found.end());
    return out;
}

FiniteGroup FiniteGroup::restricted(const std::vector<int>& subgroup_elems) const {
    std::vector<PAut> gens;
    for (int i : subgroup_elems) gens.push_back(elems_[(size_t)i]);
    return closure(*X_, gens, size() + 1);
}

std::vector<int> FiniteGroup::element_order_histogram() const {
    std::vector<int> hist((size_t)size() + 1, 0);
    for (int i = 0; i < size(); ++i) hist[(size_t)element_order(i)]++;
    while (!hist.empty() && hist.back() == 0) hist.pop_back();
    return hist;
}

std::string FiniteGroup::structure_label() const {
    int n = size();
    bool ab = is_abelian();
    auto comm = commutator_subgroup();
    int ab_order = n / (int)comm.size();
    std::ostringstream os;
    // best-effort labels for the orders this catalog meets
    if (n == 1) return "1";
    if (ab) {
        // abelian invariant factors via the characters' structure
        os << "abelian order " << n;
        auto hist = element_order_histogram();
        if (n == 16 && hist.size() > 2 && hist[2] == 15) return "Z2^4";
        if (n == 8 && hist.size() > 2 && hist[2] == 7) return "Z2^3";
        if (n == 4 && hist.size() > 2 && hist[2] == 3) return "Z2^2";
        if (n == 2) return "Z2";
        if (n == 3) return "Z3";
        if (n == 5) return "Z5";
        if (n == 6 && hist.size() > 6 && hist[6] > 0) return "Z6";
        return os.str();
    }
    switch (n) {
    case 6: return "S3";
    case 10: return "D5";
    case 12: return ab_order == 4 ? "D6" : "A4";
    case 24: return ab_order == 2 ? "S4" : "nonabelian order 24";
    case 42: return "Z2x(Z7:Z3)";
    case 21: return "Z7:Z3";
    case 60: return "A5";
    case 96: return "Z2^4:S3";
    case 120: {
        auto hist = element_order_histogram();
        if (hist.size() > 6 && hist[6] > 0) return "S5";
        return "Z5:Z4-like order 120";
    }
    case 160: return "Z2^4:D5";
    case 168: return "PSL(2,7)";
    case 336: return "Z2xPSL(2,7)";
    case 648: return "Z3^3:S4";
    case 144: return "Z3x(2.S4)";
    case 20: return "Z5:Z4";
    default:
        os.str("");
        os << "nonabelian order " << n;
        return os.str();
    }
}

// ---------------------------------------------------------------------------
// Fixed loci
// ---------------------------------------------------------------------------

LocusPoints points_on_locus(const Surface& X, const std::vector<WPoly>& conditions) {
    LocusPoints out;
    std::vector<WPoly> forms = conditions;
    for (const auto& eq : X.equations()) forms.push_back(eq);
    const auto& ring = X.ring();
    TowerPtr tw = X.tower();
    for (const auto& c : conditions) tw = join_towers(tw, c.tower());
    size_t nv = ring->vars.size();
    std::vector<std::string> raw_obstructions;
    auto handle_chart = [&](const std::vector<int>& zeroed, int one_var,
                            const std::vector<int>& affine) {
        std::vector<WPoly> sys;
        for (const auto& f : forms) {
            WPoly g = f.retower(tw);
            for (int zv : zeroed) g = g.substitute_var(zv, WPoly::zero(ring, tw));
            g = g.substitute_var(one_var, WPoly::constant(ring, tw, tw->one()));
            sys.push_back(g);
        }
        std::vector<std::string> obs;
        auto sols = solve_affine_system(sys, affine, tw, &obs);
        for (const auto& s : obs) raw_obstructions.push_back(s);
        for (const auto& s : sols) {
            TowerPtr tws = tw;
            for (const auto& v : s) tws = join_towers(tws, v.tower());
            std::vector<FE> full(nv, tws->zero());
            full[(size_t)one_var] = tws->one();
            for (size_t i = 0; i < affine.size(); ++i) full[(size_t)affine[i]] = embed(s[i], tws);
            out.points.push_back(X.normalize_point(full));
        }
    };
    if (X.kind() == SurfaceKind::P1xP1) {
        // charts: (x0 or x1) = 1 and (y0 or y1) = 1
        for (int xi : {0, 1})
            for (int yi : {2, 3}) {
                std::vector<int> zeroed;
                if (xi == 1) zeroed.push_back(0);
                if (yi == 3) zeroed.push_back(2);
                std::vector<WPoly> sys;
                for (const auto& f : forms) {
                    WPoly g = f.retower(tw);
                    for (int zv : zeroed) g = g.substitute_var(zv, WPoly::zero(ring, tw));
                    g = g.substitute_var(xi, WPoly::constant(ring, tw, tw->one()));
                    g = g.substitute_var(yi, WPoly::constant(ring, tw, tw->one()));
                    sys.push_back(g);
                }
                std::vector<int> affine;
                if (xi == 0) affine.push_back(1);
                if (yi == 2) affine.push_back(3);
                std::vector<std::string> obs;
                auto sols = solve_affine_system(sys, affine, tw, &obs);
                for (const auto& s : obs) raw_obstructions.push_back(s);
                for (const auto& s : sols) {
                    TowerPtr tws = tw;
                    for (const auto& v : s) tws = join_towers(tws, v.tower());
                    std::vector<FE> full(nv, tws->zero());
                    full[(size_t)xi] = tws->one();
                    full[(size_t)yi] = tws->one();
                    for (size_t i = 0; i < affine.size(); ++i)
                        full[(size_t)affine[i]] = embed(s[i], tws);
                    out.points.push_back(X.normalize_point(full));
                }
            }
    } else {
        // weight-1 charts in variable order
        std::vector<int> w1;
        for (size_t i = 0; i < nv; ++i)
            if (ring->weights[i] == 1) w1.push_back((int)i);
        for (size_t c = 0; c < w1.size(); ++c) {
            std::vector<int> zeroed(w1.begin(), w1.begin() + (long)c);
            std::vector<int> affine;
            for (size_t i = c + 1; i < w1.size(); ++i) affine.push_back(w1[i]);
            for (size_t i = 0; i < nv; ++i)
                if (ring->weights[i] > 1) affine.push_back((int)i);
            // eliminate high-weight variables first: they sit at the back
            handle_chart(zeroed, w1[c], affine);
        }
        // residual locus: all weight-1 variables zero (cone slice on the last var)
        if (X.kind() == SurfaceKind::Sextic1123) {
            std::vector<WPoly> sys;
            for (const auto& f : forms) {
                WPoly g = f.retower(tw);
                for (int zv : w1) g = g.substitute_var(zv, WPoly::zero(ring, tw));
                g = g.substitute_var(2, WPoly::constant(ring, tw, tw->one())); // z = 1 slice
                sys.push_back(g);
            }
            std::vector<std::string> obs;
            auto sols = solve_affine_system(sys, {3}, tw, &obs);
            for (const auto& s : obs) raw_obstructions.push_back(s);
            for (const auto& s : sols) {
                TowerPtr tws = join_towers(tw, s[0].tower());
                std::vector<FE> full(nv, tws->zero());
                full[2] = tws->one();
                full[3] = embed(s[0], tws);
                out.points.push_back(X.normalize_point(full));
            }
        }
    }
    // classify obstructions: dimension markers vs extension factors
    for (const auto& s : raw_obstructions) {
        if (s.find("underdetermined") != std::string::npos ||
            s.find("no equation involves") != std::string::npos ||
            s.find("projection gave no constraints") != std::string::npos ||
            s.find("fiber not zero-dimensional") != std::string::npos ||
            s.find("identically zero") != std::string::npos)
            out.finite = false;
        else
            out.obstructions.push_back(s);
    }
    // dedupe points
    std::sort(out.points.begin(), out.points.end());
    out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
    return out;
}

namespace {

/// Pointwise-fixed pieces of one element, each given by ambient conditions.
struct FixPieces {
    std::vector<std::vector<WPoly>> pieces;
    std::vector<std::string> obstructions;
};

FixPieces element_fix_pieces(const Surface& X, const PAut& g) {
    FixPieces out;
    const auto& ring = X.ring();
    TowerPtr tw = X.tower();
    for (const auto& img : g.images) tw = join_towers(tw, img.tower());
    size_t nv = ring->vars.size();

    auto linear_matrix = [&](const std::vector<int>& block) -> std::optional<Matrix> {
        Matrix M(tw, (int)block.size(), (int)block.size());
        for (size_t i = 0; i < block.size(); ++i) {
            const WPoly& img = g.images[(size_t)block[i]];
            for (const auto& [e, c] : img.terms()) {
                int which = -1;
                for (size_t j = 0; j < e.size(); ++j) {
                    if (e[j] == 1 && which < 0) which = (int)j;
                    else if (e[j] != 0) return std::nullopt;
                }
                if (which < 0) return std::nullopt;
                auto it = std::find(block.begin(), block.end(), which);
                if (it == block.end()) return std::nullopt;
                M.at((int)i, (int)(it - block.begin())) = embed(c, tw);
            }
        }
        return M;
    };

    auto subspace_conditions = [&](const std::vector<std::vector<FE>>& basis,
                                   const std::vector<int>& block) {
        // linear forms on the block variables vanishing exactly on span(basis)
        int d = (int)basis.size(), n = (int)block.size();
        TowerPtr twb = tw;
        for (const auto& row : basis)
            for (const auto& v : row) twb = join_towers(twb, v.tower());
        Matrix B(twb, d, n);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < n; ++j) B.at(i, j) = embed(basis[(size_t)i][(size_t)j], twb);
        auto kb = B.kernel_basis(); // forms annihilating the basis vectors
        std::vector<WPoly> conds;
        for (const auto& v : kb) {
            WPoly f = WPoly::zero(ring, twb);
            for (int j = 0; j < n; ++j)
                f = f + WPoly::variable(ring, twb, block[(size_t)j]).scaled(v[(size_t)j]);
            conds.push_back(f);
        }
        return conds;
    };

    if (X.kind() == SurfaceKind::P1xP1) {
        bool swaps = g.images[0].degree_in(2) > 0 || g.images[0].degree_in(3) > 0;
        if (!swaps) {
            auto A = linear_matrix({0, 1});
            auto B = linear_matrix({2, 3});
            if (!A || !B) {
                out.obstructions.push_back("unsupported product map shape");
                return out;
            }
            auto ea = eigen_lines_torsion(*A);
            auto eb = eigen_lines_torsion(*B);
            for (const auto& f : ea.unsplit) out.obstructions.push_back(f.str());
            for (const auto& f : eb.unsplit) out.obstructions.push_back(f.str());
            for (const auto& la : ea.lines)
                for (const auto& lb : eb.lines) {
                    std::vector<WPoly> conds;
                    if (la.space.size() == 1) {
                        auto c = subspace_conditions(la.space, {0, 1});
                        conds.insert(conds.end(), c.begin(), c.end());
                    }
                    if (lb.space.size() == 1) {
                        auto c = subspace_conditions(lb.space, {2, 3});
                        conds.insert(conds.end(), c.begin(), c.end());
                    }
                    out.pieces.push_back(conds);
                }
            return out;
        }
        // factor swap: x-part eigen of (A*B) with A = x-image of y-vars etc.
        auto A = linear_matrix({2, 3}); // hmm: images of x-vars in y-vars
        // construct cross matrices directly
        auto cross = [&](int i0, int i1, int j0, int j1) -> std::optional<Matrix> {
            Matrix M(tw, 2, 2);
            int rows[2] = {i0, i1}, cols[2] = {j0, j1};
            for (int i = 0; i < 2; ++i) {
                const WPoly& img = g.images[(size_t)rows[i]];
                for (const auto& [e, c] : img.terms()) {
                    int which = -1;
                    for (size_t j = 0; j < e.size(); ++j) {
                        if (e[j] == 1 && which < 0) which = (int)j;
                        else if (e[j] != 0) return std::nullopt;
                    }
                    if (which == cols[0]) M.at(i, 0) = embed(c, tw);
                    else if (which == cols[1]) M.at(i, 1) = embed(c, tw);
                    else return std::nullopt;
                }
            }
            return M;
        };
        auto Axy = cross(0, 1, 2, 3); // x-images read y-vars
        auto Byx = cross(2, 3, 0, 1);
        if (!Axy || !Byx) {
            out.obstructions.push_back("unsupported product swap shape");
            return out;
        }
        Matrix AB = (*Axy) * (*Byx);
        auto e = eigen_lines_torsion(AB);
        for (const auto& f : e.unsplit) out.obstructions.push_back(f.str());
        for (const auto& l : e.lines) {
            if (l.space.size() != 1) continue; // AB scalar: whole diagonal family
            std::vector<FE> x = l.space[0];
            std::vector<FE> y = Byx->apply(x);
            std::vector<WPoly> conds = subspace_conditions({x}, {0, 1});
            auto cy = subspace_conditions({y}, {2, 3});
            conds.insert(conds.end(), cy.begin(), cy.end());
            out.pieces.push_back(conds);
        }
        if (!e.lines.empty() && e.lines[0].space.size() == 2) {
            out.obstructions.push_back("swap square is scalar: fixed family unsupported");
        }
        return out;
    }

    // weighted / plain kinds: weight-1 block must be linear
    std::vector<int> w1;
    for (size_t i = 0; i < nv; ++i)
        if (ring->weights[i] == 1) w1.push_back((int)i);
    auto A = linear_matrix(w1);
    if (!A) {
        out.obstructions.push_back("unsupported map shape (weight-1 block not linear)");
        return out;
    }
    // higher-weight variables must map to scalar multiples of themselves
    std::vector<int> heavy;
    std::vector<FE> heavy_scalar;
    for (size_t i = 0; i < nv; ++i) {
        if (ring->weights[i] == 1) continue;
        heavy.push_back((int)i);
        const WPoly& img = g.images[i];
        Expo self(nv, 0);
        self[i] = 1;
        FE c = img.coeff(self);
        WPoly rest = img - WPoly::monomial(ring, img.tower(), self, c);
        if (c.is_zero() || !rest.is_zero()) {
            out.obstructions.push_back("unsupported map shape (non-diagonal heavy variable)");
            return out;
        }
        heavy_scalar.push_back(embed(c, tw));
    }
    std::vector<std::string> folded;
    EigenResult ev = eigen_lines_robust(*A, &folded);
    for (const auto& f : folded) out.obstructions.push_back(f);
    for (const auto& f : ev.unsplit) out.obstructions.push_back(f.str());
    for (const auto& l : ev.lines) {
        // conditions cutting the eigenspace inside the weight-1 block
        std::vector<WPoly> base = subspace_conditions(l.space, w1);
        // heavy coordinates: free iff scalar matches lambda^w
        std::vector<WPoly> conds = base;
        for (size_t h = 0; h < heavy.size(); ++h) {
            FE need = l.value.pow(ring->weights[(size_t)heavy[h]]);
            if (!(heavy_scalar[h] == need))
                conds.push_back(WPoly::variable(ring, tw, heavy[h]));
        }
        out.pieces.push_back(conds);
    }
    // all weight-1 coordinates zero: heavy-only fixed locus
    if (!heavy.empty()) {
        // a point (0,..,0, z, t) is fixed iff some weighted scalar matches
        // all heavy scalings simultaneously; for two heavies (w2, w3) check
        // lambda = c_t / c_z satisfies lambda^2 = c_z, lambda^3 = c_t
        std::vector<WPoly> conds;
        for (int v : w1) conds.push_back(WPoly::variable(ring, tw, v));
        bool fixed_there = false;
        if (heavy.size() == 1) {
            fixed_there = true; // single heavy coord: scaling always matches
        } else if (heavy.size() == 2) {
            FE cz = heavy_scalar[0], ct = heavy_scalar[1];
            int wz = ring->weights[(size_t)heavy[0]], wt = ring->weights[(size_t)heavy[1]];
            if (wz == 2 && wt == 3) {
                FE lambda = ct * cz.inverse();
                fixed_there = (lambda.pow(2) == cz) && (lambda.pow(3) == ct);
            }
        }
        if (fixed_there) out.pieces.push_back(conds);
    }
    return out;
}

} // namespace

FixedLocus fixed_locus(const Surface& X, const FiniteGroup& G, const std::vector<int>& elems) {
    FixedLocus out;
    // drop identity; empty set fixes everything
    std::vector<int> use;
    for (int e : elems)
        if (e != G.identity()) use.push_back(e);
    if (use.empty()) {
        out.curve_conditions.push_back({});
        return out;
    }
    // generators of the subgroup suffice
    std::vector<FixPieces> pieces;
    for (int e : use) {
        auto fp = element_fix_pieces(X, G.elem(e));
        for (const auto& o : fp.obstructions) out.obstructions.push_back(o);
        pieces.push_back(std::move(fp));
    }
    std::sort(pieces.begin(), pieces.end(),
              [](const FixPieces& a, const FixPieces& b) { return a.pieces.size() < b.pieces.size(); });
    std::set<SurfacePoint> point_set;
    std::function<void(size_t, std::vector<WPoly>)> rec = [&](size_t level,
                                                              std::vector<WPoly> conds) {
        LocusPoints lp = points_on_locus(X, conds);
        for (const auto& o : lp.obstructions) out.obstructions.push_back(o);
        if (lp.finite) {
            for (const auto& p : lp.points) {
                bool ok = true;
                for (int e : use) {
                    if (!(G.elem(e).apply(X, p) == p)) { ok = false; break; }
                }
                if (ok) point_set.insert(p);
            }
            return;
        }
        if (level == pieces.size()) {
            out.curve_conditions.push_back(conds);
            return;
        }
        for (const auto& piece : pieces[level].pieces) {
            std::vector<WPoly> next = conds;
            next.insert(next.end(), piece.begin(), piece.end());
            rec(level + 1, std::move(next));
        }
    };
    // seed with the first element's pieces
    for (const auto& piece : pieces[0].pieces) rec(1, piece);
    out.points.assign(point_set.begin(), point_set.end());
    return out;
}

} // namespace dpa
