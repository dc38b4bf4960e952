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
#include "dpa/surface.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace dpa {

// ---------------------------------------------------------------------------
// SurfacePoint
// ---------------------------------------------------------------------------

bool SurfacePoint::operator==(const SurfacePoint& o) const {
    if (coords.size() != o.coords.size()) return false;
    for (size_t i = 0; i < coords.size(); ++i)
        if (!(coords[i] == o.coords[i])) return false;
    return true;
}

bool SurfacePoint::operator<(const SurfacePoint& o) const {
    for (size_t i = 0; i < std::min(coords.size(), o.coords.size()); ++i) {
        if (coords[i] == o.coords[i]) continue;
        return coords[i] < o.coords[i];
    }
    return coords.size() < o.coords.size();
}

std::size_t SurfacePoint::hash() const {
    std::size_t h = coords.size();
    for (const auto& c : coords) h = hash_combine(h, c.hash());
    return h;
}

std::string SurfacePoint::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) os << " : ";
        os << coords[i].str();
    }
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

Surface Surface::p2(const TowerPtr& tw) {
    Surface s;
    s.kind_ = SurfaceKind::P2;
    s.ring_ = make_ring({"x", "y", "z"}, {1, 1, 1});
    s.tw_ = tw;
    return s;
}

Surface Surface::p1xp1(const TowerPtr& tw) {
    Surface s;
    s.kind_ = SurfaceKind::P1xP1;
    s.ring_ = make_ring({"x0", "x1", "y0", "y1"}, {1, 1, 1, 1});
    s.tw_ = tw;
    return s;
}

Surface Surface::cubic(const WPoly& eq) {
    Surface s;
    s.kind_ = SurfaceKind::Cubic;
    s.ring_ = eq.ring();
    s.tw_ = eq.tower();
    s.eqs_ = {eq};
    s.validate_equations();
    return s;
}

Surface Surface::quartic_double_plane(const WPoly& eq) {
    Surface s;
    s.kind_ = SurfaceKind::Quartic1112;
    s.ring_ = eq.ring();
    s.tw_ = eq.tower();
    s.eqs_ = {eq};
    s.validate_equations();
    return s;
}

Surface Surface::sextic_cone(const WPoly& eq) {
    Surface s;
    s.kind_ = SurfaceKind::Sextic1123;
    s.ring_ = eq.ring();
    s.tw_ = eq.tower();
    s.eqs_ = {eq};
    s.validate_equations();
    return s;
}

Surface Surface::quadric_pair(const WPoly& q1, const WPoly& q2) {
    Surface s;
    s.kind_ = SurfaceKind::QuadricPair;
    s.ring_ = q1.ring();
    s.tw_ = join_towers(q1.tower(), q2.tower());
    s.eqs_ = {q1.retower(s.tw_), q2.retower(s.tw_)};
    s.validate_equations();
    s.build_pair_reduction();
    return s;
}

Surface Surface::lookup(int degree) {
    if (degree < 5 || degree > 8)
        throw Error(ErrKind::Internal, "lookup surfaces cover degrees 5..8");
    Surface s;
    s.kind_ = SurfaceKind::Lookup;
    s.lookup_degree_ = degree;
    s.tw_ = Tower::rationals();
    s.ring_ = make_ring({"x", "y", "z"}, {1, 1, 1});
    return s;
}

void Surface::validate_equations() const {
    auto expect_degree = [&](const WPoly& e, int d) {
        if (e.is_zero() || !e.is_homogeneous() || e.weighted_degree() != d)
            throw Error(ErrKind::WeightMismatch,
                        "equation must be homogeneous of weighted degree " + std::to_string(d));
    };
    switch (kind_) {
    case SurfaceKind::Cubic:
        if (ring_->vars.size() != 4) throw Error(ErrKind::Parse, "cubic needs 4 variables");
        expect_degree(eqs_[0], 3);
        break;
    case SurfaceKind::Quartic1112: {
        if (ring_->weights != std::vector<int>{1, 1, 1, 2})
            throw Error(ErrKind::WeightMismatch, "quartic kind needs weights 1,1,1,2");
        expect_degree(eqs_[0], 4);
        Expo t2(4, 0);
        t2[3] = 2;
        if (eqs_[0].coeff(t2).is_zero())
            throw Error(ErrKind::Parse, "quartic equation must contain t^2");
        if (eqs_[0].univariate_in(3).count(1))
            throw Error(ErrKind::Parse, "quartic equation must be even in t");
        break;
    }
    case SurfaceKind::Sextic1123: {
        if (ring_->weights != std::vector<int>{1, 1, 2, 3})
            throw Error(ErrKind::WeightMismatch, "sextic kind needs weights 1,1,2,3");
        expect_degree(eqs_[0], 6);
        Expo t2(4, 0);
        t2[3] = 2;
        if (eqs_[0].coeff(t2).is_zero())
            throw Error(ErrKind::Parse, "sextic equation must contain t^2");
        if (eqs_[0].univariate_in(3).count(1))
            throw Error(ErrKind::Parse, "sextic equation must be even in t");
        Expo z3(4, 0);
        z3[2] = 3;
        if (eqs_[0].coeff(z3).is_zero())
            throw Error(ErrKind::Parse, "sextic equation must contain z^3");
        break;
    }
    case SurfaceKind::QuadricPair: {
        if (ring_->vars.size() != 5) throw Error(ErrKind::Parse, "quadric pair needs 5 variables");
        expect_degree(eqs_[0], 2);
        expect_degree(eqs_[1], 2);
        break;
    }
    default: break;
    }
}

void Surface::build_pair_reduction() {
    auto diagonal = [&](const WPoly& q, std::vector<FE>& diag) {
        diag.assign(5, tw_->zero());
        for (const auto& [e, c] : q.terms()) {
            int which = -1;
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 2 && which < 0) which = (int)i;
                else if (e[i] != 0) return false;
            }
            if (which < 0) return false;
            diag[(size_t)which] = c;
        }
        return true;
    };
    std::vector<FE> a, b;
    if (!diagonal(eqs_[0], a) || !diagonal(eqs_[1], b)) return;
    for (int i = 4; i >= 0 && pair_elim_[0] < 0; --i)
        for (int j = i - 1; j >= 0; --j) {
            FE minor = a[(size_t)i] * b[(size_t)j] - a[(size_t)j] * b[(size_t)i];
            if (!minor.is_zero()) {
                pair_elim_[0] = j;
                pair_elim_[1] = i;
                break;
            }
        }
    if (pair_elim_[0] < 0) return;
    int i = pair_elim_[1], j = pair_elim_[0];
    FE det = a[(size_t)i] * b[(size_t)j] - a[(size_t)j] * b[(size_t)i];
    FE dinv = det.inverse();
    WPoly rhs_i = WPoly::zero(ring_, tw_), rhs_j = WPoly::zero(ring_, tw_);
    for (int k = 0; k < 5; ++k) {
        if (k == i || k == j) continue;
        Expo e(5, 0);
        e[(size_t)k] = 2;
        // from a_i xi^2 + a_j xj^2 + a_k xk^2 = 0 (summed) and the b-row:
        // xi^2 = -(b_j a_k - a_j b_k)/det * xk^2 summed; xj^2 likewise
        FE ci = -(b[(size_t)j] * a[(size_t)k] - a[(size_t)j] * b[(size_t)k]) * dinv;
        FE cj = -(a[(size_t)i] * b[(size_t)k] - b[(size_t)i] * a[(size_t)k]) * dinv;
        rhs_i = rhs_i + WPoly::monomial(ring_, tw_, e, ci);
        rhs_j = rhs_j + WPoly::monomial(ring_, tw_, e, cj);
    }
    pair_rhs_ = {rhs_j, rhs_i}; // parallel to pair_elim_ = {j, i}
}

int Surface::degree() const {
    switch (kind_) {
    case SurfaceKind::Sextic1123: return 1;
    case SurfaceKind::Quartic1112: return 2;
    case SurfaceKind::Cubic: return 3;
    case SurfaceKind::QuadricPair: return 4;
    case SurfaceKind::P1xP1: return 8;
    case SurfaceKind::P2: return 9;
    case SurfaceKind::Lookup: return lookup_degree_;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// Reduction modulo the defining equations
// ---------------------------------------------------------------------------

static WPoly reduce_even_power(const WPoly& p, int var, const WPoly& square_value) {
    WPoly cur = p;
    while (cur.degree_in(var) >= 2) {
        WPoly low = WPoly::zero(cur.ring(), cur.tower());
        WPoly high = WPoly::zero(cur.ring(), cur.tower());
        for (const auto& [e, c] : cur.terms()) {
            if (e[(size_t)var] >= 2) {
                Expo r = e;
                r[(size_t)var] -= 2;
                high = high + WPoly::monomial(cur.ring(), cur.tower(), r, c);
            } else {
                low = low + WPoly::monomial(cur.ring(), cur.tower(), e, c);
            }
        }
        cur = low + high * square_value;
    }
    return cur;
}

WPoly Surface::reduce(const WPoly& p) const {
    switch (kind_) {
    case SurfaceKind::P2:
    case SurfaceKind::P1xP1:
    case SurfaceKind::Lookup: return p;
    case SurfaceKind::Sextic1123:
    case SurfaceKind::Quartic1112: {
        Expo t2(4, 0);
        t2[3] = 2;
        FE c = eqs_[0].coeff(t2);
        WPoly g = (WPoly::monomial(ring_, tw_, t2, c) - eqs_[0]).scaled(c.inverse());
        return reduce_even_power(p.retower(join_towers(p.tower(), tw_)), 3, g);
    }
    case SurfaceKind::Cubic: {
        const WPoly& F = eqs_[0];
        Expo lead = F.leading_expo();
        FE lc_inv = F.leading_coeff().inverse();
        WPoly cur = p.retower(join_towers(p.tower(), tw_));
        WPoly out = WPoly::zero(ring_, cur.tower());
        int guard = 0;
        while (!cur.is_zero()) {
            if (++guard > 200000) throw Error(ErrKind::Internal, "cubic reduction diverged");
            bool reduced = false;
            for (auto it = cur.terms().rbegin(); it != cur.terms().rend(); ++it) {
                const Expo& e = it->first;
                bool div = true;
                for (size_t i = 0; i < e.size(); ++i)
                    if (e[i] < lead[i]) { div = false; break; }
                if (!div) continue;
                Expo m(e.size());
                for (size_t i = 0; i < e.size(); ++i) m[i] = e[i] - lead[i];
                WPoly t = WPoly::monomial(ring_, cur.tower(), m, it->second * lc_inv);
                cur = cur - t * F;
                reduced = true;
                break;
            }
            if (!reduced) {
                Expo e = cur.leading_expo();
                FE c = cur.leading_coeff();
                out = out + WPoly::monomial(ring_, cur.tower(), e, c);
                cur = cur - WPoly::monomial(ring_, cur.tower(), e, c);
            }
        }
        return out;
    }
    case SurfaceKind::QuadricPair: {
        if (pair_elim_[0] < 0)
            throw Error(ErrKind::UnsupportedMapShape,
                        "non-diagonal quadric pair has no normal form here");
        WPoly cur = p.retower(join_towers(p.tower(), tw_));
        for (int k = 0; k < 2; ++k)
            cur = reduce_even_power(cur, pair_elim_[k], pair_rhs_[(size_t)k]);
        return cur;
    }
    }
    return p;
}

std::vector<Expo> Surface::anticanonical_basis(int n) const {
    if (n < 1 || n > 6) throw Error(ErrKind::Internal, "anticanonical level capped at 6");
    std::vector<Expo> out;
    switch (kind_) {
    case SurfaceKind::P2:
        return graded_monomials(*ring_, 3 * n);
    case SurfaceKind::P1xP1: {
        for (const auto& e : graded_monomials(*ring_, 4 * n))
            if (e[0] + e[1] == 2 * n && e[2] + e[3] == 2 * n) out.push_back(e);
        return out;
    }
    case SurfaceKind::Sextic1123:
    case SurfaceKind::Quartic1112: {
        for (const auto& e : graded_monomials(*ring_, n))
            if (e[3] <= 1) out.push_back(e);
        return out;
    }
    case SurfaceKind::Cubic: {
        Expo lead = eqs_[0].leading_expo();
        for (const auto& e : graded_monomials(*ring_, n)) {
            bool div = true;
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i] < lead[i]) { div = false; break; }
            if (!div) out.push_back(e);
        }
        return out;
    }
    case SurfaceKind::QuadricPair: {
        if (pair_elim_[0] < 0)
            throw Error(ErrKind::UnsupportedMapShape, "non-diagonal quadric pair");
        for (const auto& e : graded_monomials(*ring_, n))
            if (e[(size_t)pair_elim_[0]] <= 1 && e[(size_t)pair_elim_[1]] <= 1) out.push_back(e);
        return out;
    }
    case SurfaceKind::Lookup:
        throw Error(ErrKind::UnsupportedMapShape, "lookup surfaces carry no equations");
    }
    return out;
}

bool Surface::contains(const SurfacePoint& p) const {
    for (const auto& eq : eqs_)
        if (!eq.eval(p.coords).is_zero()) return false;
    return true;
}

SurfacePoint Surface::normalize_point(std::vector<FE> coords) const {
    TowerPtr tw = tw_;
    for (const auto& c : coords) tw = join_towers(tw, c.tower());
    for (auto& c : coords) c = embed(c, tw);
    auto scale_block = [&](size_t from, size_t to) {
        for (size_t i = from; i < to; ++i) {
            if (!coords[i].is_zero()) {
                FE inv = coords[i].inverse();
                for (size_t j = from; j < to; ++j) coords[j] = coords[j] * inv;
                return true;
            }
        }
        return false;
    };
    if (kind_ == SurfaceKind::P1xP1) {
        if (!scale_block(0, 2) || !scale_block(2, 4))
            throw Error(ErrKind::Internal, "zero block in product point");
        return {coords};
    }
    for (size_t i = 0; i < coords.size(); ++i) {
        if (ring_->weights[i] != 1 || coords[i].is_zero()) continue;
        FE lambda = coords[i].inverse();
        for (size_t j = 0; j < coords.size(); ++j)
            coords[j] = coords[j] * lambda.pow(ring_->weights[j]);
        return {coords};
    }
    if (kind_ == SurfaceKind::Sextic1123 && !coords[2].is_zero() && !coords[3].is_zero()) {
        FE lambda = coords[2] * coords[3].inverse();
        coords[2] = coords[2] * lambda.pow(2);
        coords[3] = coords[3] * lambda.pow(3);
        return {coords};
    }
    throw Error(ErrKind::Internal, "point normalization failed (ambient-singular locus?)");
}

// ---------------------------------------------------------------------------
// Affine system solver (iterated resultants, exact verification)
// ---------------------------------------------------------------------------


std::vector<std::vector<FE>> solve_affine_system(const std::vector<WPoly>& polys_in,
                                                 const std::vector<int>& vars,
                                                 const TowerPtr& tw,
                                                 std::vector<std::string>* obstructions) {
    std::vector<WPoly> polys;
    for (const auto& p : polys_in)
        if (!p.is_zero()) polys.push_back(p.retower(join_towers(p.tower(), tw)));
    for (const auto& p : polys)
        if (p.weighted_degree() == 0) return {};
    if (vars.empty()) return {{}};
    if (polys.empty()) {
        if (obstructions) obstructions->push_back("underdetermined system");
        return {};
    }
    if (vars.size() == 1) {
        int v = vars[0];
        KPoly g;
        bool first = true;
        for (const auto& p : polys) {
            KPoly k = wpoly_to_kpoly(p, v);
            g = first ? k : KPoly::gcd(g, k);
            first = false;
        }
        if (g.is_zero() || g.degree() == 0) {
            if (g.is_zero() && obstructions)
                obstructions->push_back("identically zero after reduction");
            return {};
        }
        std::vector<std::vector<FE>> out;
        try {
            auto fac = factor_k(g, 24);
            for (const auto& f : fac.factors) {
                if (f.poly.degree() == 1) out.push_back({-f.poly.coeff(0)});
                else
                    for (const auto& r : roots_via_extension(f.poly, obstructions))
                        out.push_back({r});
            }
        } catch (const Error& e) {
            if (e.kind() != ErrKind::DegreeCap) throw;
            if (obstructions) obstructions->push_back("degree cap: " + g.str());
        }
        return out;
    }
    int v = vars.back();
    std::vector<int> rest(vars.begin(), vars.end() - 1);
    std::vector<WPoly> with_v, without_v;
    for (const auto& p : polys)
        (p.degree_in(v) > 0 ? with_v : without_v).push_back(p);
    if (with_v.empty()) {
        // the eliminated variable is unconstrained: either the rest of the
        // system is inconsistent (fine) or the locus is positive-dimensional
        auto subs = solve_affine_system(polys, rest, tw, obstructions);
        if (!subs.empty() && obstructions)
            obstructions->push_back("no equation involves an eliminated variable");
        return {};
    }
    std::vector<WPoly> projected = without_v;
    bool got_constraint = !projected.empty();
    for (size_t base = 0; base < with_v.size(); ++base) {
        std::vector<WPoly> res;
        bool any_nonzero = false;
        for (size_t i = 0; i < with_v.size(); ++i) {
            if (i == base) continue;
            WPoly r = wpoly_resultant(with_v[base], with_v[i], v);
            if (!r.is_zero()) any_nonzero = true;
            res.push_back(r);
        }
        if (with_v.size() == 1) any_nonzero = got_constraint;
        if (any_nonzero || base + 1 == with_v.size()) {
            for (auto& r : res)
                if (!r.is_zero()) {
                    projected.push_back(r);
                    got_constraint = true;
                }
            break;
        }
    }
    if (!got_constraint) {
        if (obstructions)
            obstructions->push_back("projection gave no constraints (common factor?)");
        return {};
    }
    auto subs = solve_affine_system(projected, rest, tw, obstructions);
    std::vector<std::vector<FE>> out;
    for (const auto& sub : subs) {
        TowerPtr tw2 = tw;
        for (const auto& val : sub) tw2 = join_towers(tw2, val.tower());
        KPoly g;
        bool first = true;
        bool inconsistent = false;
        for (const auto& p : polys) {
            WPoly q = p.retower(tw2);
            for (size_t i = 0; i < rest.size(); ++i)
                q = q.substitute_var(rest[i], WPoly::constant(q.ring(), tw2, embed(sub[i], tw2)));
            if (q.is_zero()) continue;
            if (q.degree_in(v) == 0) { inconsistent = true; break; }
            KPoly k = wpoly_to_kpoly(q, v);
            g = first ? k : KPoly::gcd(g, k);
            first = false;
        }
        if (inconsistent) continue;
        if (first || g.is_zero()) {
            if (obstructions) obstructions->push_back("fiber not zero-dimensional");
            continue;
        }
        if (g.degree() == 0) continue;
        try {
            auto fac = factor_k(g, 24);
            for (const auto& f : fac.factors) {
                std::vector<FE> vroots;
                if (f.poly.degree() == 1) vroots.push_back(-f.poly.coeff(0));
                else vroots = roots_via_extension(f.poly, obstructions);
                for (const auto& vroot : vroots) {
                std::vector<FE> sol;
                for (const auto& s : sub) sol.push_back(embed(s, vroot.tower()));
                sol.push_back(vroot);
                bool good = true;
                for (const auto& p : polys) {
                    std::vector<FE> point(p.ring()->vars.size(), vroot.tower()->zero());
                    for (size_t i = 0; i < rest.size(); ++i) point[(size_t)rest[i]] = sol[i];
                    point[(size_t)v] = sol.back();
                    if (!p.eval(point).is_zero()) { good = false; break; }
                }
                if (good) out.push_back(std::move(sol));
                }
            }
        } catch (const Error& e) {
            if (e.kind() != ErrKind::DegreeCap) throw;
            if (obstructions) obstructions->push_back("degree cap: " + g.str());
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Smoothness
// ---------------------------------------------------------------------------

namespace {

struct ProjectiveZeros {
    std::vector<std::vector<FE>> points;
    std::vector<std::string> obstructions;
};

// common zeros of homogeneous forms, chart by chart; `vars` gives the chart
// priority, elimination runs from the back of the remaining list
ProjectiveZeros projective_common_zeros(const std::vector<WPoly>& forms,
                                        const std::vector<int>& vars, const TowerPtr& tw) {
    ProjectiveZeros out;
    const WRingPtr& ring = forms[0].ring();
    for (size_t chart = 0; chart < vars.size(); ++chart) {
        std::vector<WPoly> sys;
        for (const auto& f : forms) {
            WPoly g = f;
            for (size_t i = 0; i < chart; ++i)
                g = g.substitute_var(vars[i], WPoly::zero(ring, tw));
            g = g.substitute_var(vars[chart], WPoly::constant(ring, tw, tw->one()));
            sys.push_back(g);
        }
        std::vector<int> affine(vars.begin() + chart + 1, vars.end());
        auto sols = solve_affine_system(sys, affine, tw, &out.obstructions);
        for (const auto& s : sols) {
            TowerPtr tws = tw;
            for (const auto& val : s) tws = join_towers(tws, val.tower());
            std::vector<FE> full(ring->vars.size(), tws->zero());
            full[(size_t)vars[chart]] = tws->one();
            for (size_t i = 0; i < affine.size(); ++i)
                full[(size_t)affine[i]] = embed(s[i], tws);
            out.points.push_back(full);
        }
    }
    return out;
}

} // namespace

SmoothnessReport Surface::is_smooth() const {
    SmoothnessReport rep;
    switch (kind_) {
    case SurfaceKind::P2:
    case SurfaceKind::P1xP1:
    case SurfaceKind::Lookup:
        rep.smooth = true;
        return rep;
    case SurfaceKind::Sextic1123:
    case SurfaceKind::Quartic1112: {
        Expo t2(4, 0);
        t2[3] = 2;
        FE c = eqs_[0].coeff(t2);
        WPoly g = (WPoly::monomial(ring_, tw_, t2, c) - eqs_[0]).scaled(c.inverse());
        std::vector<WPoly> forms = {g};
        for (int i = 0; i < 3; ++i) forms.push_back(g.derivative(i));
        std::vector<int> order = {0, 1, 2}; // charts x,y,z; z eliminated first inside
        auto zeros = projective_common_zeros(forms, order, tw_);
        if (!zeros.points.empty()) {
            std::vector<FE> coords = zeros.points[0];
            coords.push_back(coords[0].tower()->zero());
            rep.smooth = false;
            rep.witness = normalize_point(coords);
            return rep;
        }
        if (!zeros.obstructions.empty())
            throw Error(ErrKind::ExtensionRequired,
                        "smoothness: unresolved singular candidate: " + zeros.obstructions[0]);
        rep.smooth = true;
        return rep;
    }
    case SurfaceKind::Cubic: {
        std::vector<WPoly> forms;
        for (int i = 0; i < 4; ++i) forms.push_back(eqs_[0].derivative(i));
        auto zeros = projective_common_zeros(forms, {0, 1, 2, 3}, tw_);
        if (!zeros.points.empty()) {
            rep.smooth = false;
            rep.witness = normalize_point(zeros.points[0]);
            return rep;
        }
        if (!zeros.obstructions.empty())
            throw Error(ErrKind::ExtensionRequired,
                        "smoothness: unresolved singular candidate: " + zeros.obstructions[0]);
        rep.smooth = true;
        return rep;
    }
    case SurfaceKind::QuadricPair: {
        std::vector<FE> a(5, tw_->zero()), b(5, tw_->zero());
        auto diagonal = [&](const WPoly& q, std::vector<FE>& diag) {
            for (const auto& [e, cf] : q.terms()) {
                int which = -1;
                for (size_t i = 0; i < e.size(); ++i) {
                    if (e[i] == 2 && which < 0) which = (int)i;
                    else if (e[i] != 0) return false;
                }
                if (which < 0) return false;
                diag[(size_t)which] = cf;
            }
            return true;
        };
        if (!diagonal(eqs_[0], a) || !diagonal(eqs_[1], b)) {
            rep.decided = false;
            rep.obstruction = "non-diagonal quadric pair smoothness unsupported";
            return rep;
        }
        for (int i = 0; i < 5; ++i)
            if (a[(size_t)i].is_zero() && b[(size_t)i].is_zero()) {
                rep.smooth = false;
                std::vector<FE> coords(5, tw_->zero());
                coords[(size_t)i] = tw_->one();
                rep.witness = normalize_point(coords);
                return rep;
            }
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j) {
                FE minor = a[(size_t)i] * b[(size_t)j] - a[(size_t)j] * b[(size_t)i];
                if (minor.is_zero()) {
                    rep.smooth = false;
                    rep.obstruction = "coincident quadric ratios at coordinates " +
                                      std::to_string(i) + "," + std::to_string(j);
                    return rep;
                }
            }
        rep.smooth = true;
        return rep;
    }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Local charts
// ---------------------------------------------------------------------------

namespace {

WPoly series_inverse(const WPoly& u, int order) {
    Expo zero_e(u.ring()->vars.size(), 0);
    FE c0 = u.coeff(zero_e);
    if (c0.is_zero()) throw Error(ErrKind::Internal, "series not a unit");
    WPoly y = WPoly::constant(u.ring(), u.tower(), c0.inverse());
    WPoly two = WPoly::constant(u.ring(), u.tower(), u.tower()->from_rat(2));
    for (int it = 0; it < 12 && (1 << it) <= 2 * order + 2; ++it)
        y = (y * (two - u * y)).truncate_total_degree(order);
    return y;
}

} // namespace

Chart Surface::local_chart(const SurfacePoint& p, int order) const {
    TowerPtr tw = tw_;
    for (const auto& c : p.coords) tw = join_towers(tw, c.tower());
    size_t nv = ring_->vars.size();
    std::vector<FE> P(nv);
    for (size_t i = 0; i < nv; ++i) P[i] = embed(p.coords[i], tw);

    Chart chart;
    chart.germ_ring = make_ring({"s1", "s2"}, {1, 1});
    chart.order = order;

    std::vector<bool> anchored(nv, false);
    if (kind_ == SurfaceKind::P1xP1) {
        auto pin = [&](size_t from, size_t to) {
            for (size_t i = from; i < to; ++i)
                if (!P[i].is_zero()) { anchored[i] = true; return; }
            throw Error(ErrKind::Internal, "degenerate product point");
        };
        pin(0, 2);
        pin(2, 4);
    } else {
        int anchor = -1;
        for (size_t i = 0; i < nv; ++i)
            if (ring_->weights[i] == 1 && !P[i].is_zero()) { anchor = (int)i; break; }
        if (anchor < 0)
            for (size_t i = 0; i < nv; ++i)
                if (!P[i].is_zero()) { anchor = (int)i; break; }
        if (anchor < 0) throw Error(ErrKind::Internal, "zero point");
        anchored[(size_t)anchor] = true;
    }

    size_t neq = eqs_.size();
    std::vector<int> free_vars;
    for (size_t i = 0; i < nv; ++i)
        if (!anchored[i]) free_vars.push_back((int)i);
    if (free_vars.size() != 2 + neq)
        throw Error(ErrKind::Internal, "chart variable count mismatch");

    std::vector<int> deps, params;
    auto jac_ok = [&](const std::vector<int>& dep) {
        Matrix J(tw, (int)neq, (int)neq);
        for (size_t i = 0; i < neq; ++i)
            for (size_t j = 0; j < neq; ++j)
                J.at((int)i, (int)j) = eqs_[i].retower(tw).derivative(dep[j]).eval(P);
        return !J.determinant().is_zero();
    };
    bool chosen = (neq == 0);
    if (neq == 0) params = free_vars;
    if (neq == 1) {
        for (int cand : {free_vars[2], free_vars[1], free_vars[0]}) {
            if (jac_ok({cand})) {
                deps = {cand};
                for (int v : free_vars)
                    if (v != cand) params.push_back(v);
                chosen = true;
                break;
            }
        }
    }
    if (neq == 2) {
        for (size_t i = 0; i < free_vars.size() && !chosen; ++i)
            for (size_t j = i + 1; j < free_vars.size() && !chosen; ++j) {
                std::vector<int> cand = {free_vars[i], free_vars[j]};
                if (jac_ok(cand)) {
                    deps = cand;
                    for (int v : free_vars)
                        if (v != cand[0] && v != cand[1]) params.push_back(v);
                    chosen = true;
                }
            }
    }
    if (!chosen) throw Error(ErrKind::Internal, "no invertible chart Jacobian (singular point?)");
    chart.param_vars = params;

    std::vector<WPoly> img(nv, WPoly::zero(chart.germ_ring, tw));
    for (size_t i = 0; i < nv; ++i) img[i] = WPoly::constant(chart.germ_ring, tw, P[i]);
    for (size_t k = 0; k < params.size(); ++k)
        img[(size_t)params[k]] =
            img[(size_t)params[k]] + WPoly::variable(chart.germ_ring, tw, (int)k);

    for (int round = 0; round < 12; ++round) {
        std::vector<WPoly> vals(neq);
        bool done = true;
        for (size_t i = 0; i < neq; ++i) {
            vals[i] = eqs_[i].retower(tw).substitute(img, false).truncate_total_degree(order);
            if (!vals[i].is_zero()) done = false;
        }
        if (done) break;
        if (round == 11) throw Error(ErrKind::Internal, "chart series did not stabilize");
        if (neq == 1) {
            WPoly d = eqs_[0].retower(tw).derivative(deps[0]).substitute(img, false)
                          .truncate_total_degree(order);
            img[(size_t)deps[0]] =
                (img[(size_t)deps[0]] - vals[0] * series_inverse(d, order))
                    .truncate_total_degree(order);
        } else if (neq == 2) {
            auto dpoly = [&](size_t i, int j) {
                return eqs_[i].retower(tw).derivative(j).substitute(img, false)
                    .truncate_total_degree(order);
            };
            WPoly a = dpoly(0, deps[0]), b = dpoly(0, deps[1]);
            WPoly cm = dpoly(1, deps[0]), d = dpoly(1, deps[1]);
            WPoly det = (a * d - b * cm).truncate_total_degree(order);
            WPoly dinv = series_inverse(det, order);
            WPoly d0 = ((d * vals[0] - b * vals[1]) * dinv).truncate_total_degree(order);
            WPoly d1 = ((a * vals[1] - cm * vals[0]) * dinv).truncate_total_degree(order);
            img[(size_t)deps[0]] = (img[(size_t)deps[0]] - d0).truncate_total_degree(order);
            img[(size_t)deps[1]] = (img[(size_t)deps[1]] - d1).truncate_total_degree(order);
        }
    }
    chart.images = std::move(img);
    return chart;
}

WPoly Surface::germ_of_section(const WPoly& section, const Chart& chart) const {
    return section.retower(join_towers(section.tower(), chart.images[0].tower()))
        .substitute(chart.images, false)
        .truncate_total_degree(chart.order);
}

} // namespace dpa
