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
#include "dpa/germ.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

namespace dpa {

CurveGerm germ_from_string(const std::string& text, const TowerPtr& tw) {
    auto ring = make_ring({"x", "y"}, {1, 1});
    CurveGerm g;
    g.poly = parse_wpoly(text, ring, tw);
    g.exact = true;
    g.trunc_order = INT32_MAX / 2;
    return g;
}

CurveGerm extract_germ(const Surface& X, const WPoly& section, const SurfacePoint& p, int order) {
    Chart ch = X.local_chart(p, order);
    CurveGerm g;
    g.poly = X.germ_of_section(section, ch);
    g.exact = false;
    g.trunc_order = order;
    if (g.poly.is_zero())
        throw Error(ErrKind::TruncationInsufficient, "section germ vanished at order " +
                                                         std::to_string(order));
    return g;
}

// ---------------------------------------------------------------------------
// Bivariate gcd and squarefree machinery (coefficients in K[u])
// ---------------------------------------------------------------------------

namespace {

// view a two-variable polynomial as a vector of u-polynomials indexed by v-degree
std::vector<KPoly> as_v_coeffs(const WPoly& f, int uvar, int vvar) {
    std::vector<KPoly> out((size_t)f.degree_in(vvar) + 1, KPoly(f.tower()));
    for (size_t i = 0; i < out.size(); ++i) out[i] = KPoly(f.tower());
    auto uni = f.univariate_in(vvar);
    for (const auto& [d, coeff] : uni) out[(size_t)d] = wpoly_to_kpoly(coeff, uvar);
    return out;
}

WPoly from_v_coeffs(const std::vector<KPoly>& c, const WRingPtr& ring, const TowerPtr& tw,
                    int uvar, int vvar) {
    WPoly out = WPoly::zero(ring, tw);
    for (size_t d = 0; d < c.size(); ++d) {
        if (c[d].is_zero()) continue;
        WPoly cu = kpoly_to_wpoly(c[d], ring, uvar);
        Expo e(ring->vars.size(), 0);
        e[(size_t)vvar] = (int)d;
        out = out + cu * WPoly::monomial(ring, tw, e, tw->one());
    }
    return out;
}

void vtrim(std::vector<KPoly>& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

KPoly content_of(const std::vector<KPoly>& a) {
    KPoly g;
    bool first = true;
    for (const auto& c : a) {
        if (c.is_zero()) continue;
        g = first ? c : KPoly::gcd(g, c);
        first = false;
    }
    return first ? KPoly() : g.monic();
}

std::vector<KPoly> divide_content(const std::vector<KPoly>& a, const KPoly& cont) {
    std::vector<KPoly> out = a;
    for (auto& c : out) {
        if (c.is_zero()) continue;
        auto [q, r] = KPoly::divmod(c, cont);
        if (!r.is_zero()) throw Error(ErrKind::Internal, "content division not exact");
        c = q;
    }
    return out;
}

std::vector<KPoly> vmul(const std::vector<KPoly>& a, const std::vector<KPoly>& b,
                        const TowerPtr& tw) {
    if (a.empty() || b.empty()) return {};
    std::vector<KPoly> r(a.size() + b.size() - 1, KPoly(tw));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    vtrim(r);
    return r;
}

std::vector<KPoly> vscale(const std::vector<KPoly>& a, const KPoly& f) {
    std::vector<KPoly> r = a;
    for (auto& c : r) c = c * f;
    vtrim(r);
    return r;
}

std::vector<KPoly> vsub(std::vector<KPoly> a, const std::vector<KPoly>& b, const TowerPtr& tw) {
    if (a.size() < b.size()) a.resize(b.size(), KPoly(tw));
    for (size_t i = 0; i < b.size(); ++i) a[i] = a[i] - b[i];
    vtrim(a);
    return a;
}

// pseudo-remainder of a by b (b nonzero), both primitive-ish
std::vector<KPoly> vpseudo_rem(std::vector<KPoly> a, const std::vector<KPoly>& b,
                               const TowerPtr& tw) {
    int db = (int)b.size() - 1;
    while ((int)a.size() - 1 >= db && !a.empty()) {
        KPoly lc_a = a.back();
        int shift = (int)a.size() - 1 - db;
        // a = a*lc_b - lc_a * b * v^shift
        std::vector<KPoly> sb(b.size() + (size_t)shift, KPoly(tw));
        for (size_t i = 0; i < b.size(); ++i) sb[i + (size_t)shift] = b[i] * lc_a;
        a = vsub(vscale(a, b.back()), sb, tw);
    }
    return a;
}

} // namespace

WPoly bivariate_gcd(const WPoly& a, const WPoly& b, int uvar, int vvar) {
    TowerPtr tw = join_towers(a.tower(), b.tower());
    const WRingPtr& ring = a.ring();
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    auto va = as_v_coeffs(a.retower(tw), uvar, vvar);
    auto vb = as_v_coeffs(b.retower(tw), uvar, vvar);
    KPoly ca = content_of(va), cb = content_of(vb);
    auto pa = divide_content(va, ca);
    auto pb = divide_content(vb, cb);
    // primitive PRS
    std::vector<KPoly> f = pa.size() >= pb.size() ? pa : pb;
    std::vector<KPoly> g = pa.size() >= pb.size() ? pb : pa;
    while (!g.empty()) {
        auto r = vpseudo_rem(f, g, tw);
        f = g;
        g = r;
        if (!g.empty()) {
            KPoly c = content_of(g);
            if (!c.is_zero() && c.degree() >= 0) g = divide_content(g, c);
        }
    }
    KPoly cg = KPoly::gcd(ca, cb);
    // normalize f: monic leading coefficient
    if (!f.empty()) {
        FE lead = f.back().lc();
        for (auto& c : f) c = c.scaled(lead.inverse());
    }
    std::vector<KPoly> result = f;
    if (!cg.is_zero() && cg.degree() > 0) {
        std::vector<KPoly> cgv = {cg};
        result = vmul(result, cgv, tw);
    }
    return from_v_coeffs(result, ring, tw, uvar, vvar);
}

std::vector<std::pair<WPoly, int>> bivariate_squarefree(const WPoly& f, int uvar, int vvar) {
    std::vector<std::pair<WPoly, int>> out;
    if (f.is_zero() || f.weighted_degree() == 0) return out;
    // peel repeated factors: g1 = gcd(f, f_u, f_v); f_red = f / g1; recurse
    WPoly fu = f.derivative(uvar), fv = f.derivative(vvar);
    WPoly g = bivariate_gcd(bivariate_gcd(f, fu, uvar, vvar), fv, uvar, vvar);
    if (g.weighted_degree() <= 0) {
        out.push_back({f, 1});
        return out;
    }
    WPoly red = WPoly::divide_exact(f, g);
    // red = squarefree part (product of distinct primes); recurse on g
    auto rest = bivariate_squarefree(g, uvar, vvar);
    // combine: every prime in red gets 1 + (its multiplicity within g's tally)
    // use: multiplicities assemble as m(p in f) = 1 + m(p in g)
    for (auto& [p, m] : rest) {
        // p divides red as well; strip p from red and bump multiplicity
        out.push_back({p, m + 1});
        red = WPoly::divide_exact(red, p);
    }
    if (red.weighted_degree() > 0) out.push_back({red, 1});
    return out;
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

namespace {

// truncated-coefficient Hensel: f = H * E in K[u]/u^N [v], H monic quadratic,
// starting from f(0,v) = v^2 * E0(v) with E0(0) != 0
struct WeierstrassFactor {
    KPoly b, c; // H = v^2 + b(u) v + c(u), truncated mod u^N
};

KPoly ktrunc(const KPoly& p, int N) {
    std::vector<FE> c;
    for (int i = 0; i < std::min(N, p.degree() + 1); ++i) c.push_back(p.coeff(i));
    return KPoly(p.tower(), c);
}

std::vector<KPoly> vvtrunc(std::vector<KPoly> a, int N) {
    for (auto& c : a) c = ktrunc(c, N);
    vtrim(a);
    return a;
}

// divide a by monic b in (K[u]/u^N)[v]
void vdivmod_monic(const std::vector<KPoly>& a, const std::vector<KPoly>& b, int N,
                   const TowerPtr& tw, std::vector<KPoly>& q, std::vector<KPoly>& r) {
    r = vvtrunc(a, N);
    q.clear();
    if (r.size() >= b.size()) q.assign(r.size() - b.size() + 1, KPoly(tw));
    while (r.size() >= b.size() && !r.empty()) {
        KPoly f = r.back();
        size_t off = r.size() - b.size();
        q[off] = q[off] + f;
        std::vector<KPoly> sb(b.size() + off, KPoly(tw));
        for (size_t i = 0; i < b.size(); ++i) sb[i + off] = ktrunc(b[i] * f, N);
        r = vsub(r, sb, tw);
        r = vvtrunc(r, N);
    }
    vtrim(q);
}

WeierstrassFactor weierstrass_quadratic(const WPoly& f, int uvar, int vvar, int N) {
    TowerPtr tw = f.tower();
    auto F = vvtrunc(as_v_coeffs(f, uvar, vvar), N);
    // split f(0,v) = v^2 * E0(v)
    int dv = (int)F.size() - 1;
    std::vector<FE> f0((size_t)dv + 1, tw->zero());
    for (int i = 0; i <= dv; ++i) f0[(size_t)i] = F[(size_t)i].coeff(0);
    KPoly f0p(tw, f0);
    if (f0p.degree() < 2) throw Error(ErrKind::TruncationInsufficient, "not v-regular of order 2");
    // require v^2 exactly divides f0 (v-regularity of order 2)
    if (!f0p.coeff(0).is_zero() || !f0p.coeff(1).is_zero() || f0p.coeff(2).is_zero())
        throw Error(ErrKind::Internal, "germ not prepared for Weierstrass split");
    std::vector<FE> e0c;
    for (int i = 2; i <= f0p.degree(); ++i) e0c.push_back(f0p.coeff(i));
    KPoly E0(tw, e0c);
    // Bezout: s*(v^2) + t*E0 = 1 in K[v]
    KPoly V2 = KPoly::monomial(tw, 2, tw->one());
    KPoly gq, sq, tq;
    {
        // extended Euclid over K[v]
        KPoly r0 = V2, r1 = E0, s0 = KPoly::constant(tw, tw->one()), s1(tw);
        KPoly t0(tw), t1 = KPoly::constant(tw, tw->one());
        while (!r1.is_zero()) {
            auto [qq, rr] = KPoly::divmod(r0, r1);
            r0 = r1; r1 = rr;
            KPoly s2 = s0 - qq * s1;
            s0 = s1; s1 = s2;
            KPoly t2 = t0 - qq * t1;
            t0 = t1; t1 = t2;
        }
        FE inv = r0.lc().inverse();
        gq = r0.scaled(inv);
        sq = s0.scaled(inv);
        tq = t0.scaled(inv);
        if (gq.degree() != 0) throw Error(ErrKind::Internal, "weierstrass: factors not coprime");
    }
    auto to_v = [&](const KPoly& p) {
        std::vector<KPoly> r((size_t)p.degree() + 1, KPoly(tw));
        for (int i = 0; i <= p.degree(); ++i)
            r[(size_t)i] = KPoly::constant(tw, p.coeff(i));
        vtrim(r);
        return r;
    };
    std::vector<KPoly> H = to_v(V2), E = to_v(E0), S = to_v(sq), T = to_v(tq);
    // quadratic lifting in powers of u
    int prec = 1;
    while (prec < N) {
        int p2 = std::min(N, prec * 2);
        // err = f - H*E mod u^p2 ; identity S*H + T*E = 1
        auto err = vsub(F, vmul(H, E, tw), tw);
        err = vvtrunc(err, p2);
        std::vector<KPoly> q, r;
        vdivmod_monic(vmul(T, err, tw), H, p2, tw, q, r);
        std::vector<KPoly> H1 = vvtrunc(vsub(H, vscale(r, KPoly::constant(tw, -tw->one())), tw), p2);
        std::vector<KPoly> E1, R1;
        vdivmod_monic(F, H1, p2, tw, E1, R1);
        // lift the Bezout pair
        auto b = vsub(vmul(S, H1, tw), to_v(KPoly::constant(tw, tw->one())), tw);
        b = vsub(b, vscale(vmul(T, E1, tw), KPoly::constant(tw, -tw->one())), tw);
        b = vvtrunc(b, p2);
        std::vector<KPoly> q2, r2;
        vdivmod_monic(vmul(T, b, tw), H1, p2, tw, q2, r2);
        std::vector<KPoly> T1 = vvtrunc(vsub(T, r2, tw), p2);
        std::vector<KPoly> S1 = vvtrunc(
            vsub(S, vsub(vmul(S, b, tw),
                         vscale(vmul(q2, E1, tw), KPoly::constant(tw, -tw->one())), tw), tw),
            p2);
        H = H1; E = E1; S = S1; T = T1;
        prec = p2;
    }
    WeierstrassFactor out;
    out.b = H.size() > 1 ? H[1] : KPoly(tw);
    out.c = H.size() > 0 ? H[0] : KPoly(tw);
    return out;
}

// lowest-degree homogeneous part
WPoly tangent_cone(const WPoly& f) {
    int m = f.min_weighted_degree();
    WPoly out(f.ring(), f.tower());
    for (const auto& [e, c] : f.terms()) {
        int d = 0;
        for (size_t i = 0; i < e.size(); ++i) d += e[i];
        if (d == m) out = out + WPoly::monomial(f.ring(), f.tower(), e, c);
    }
    return out;
}

bool binary_form_squarefree(const WPoly& form, int uvar, int vvar) {
    KPoly k = binary_dehomogenize(form, uvar, vvar);
    int ymult = form.weighted_degree() - k.degree();
    if (ymult >= 2) return false;
    if (k.degree() >= 1) {
        KPoly g = KPoly::gcd(k, k.derivative());
        if (g.degree() > 0) return false;
    }
    // u-multiplicity = order of vanishing at u=0
    int i = 0;
    while (i <= k.degree() && k.coeff(i).is_zero()) ++i;
    if (i >= 2) return false;
    return true;
}

} // namespace

GermClass classify_germ(const CurveGerm& g) {
    GermClass out;
    if (g.poly.is_zero()) throw Error(ErrKind::Internal, "zero germ");
    const WRingPtr& ring = g.poly.ring();
    if (ring->vars.size() != 2) throw Error(ErrKind::Internal, "germ ring must have 2 variables");
    int m = g.poly.min_weighted_degree();
    out.multiplicity = m;
    if (m == 0) throw Error(ErrKind::Internal, "germ does not vanish at the origin");
    if (m == 1) {
        out.tag = GermClass::Tag::Smooth;
        return out;
    }
    // reduced?
    if (g.exact) {
        auto sq = bivariate_squarefree(g.poly, 0, 1);
        if (sq.size() != 1 || sq[0].second != 1) {
            out.tag = GermClass::Tag::Other;
            out.detail = "non-reduced germ";
            return out;
        }
    }
    WPoly tc = tangent_cone(g.poly);
    if (m >= 3) {
        if (binary_form_squarefree(tc, 0, 1)) {
            out.tag = GermClass::Tag::Ordinary;
            out.k = 0;
            return out;
        }
        out.tag = GermClass::Tag::Other;
        out.detail = "multiplicity " + std::to_string(m) + " with degenerate tangent cone";
        return out;
    }
    // multiplicity 2: rotate until v-regular of order 2 (coefficient of v^2 nonzero)
    WPoly f = g.poly;
    TowerPtr tw = f.tower();
    Expo v2(2, 0);
    v2[1] = 2;
    for (int c = 1; c <= 4 && tangent_cone(f).coeff(v2).is_zero(); ++c) {
        // u -> u, v -> v ; shear u -> u + c*v? rotate: substitute u = u + c*v
        WPoly u_img = WPoly::variable(ring, tw, 0) +
                      WPoly::variable(ring, tw, 1).scaled(tw->from_rat(c));
        f = g.poly.substitute({u_img, WPoly::variable(ring, tw, 1)}, false);
    }
    if (tangent_cone(f).coeff(v2).is_zero())
        throw Error(ErrKind::Internal, "no v-regular rotation found");
    // normalize leading v^2 coefficient to 1 at u=0 by scaling
    int N = g.exact ? 4 * f.weighted_degree() + 8 : g.trunc_order;
    auto wf = weierstrass_quadratic(f, 0, 1, N);
    KPoly disc = wf.b * wf.b - wf.c.scaled(f.tower()->from_rat(4));
    int ordd = 0;
    while (ordd <= disc.degree() && disc.coeff(ordd).is_zero()) ++ordd;
    if (disc.is_zero() || ordd > disc.degree() || ordd + 1 >= N)
        throw Error(ErrKind::TruncationInsufficient,
                    "discriminant order beyond truncation " + std::to_string(N));
    out.tag = GermClass::Tag::Ak;
    out.k = ordd - 1;
    return out;
}

// ---------------------------------------------------------------------------
// Newton polygon lct
// ---------------------------------------------------------------------------

NewtonLct newton_lct(const CurveGerm& g) {
    NewtonLct out;
    const WPoly& f = g.poly;
    if (f.is_zero()) throw Error(ErrKind::Internal, "zero germ");
    TowerPtr tw = f.tower();
    // support
    std::vector<std::pair<int, int>> pts;
    for (const auto& [e, c] : f.terms()) pts.push_back({e[0], e[1]});
    // lower-left staircase hull vertices
    std::sort(pts.begin(), pts.end());
    // keep only minimal points (no other point dominates)
    std::vector<std::pair<int, int>> minimal;
    for (auto& p : pts) {
        bool dominated = false;
        for (auto& q : pts)
            if (q != p && q.first <= p.first && q.second <= p.second) dominated = true;
        if (!dominated) minimal.push_back(p);
    }
    std::sort(minimal.begin(), minimal.end(),
              [](auto& a, auto& b) { return a.first != b.first ? a.first < b.first : a.second < b.second; });
    // convex hull of minimal points walking by increasing i, decreasing j
    std::vector<std::pair<int, int>> hull;
    for (auto& p : minimal) {
        while (hull.size() >= 2) {
            auto& a = hull[hull.size() - 2];
            auto& b = hull[hull.size() - 1];
            long cross = (long)(b.first - a.first) * (p.second - a.second) -
                         (long)(b.second - a.second) * (p.first - a.first);
            if (cross >= 0) hull.pop_back();
            else break;
        }
        hull.push_back(p);
    }
    // diagonal crossing t0: check vertical ray above first vertex, segments,
    // horizontal ray right of last vertex
    Rat t0;
    bool found = false;
    {
        auto& first = hull.front();
        if (first.second <= first.first) {
            // vertical ray {i = first.i, j >= first.j} crosses diagonal at i
            t0 = first.first;
            found = true;
        }
    }
    if (!found) {
        for (size_t s = 0; s + 1 < hull.size() && !found; ++s) {
            auto [i0, j0] = hull[s];
            auto [i1, j1] = hull[s + 1];
            // segment param: (i0,j0) + l*(i1-i0, j1-j0), l in [0,1]; i = j:
            long di = i1 - i0, dj = j1 - j0;
            // i0 + l di = j0 + l dj => l = (j0 - i0)/(di - dj)
            if (di == dj) continue;
            Rat l = rat(j0 - i0, (long)(di - dj));
            if (l >= 0 && l <= 1) {
                t0 = Rat(i0) + l * Rat((long)di);
                found = true;
            }
        }
    }
    if (!found) {
        auto& last = hull.back();
        if (last.first <= last.second) {
            t0 = last.second;
            found = true;
        }
    }
    if (!found) throw Error(ErrKind::Internal, "diagonal missed the Newton boundary");
    // nondegeneracy of all compact faces
    for (size_t s = 0; s + 1 < hull.size(); ++s) {
        auto [i0, j0] = hull[s];
        auto [i1, j1] = hull[s + 1];
        int di = i1 - i0, dj = j1 - j0;
        int gg = std::gcd(di, -dj);
        int p = di / gg, q = -dj / gg;
        (void)q;
        std::vector<FE> coeffs;
        for (int l = 0; l <= gg; ++l) {
            Expo e(2, 0);
            e[0] = i0 + l * (di / gg);
            e[1] = j0 + l * (dj / gg);
            coeffs.push_back(f.coeff(e));
        }
        KPoly h(tw, coeffs);
        if (h.degree() >= 1) {
            KPoly gcd1 = KPoly::gcd(h, h.derivative());
            if (gcd1.degree() > 0) {
                out.ok = false;
                out.reason = "degenerate face at (" + std::to_string(i0) + "," +
                             std::to_string(j0) + ")";
                return out;
            }
        }
    }
    out.ok = true;
    Rat inv = t0 == 0 ? Rat(1) : Rat(1) / t0;
    out.lct = std::min(Rat(1), inv);
    return out;
}

// ---------------------------------------------------------------------------
// Resolution by point blow-ups
// ---------------------------------------------------------------------------

namespace {

struct Branch {
    WPoly poly; // reduced germ through the current origin
    Rat coeff;  // effective coefficient in the log pair
    int acc;    // accuracy in total degree (large for exact)
};

struct PState {
    std::vector<Branch> branches;
    std::vector<int> exc;      // node ids through the point
    std::vector<int> exc_axis; // 0: E = {u=0}, 1: E = {v=0}
    int depth = 0;
};

int germ_mult(const WPoly& f) { return f.is_zero() ? INT32_MAX / 4 : f.min_weighted_degree(); }

} // namespace

ResolutionResult resolve_and_lct(const std::vector<std::pair<CurveGerm, Rat>>& components,
                                 int depth_cap) {
    ResolutionResult out;
    if (components.empty()) throw Error(ErrKind::Internal, "no components");
    const WRingPtr& ring = components[0].first.poly.ring();
    TowerPtr tw = components[0].first.poly.tower();
    for (const auto& [g, a] : components) tw = join_towers(tw, g.poly.tower());

    // split off repeated factors so every branch is reduced
    PState start;
    std::vector<Rat> component_coeffs;
    for (const auto& [g, a] : components) {
        component_coeffs.push_back(a);
        if (g.exact) {
            for (const auto& [p, m] : bivariate_squarefree(g.poly.retower(tw), 0, 1))
                start.branches.push_back({p, a * Rat(m), INT32_MAX / 4});
        } else {
            start.branches.push_back({g.poly.retower(tw), a, g.trunc_order});
        }
    }
    start.depth = 0;

    Rat lct_bound;
    bool have_bound = false;
    auto fold_min = [&](const Rat& v) {
        if (!have_bound || v < lct_bound) {
            lct_bound = v;
            have_bound = true;
        }
    };
    for (const auto& b : start.branches) fold_min(Rat(1) / b.coeff);

    std::deque<PState> queue = {start};
    int blowups = 0;
    while (!queue.empty()) {
        // deterministic worst-first: highest total multiplicity, then FIFO
        size_t best = 0;
        auto total_mult = [&](const PState& s) {
            Rat m(0);
            for (const auto& b : s.branches) m += b.coeff * germ_mult(b.poly);
            for (int e : s.exc) m += out.tree[(size_t)e].mult * 0 + Rat(1); // support count
            return m;
        };
        for (size_t i = 1; i < queue.size(); ++i)
            if (total_mult(queue[i]) > total_mult(queue[best])) best = i;
        PState st = queue[best];
        queue.erase(queue.begin() + (long)best);

        // drop branches not through the origin
        std::vector<Branch> through;
        for (auto& b : st.branches)
            if (!b.poly.is_zero() && germ_mult(b.poly) >= 1) through.push_back(b);
        st.branches = through;
        // snc test
        int total = (int)st.exc.size();
        WPoly tcone = WPoly::constant(ring, tw, tw->one());
        for (const auto& b : st.branches) {
            total += germ_mult(b.poly);
            WPoly cone(b.poly.ring(), b.poly.tower());
            int m = germ_mult(b.poly);
            for (const auto& [e, c] : b.poly.terms())
                if (e[0] + e[1] == m) cone = cone + WPoly::monomial(b.poly.ring(), b.poly.tower(), e, c);
            tcone = tcone * cone;
        }
        for (size_t i = 0; i < st.exc.size(); ++i)
            tcone = tcone * WPoly::variable(ring, tw, st.exc_axis[i]);
        if (total <= 1) continue;
        if (total == 2) {
            // two transverse smooth local pieces?
            bool smooth_pair = true;
            for (const auto& b : st.branches)
                if (germ_mult(b.poly) > 1 && st.branches.size() + st.exc.size() > 1)
                    smooth_pair = false;
            if (st.branches.size() + st.exc.size() == 1) smooth_pair = false; // single mult-2 germ
            if (smooth_pair && binary_form_squarefree(tcone, 0, 1)) continue;
        }
        // accuracy guard for truncated branches
        for (const auto& b : st.branches)
            if (b.acc < 2 * germ_mult(b.poly) + 2)
                throw Error(ErrKind::TruncationInsufficient,
                            "germ accuracy " + std::to_string(b.acc) + " too small");
        if (blowups >= depth_cap) {
            out.hit_depth_cap = true;
            throw Error(ErrKind::DepthCap,
                        "resolution exceeded " + std::to_string(depth_cap) + " blow-ups");
        }
        ++blowups;
        // blow up the origin
        BlowupNode node;
        node.parents = st.exc;
        node.discrepancy = 1;
        for (int e : st.exc) node.discrepancy += out.tree[(size_t)e].discrepancy;
        node.mult = Rat(0);
        for (const auto& b : st.branches) node.mult += b.coeff * germ_mult(b.poly);
        for (int e : st.exc) node.mult += out.tree[(size_t)e].mult;
        node.depth = st.depth + 1;
        int node_id = (int)out.tree.size();
        out.tree.push_back(node);

        // chart A: (u, v) -> (u, u v); E_new = {u = 0}
        {
            std::vector<std::pair<WPoly, Branch>> stricts; // strict transforms
            std::vector<FE> candidate_vs;
            auto add_candidate = [&](const FE& v) {
                for (const auto& c : candidate_vs)
                    if (c == v) return;
                candidate_vs.push_back(v);
            };
            TowerPtr twa = tw;
            for (const auto& b : st.branches) {
                int m = germ_mult(b.poly);
                WPoly sub = b.poly.substitute_var(
                    1, WPoly::variable(ring, b.poly.tower(), 0) *
                           WPoly::variable(ring, b.poly.tower(), 1));
                Expo um(2, 0);
                um[0] = m;
                WPoly strict = WPoly::divide_exact(
                    sub, WPoly::monomial(ring, b.poly.tower(), um, b.poly.tower()->one()));
                Branch nb = b;
                nb.poly = strict;
                nb.acc = b.acc >= INT32_MAX / 8 ? b.acc : b.acc - m;
                // roots of strict(0, v)
                WPoly at0 = strict.substitute_var(0, WPoly::zero(ring, strict.tower()));
                if (at0.is_zero())
                    throw Error(ErrKind::TruncationInsufficient, "strict transform vanished on E");
                KPoly rootpoly = wpoly_to_kpoly(at0, 1);
                std::vector<std::string> obs;
                auto fac = factor_k(rootpoly, 24);
                for (const auto& ff : fac.factors) {
                    if (ff.poly.degree() == 1) add_candidate(-ff.poly.coeff(0));
                    else {
                        for (const auto& rr : roots_via_extension(ff.poly, &obs)) add_candidate(rr);
                    }
                }
                if (!obs.empty())
                    throw Error(ErrKind::ExtensionRequired,
                                "tangent direction needs an unavailable extension: " + obs[0]);
                stricts.push_back({strict, nb});
                twa = join_towers(twa, strict.tower());
            }
            bool old_v_axis = false;
            int old_v_node = -1;
            for (size_t i = 0; i < st.exc.size(); ++i)
                if (st.exc_axis[i] == 1) {
                    old_v_axis = true;
                    old_v_node = st.exc[i];
                }
            if (old_v_axis) add_candidate(tw->zero());
            for (const auto& v0 : candidate_vs) {
                TowerPtr twp = join_towers(twa, v0.tower());
                PState child;
                child.depth = st.depth + 1;
                child.exc = {node_id};
                child.exc_axis = {0};
                if (old_v_axis && v0.is_zero()) {
                    child.exc.push_back(old_v_node);
                    child.exc_axis.push_back(1);
                }
                for (const auto& [strict, nb] : stricts) {
                    WPoly shifted = strict.retower(twp).substitute_var(
                        1, WPoly::variable(ring, twp, 1) +
                               WPoly::constant(ring, twp, embed(v0, twp)));
                    if (shifted.is_zero() || germ_mult(shifted) < 1) continue;
                    Branch cb = nb;
                    cb.poly = shifted;
                    child.branches.push_back(cb);
                }
                if (!child.branches.empty() || child.exc.size() >= 2) queue.push_back(child);
            }
        }
        // chart B corner: (u, v) -> (u v, v); E_new = {v = 0}
        {
            PState child;
            child.depth = st.depth + 1;
            child.exc = {node_id};
            child.exc_axis = {1};
            for (size_t i = 0; i < st.exc.size(); ++i)
                if (st.exc_axis[i] == 0) {
                    child.exc.push_back(st.exc[i]);
                    child.exc_axis.push_back(0);
                }
            for (const auto& b : st.branches) {
                int m = germ_mult(b.poly);
                WPoly sub = b.poly.substitute_var(
                    0, WPoly::variable(ring, b.poly.tower(), 0) *
                           WPoly::variable(ring, b.poly.tower(), 1));
                Expo vm(2, 0);
                vm[1] = m;
                WPoly strict = WPoly::divide_exact(
                    sub, WPoly::monomial(ring, b.poly.tower(), vm, b.poly.tower()->one()));
                if (!strict.is_zero() && germ_mult(strict) >= 1) {
                    Branch nb = b;
                    nb.poly = strict;
                    nb.acc = b.acc >= INT32_MAX / 8 ? b.acc : b.acc - m;
                    child.branches.push_back(nb);
                }
            }
            if (!child.branches.empty() || child.exc.size() >= 2) queue.push_back(child);
        }
    }
    for (const auto& node : out.tree)
        if (node.mult > 0) fold_min(Rat(node.discrepancy + 1) / node.mult);
    out.lct = lct_bound;
    return out;
}

} // namespace dpa
