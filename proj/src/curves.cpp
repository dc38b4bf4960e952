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
#include "dpa/curves.hpp"

#include <algorithm>
#include <set>

namespace dpa {

namespace {

GermClass worse(const GermClass& a, const GermClass& b) {
    // order by the local lct of the reduced germ, lower is worse
    auto score = [](const GermClass& g) -> Rat {
        switch (g.tag) {
        case GermClass::Tag::Smooth: return Rat(2);
        case GermClass::Tag::Ak: return rat(1, 2) + rat(1, g.k + 1);
        case GermClass::Tag::Ordinary: return rat(2, g.multiplicity);
        case GermClass::Tag::Other: return rat(1, std::max(1, g.multiplicity));
        }
        return Rat(2);
    };
    return score(a) <= score(b) ? a : b;
}

GermClass ak_class(int k) {
    GermClass g;
    g.tag = k == 0 ? GermClass::Tag::Smooth : GermClass::Tag::Ak;
    g.k = k;
    g.multiplicity = k >= 1 ? 2 : 1;
    return g;
}

} // namespace

std::vector<std::pair<WPoly, int>> light_factor(const Surface& X, const WPoly& section) {
    std::vector<std::pair<WPoly, int>> out;
    const WRingPtr& ring = section.ring();
    TowerPtr tw = section.tower();
    WPoly rest = section;
    // monomial content
    for (size_t v = 0; v < ring->vars.size(); ++v) {
        int m = rest.min_degree_in((int)v);
        if (m > 0) {
            out.push_back({WPoly::variable(ring, tw, (int)v), m});
            Expo e(ring->vars.size(), 0);
            e[v] = m;
            rest = WPoly::divide_exact(rest, WPoly::monomial(ring, tw, e, tw->one()));
        }
    }
    if (rest.weighted_degree() <= 0) return out;
    // binary form in two weight-1 variables: split linear factors over the tower
    int va = -1, vb = -1;
    bool binary = true;
    for (size_t v = 0; v < ring->vars.size(); ++v) {
        if (rest.degree_in((int)v) == 0) continue;
        if (ring->weights[v] != 1) { binary = false; break; }
        if (va < 0) va = (int)v;
        else if (vb < 0) vb = (int)v;
        else { binary = false; break; }
    }
    if (binary && vb >= 0 && rest.is_homogeneous()) {
        KPoly k = binary_dehomogenize(rest, va, vb);
        int ymult = rest.weighted_degree() - k.degree();
        if (ymult > 0) out.push_back({WPoly::variable(ring, tw, vb), ymult});
        auto fac = factor_k(k, 24);
        for (const auto& f : fac.factors) {
            // homogenize the factor back
            WPoly g = WPoly::zero(ring, tw);
            int dg = f.poly.degree();
            for (int i = 0; i <= dg; ++i) {
                if (f.poly.coeff(i).is_zero()) continue;
                Expo e(ring->vars.size(), 0);
                e[(size_t)va] = i;
                e[(size_t)vb] = dg - i;
                g = g + WPoly::monomial(ring, tw, e, f.poly.coeff(i));
            }
            out.push_back({g, f.multiplicity});
        }
        return out;
    }
    out.push_back({rest, 1});
    return out;
}

// ---------------------------------------------------------------------------
// Double-cover member analysis (t^2 = g kinds, t-free sections)
// ---------------------------------------------------------------------------

std::optional<PairAnalysis> double_cover_member(const Surface& X, const WPoly& section) {
    if (X.kind() != SurfaceKind::Sextic1123 && X.kind() != SurfaceKind::Quartic1112)
        return std::nullopt;
    if (section.degree_in(3) > 0) return std::nullopt;
    const WRingPtr& ring = X.ring();
    TowerPtr tw = join_towers(X.tower(), section.tower());
    // g with t^2 = g on X
    Expo t2(4, 0);
    t2[3] = 2;
    FE ct = X.equations()[0].coeff(t2);
    WPoly g = (WPoly::monomial(ring, tw, t2, ct) - X.equations()[0].retower(tw))
                  .scaled(ct.inverse());

    PairAnalysis out;
    out.lct = Rat(1);
    out.worst = ak_class(0);
    out.worst_valid = true;

    auto fold_root_mults = [&](const KPoly& h, int extra_ymult) {
        // germ at a root of multiplicity k: t^2 = v^k * unit -> A_{k-1}
        std::vector<int> mults;
        auto sq = squarefree_k(h);
        for (const auto& part : sq.parts)
            if (part.multiplicity >= 2) {
                for (int i = 0; i < part.poly.degree(); ++i) mults.push_back(part.multiplicity);
            }
        if (extra_ymult >= 2) mults.push_back(extra_ymult);
        for (int k : mults) {
            out.worst = worse(out.worst, ak_class(k - 1));
            Rat local = std::min(Rat(1), Rat(rat(1, 2) + rat(1, k)));
            out.lct = std::min(out.lct, local);
            out.notes.push_back("branch point of multiplicity " + std::to_string(k));
        }
    };

    if (X.kind() == SurfaceKind::Quartic1112) {
        if (!section.is_homogeneous() || section.weighted_degree() != 1) return std::nullopt;
        // line section: restrict f4 to the line, parametrized linearly
        // choose a variable with nonzero coefficient to eliminate
        int elim = -1;
        FE c;
        for (int v = 0; v < 3; ++v) {
            Expo e(4, 0);
            e[(size_t)v] = 1;
            FE cc = section.coeff(e);
            if (!cc.is_zero()) { elim = v; c = cc; }
        }
        if (elim < 0) return std::nullopt;
        WPoly rest = section - WPoly::monomial(ring, tw, [&] {
            Expo e(4, 0);
            e[(size_t)elim] = 1;
            return e;
        }(), c);
        WPoly image = rest.scaled(-(c.inverse()));
        WPoly g_on_line = g.substitute_var(elim, image);
        // binary quartic in the two remaining weight-1 variables
        int va = -1, vb = -1;
        for (int v = 0; v < 3; ++v)
            if (v != elim) (va < 0 ? va : vb) = v;
        KPoly h = binary_dehomogenize(g_on_line, va, vb);
        int ymult = g_on_line.weighted_degree() - h.degree();
        if (g_on_line.is_zero()) return std::nullopt; // line inside branch curve
        fold_root_mults(h, ymult);
        return out;
    }
    // sextic kind
    if (!section.is_homogeneous()) return std::nullopt;
    if (section.weighted_degree() == 1) {
        // member of the anticanonical pencil: t^2 = z^3 + a z + b normal form
        Expo ex(4, 0), ey(4, 0);
        ex[0] = 1;
        ey[1] = 1;
        FE cx = section.coeff(ex), cy = section.coeff(ey);
        // root of the linear form
        std::vector<FE> root(4, tw->zero());
        if (!cx.is_zero()) {
            root[0] = -cy * cx.inverse();
            root[1] = tw->one();
        } else {
            root[0] = tw->one();
            root[1] = tw->zero();
        }
        auto uni = g.univariate_in(2); // z-coefficients
        FE a = tw->zero(), b = tw->zero();
        if (uni.count(1)) a = uni[1].eval(root);
        if (uni.count(0)) b = uni[0].eval(root);
        FE disc = a.pow(3) * tw->from_rat(4) + b.pow(2) * tw->from_rat(27);
        if (!disc.is_zero()) {
            out.notes.push_back("smooth pencil member");
            return out;
        }
        if (a.is_zero() && b.is_zero()) {
            out.worst = ak_class(2); // cusp
            out.lct = rat(5, 6);
            out.notes.push_back("cuspidal pencil member");
        } else {
            out.worst = ak_class(1); // node
            out.lct = Rat(1);
            out.notes.push_back("nodal pencil member");
        }
        return out;
    }
    if (section.weighted_degree() == 2) {
        Expo ez(4, 0);
        ez[2] = 1;
        FE cz = section.coeff(ez);
        if (cz.is_zero()) return std::nullopt; // pure binary quadric: caller splits
        WPoly q = (section - WPoly::monomial(ring, tw, ez, cz)).scaled(-(cz.inverse()));
        // z -> q(x,y) in g gives t^2 = h6(x,y)
        WPoly h6 = g.substitute_var(2, q);
        KPoly h = binary_dehomogenize(h6, 0, 1);
        int ymult = h6.weighted_degree() - h.degree();
        fold_root_mults(h, ymult);
        return out;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Global log pair lct
// ---------------------------------------------------------------------------

namespace {

std::vector<WPoly> jacobian_minor_system(const Surface& X, const WPoly& s) {
    const WRingPtr& ring = X.ring();
    TowerPtr tw = join_towers(X.tower(), s.tower());
    std::vector<WPoly> out;
    out.push_back(s);
    size_t nv = ring->vars.size();
    const auto& eqs = X.equations();
    if (eqs.empty()) {
        for (size_t v = 0; v < nv; ++v) out.push_back(s.derivative((int)v));
        return out;
    }
    // rows: equations' gradients + section gradient; singular points of the
    // curve kill all (k+1)x(k+1) minors, k = #equations
    std::vector<std::vector<WPoly>> rows;
    for (const auto& eq : eqs) {
        std::vector<WPoly> row;
        for (size_t v = 0; v < nv; ++v) row.push_back(eq.retower(tw).derivative((int)v));
        rows.push_back(row);
    }
    {
        std::vector<WPoly> row;
        for (size_t v = 0; v < nv; ++v) row.push_back(s.retower(tw).derivative((int)v));
        rows.push_back(row);
    }
    size_t k = rows.size();
    // all k x k minors of the k x nv matrix
    std::vector<int> cols(k);
    std::function<void(size_t, size_t)> rec = [&](size_t idx, size_t start) {
        if (idx == k) {
            // determinant via Laplace on the small k x k matrix
            std::function<WPoly(std::vector<int>, std::vector<int>)> det =
                [&](std::vector<int> rsel, std::vector<int> csel) -> WPoly {
                if (rsel.size() == 1) return rows[(size_t)rsel[0]][(size_t)csel[0]];
                WPoly acc = WPoly::zero(ring, tw);
                for (size_t j = 0; j < csel.size(); ++j) {
                    std::vector<int> rsub(rsel.begin() + 1, rsel.end());
                    std::vector<int> csub;
                    for (size_t jj = 0; jj < csel.size(); ++jj)
                        if (jj != j) csub.push_back(csel[jj]);
                    WPoly term = rows[(size_t)rsel[0]][(size_t)csel[j]] * det(rsub, csub);
                    acc = (j % 2 == 0) ? acc + term : acc - term;
                }
                return acc;
            };
            std::vector<int> rsel(k);
            for (size_t i = 0; i < k; ++i) rsel[i] = (int)i;
            out.push_back(det(rsel, cols));
            return;
        }
        for (size_t c = start; c < nv; ++c) {
            cols[idx] = (int)c;
            rec(idx + 1, c + 1);
        }
    };
    rec(0, 0);
    return out;
}

ResolutionResult resolve_with_stabilization(const Surface& X,
                                            const std::vector<std::pair<WPoly, Rat>>& comps,
                                            const SurfacePoint& p) {
    auto run = [&](int order) {
        std::vector<std::pair<CurveGerm, Rat>> germs;
        for (const auto& [s, a] : comps) {
            Chart ch = X.local_chart(p, order);
            WPoly gp = X.germ_of_section(X.reduce(s), ch);
            if (gp.is_zero() || gp.min_weighted_degree() == 0) continue; // not through p
            CurveGerm g;
            g.poly = gp;
            g.exact = false;
            g.trunc_order = order;
            germs.push_back({g, a});
        }
        if (germs.empty()) throw Error(ErrKind::Internal, "no germ passes through the point");
        return resolve_and_lct(germs);
    };
    auto signature = [](const ResolutionResult& r) {
        std::vector<std::pair<int, Rat>> sig;
        for (const auto& n : r.tree) sig.push_back({n.discrepancy, n.mult});
        std::sort(sig.begin(), sig.end());
        return sig;
    };
    int order = 8;
    std::optional<ResolutionResult> prev;
    for (int attempt = 0; attempt < 8; ++attempt, order += 4) {
        ResolutionResult cur;
        try {
            cur = run(order);
        } catch (const Error& e) {
            if (e.kind() == ErrKind::TruncationInsufficient) {
                prev.reset();
                continue;
            }
            throw;
        }
        if (prev && signature(*prev) == signature(cur) && prev->lct == cur.lct) return cur;
        prev = cur;
    }
    throw Error(ErrKind::TruncationInsufficient, "resolution did not stabilize");
}

} // namespace

PairAnalysis log_pair_lct(const Surface& X,
                          const std::vector<std::pair<WPoly, Rat>>& components_in) {
    PairAnalysis out;
    out.worst = ak_class(0);
    out.worst_valid = true;
    // reduce and split
    std::vector<std::pair<WPoly, Rat>> comps;
    for (const auto& [s, a] : components_in) {
        WPoly rs = X.reduce(s);
        for (const auto& [f, m] : light_factor(X, rs)) comps.push_back({f, a * Rat(m)});
    }
    // merge repeated components
    for (size_t i = 0; i < comps.size(); ++i)
        for (size_t j = i + 1; j < comps.size();) {
            FE li = comps[i].first.leading_coeff();
            WPoly ni = comps[i].first.scaled(li.inverse());
            FE lj = comps[j].first.leading_coeff();
            WPoly nj = comps[j].first.scaled(lj.inverse());
            if (ni == nj.retower(join_towers(ni.tower(), nj.tower()))) {
                comps[i].second += comps[j].second;
                comps.erase(comps.begin() + (long)j);
            } else {
                ++j;
            }
        }
    out.lct = Rat(1000000);
    for (const auto& [s, a] : comps) out.lct = std::min(out.lct, Rat(Rat(1) / a));
    // single reduced component with a fast path?
    if (comps.size() == 1 && comps[0].second == 1) {
        auto fast = double_cover_member(X, comps[0].first);
        if (fast) {
            fast->lct = std::min(fast->lct, out.lct);
            return *fast;
        }
    }
    // candidate non-snc points
    std::vector<SurfacePoint> candidates;
    std::vector<std::string> obstructions;
    auto add_points = [&](const LocusPoints& lp) {
        for (const auto& p : lp.points) {
            bool dup = false;
            for (const auto& q : candidates)
                if (q == p) dup = true;
            if (!dup) candidates.push_back(p);
        }
        for (const auto& o : lp.obstructions) obstructions.push_back(o);
    };
    for (const auto& [s, a] : comps) {
        auto sys = jacobian_minor_system(X, s);
        add_points(points_on_locus(X, sys));
    }
    for (size_t i = 0; i < comps.size(); ++i)
        for (size_t j = i + 1; j < comps.size(); ++j) {
            auto lp = points_on_locus(X, {comps[i].first, comps[j].first});
            if (!lp.finite)
                obstructions.push_back("components share a curve");
            add_points(lp);
        }
    if (!obstructions.empty())
        throw Error(ErrKind::ExtensionRequired, "log pair analysis unresolved: " + obstructions[0]);
    for (const auto& p : candidates) {
        auto res = resolve_with_stabilization(X, comps, p);
        out.lct = std::min(out.lct, res.lct);
        out.point_reports.push_back(p.str() + " -> local lct " + Rat(res.lct).get_str());
        // classify the combined germ (all components through p) for the
        // worst-singularity report
        try {
            Chart ch = X.local_chart(p, 12);
            WPoly total;
            bool first = true;
            for (const auto& [s, a] : comps) {
                WPoly g = X.germ_of_section(X.reduce(s), ch);
                if (g.is_zero() || g.min_weighted_degree() == 0) continue;
                total = first ? g : total * g;
                first = false;
            }
            if (!first && !total.is_zero()) {
                CurveGerm cg;
                cg.poly = total.truncate_total_degree(12);
                cg.exact = false;
                cg.trunc_order = 12;
                out.worst = worse(out.worst, classify_germ(cg));
            }
        } catch (const Error& e) {
            if (e.kind() != ErrKind::TruncationInsufficient && e.kind() != ErrKind::Internal)
                throw;
            out.worst_valid = false;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Pencil scans
// ---------------------------------------------------------------------------

PencilScan scan_pencil(const Surface& X, const WPoly& s1_in, const WPoly& s2_in) {
    PencilScan out;
    if (X.kind() != SurfaceKind::Sextic1123) return out;
    if (s1_in.degree_in(3) > 0 || s2_in.degree_in(3) > 0) return out;
    const WRingPtr& ring = X.ring();
    TowerPtr tw = join_towers(join_towers(X.tower(), s1_in.tower()), s2_in.tower());
    WPoly s1 = s1_in.retower(tw), s2 = s2_in.retower(tw);
    // orient the pencil so the z-coefficient lives in s2 (sextic) or pick any
    Expo ez(4, 0);
    ez[2] = 1;
    if (X.kind() == SurfaceKind::Sextic1123) {
        if (s1.coeff(ez).is_zero() && s2.coeff(ez).is_zero()) return out;
        if (!s1.coeff(ez).is_zero()) std::swap(s1, s2); // members s1 + c s2 carry z for c != 0
    }
    // introduce the parameter as an extension-free symbol: work in a ring with
    // an extra variable and analyze the binary form h(x, y; c)
    auto ring_c = make_ring({"x", "y", "z", "t", "cparam"}, {1, 1, 2, 3, 1});
    auto lift = [&](const WPoly& p) {
        WPoly q = WPoly::zero(ring_c, tw);
        for (const auto& [e, cf] : p.terms()) {
            Expo e2(5, 0);
            for (int i = 0; i < 4; ++i) e2[(size_t)i] = e[(size_t)i];
            q = q + WPoly::monomial(ring_c, tw, e2, cf);
        }
        return q;
    };
    Expo ec(5, 0);
    ec[4] = 1;
    WPoly c = WPoly::monomial(ring_c, tw, ec, tw->one());
    WPoly member = lift(s1) + c * lift(s2); // generic member, z-coeff nonzero
    Expo ez5(5, 0);
    ez5[2] = 1;
    FE cz = member.coeff(ez5).is_zero() ? tw->zero() : tw->one();
    // require the z-coefficient to be a nonzero constant (possibly with c)
    auto uni_z = member.univariate_in(2);
    if (uni_z.count(1) == 0) return out;
    WPoly zc = uni_z[1];
    if (zc.weighted_degree() > 1) return out; // z-coefficient must be constant or c
    (void)cz;
    // solve z from the member: z = -rest / zc; valid where zc != 0
    WPoly rest = member - WPoly::monomial(ring_c, tw, ez5, tw->one()) * zc;
    // g with t^2 = g lifted
    Expo t2(4, 0);
    t2[3] = 2;
    FE ct = X.equations()[0].coeff(t2);
    WPoly g = (WPoly::monomial(ring, tw, t2, ct) - X.equations()[0].retower(tw))
                  .scaled(ct.inverse());
    WPoly gl = lift(g);
    // h * zc^3 = substitution of z = -rest/zc into g, cleared of denominators
    WPoly h = WPoly::zero(ring_c, tw);
    {
        auto gz = gl.univariate_in(2);
        int dmax = 0;
        for (const auto& [d, cf] : gz) dmax = std::max(dmax, d);
        for (const auto& [d, cf] : gz) {
            WPoly term = cf;
            for (int i = 0; i < d; ++i) term = term * (-rest);
            for (int i = 0; i < dmax - d; ++i) term = term * zc;
            h = h + term;
        }
    }
    // h = binary in (x, y) with parameter c: multiple roots across members
    // via the discriminant Res_x(h, dh/dx) as a polynomial in c
    WPoly hx = h.derivative(0);
    WPoly res = wpoly_resultant(h, hx, 0);
    // res is a polynomial in y and c; strip the y-power
    int ymult = res.min_degree_in(1);
    if (ymult > 0) {
        Expo ey(5, 0);
        ey[1] = ymult;
        res = WPoly::divide_exact(res, WPoly::monomial(ring_c, tw, ey, tw->one()));
    }
    // also watch roots at y = 0 across members: x-multiplicity of h
    // (h's x-leading coefficient degeneration)
    out.worst = ak_class(0);
    out.worst_valid = true;
    out.min_member_lct = Rat(1);
    auto fold_member = [&](const WPoly& section) {
        auto ana = double_cover_member(X, section);
        PairAnalysis result;
        if (ana) {
            result = *ana;
        } else {
            std::vector<std::pair<WPoly, Rat>> comps = {{section, rat(1)}};
            result = log_pair_lct(X, comps);
        }
        out.min_member_lct = std::min(out.min_member_lct, result.lct);
        if (result.worst_valid) out.worst = worse(out.worst, result.worst);
        else out.decided = false;
        return true;
    };
    // special members: roots of res in c
    KPoly resc;
    try {
        resc = wpoly_to_kpoly(res, 4);
    } catch (const Error&) {
        out.notes.push_back("pencil discriminant kept extra variables");
        return out;
    }
    std::vector<FE> special;
    if (!resc.is_zero() && resc.degree() >= 1) {
        // one root per irreducible factor is enough: conjugate members share
        // their singularity data
        auto fac = factor_k(resc, 24);
        for (const auto& f : fac.factors) {
            if (f.poly.degree() == 1) {
                special.push_back(-f.poly.coeff(0));
                continue;
            }
            if (f.poly.tower()->has_ext() || f.poly.degree() > 6) {
                out.notes.push_back("unresolved special member factor: " + f.poly.str());
                return out;
            }
            try {
                TowerPtr E = f.poly.tower()->extended(f.poly.monic().coeffs());
                special.push_back(E->u_gen());
                out.notes.push_back("conjugate special members analyzed through one root of " +
                                    f.poly.str());
            } catch (const Error& e) {
                out.notes.push_back(std::string("unresolved special member: ") + e.what());
                return out;
            }
        }
    } else if (resc.is_zero()) {
        out.notes.push_back("pencil discriminant vanished identically");
        return out;
    }
    out.decided = true;
    // generic member: squarefree discriminant nonzero -> smooth away from the
    // branch data; confirmed by testing one rational c avoiding special values
    {
        long probe = 1;
        bool ok = false;
        for (int tries = 0; tries < 64 && !ok; ++tries, ++probe) {
            FE cval = tw->from_rat(probe);
            bool clash = false;
            for (const auto& s : special)
                if (embed(cval, join_towers(cval.tower(), s.tower())) ==
                    embed(s, join_towers(cval.tower(), s.tower())))
                    clash = true;
            if (clash) continue;
            ok = true;
            WPoly member_c = s1 + s2.scaled(cval);
            if (!fold_member(member_c)) return out;
        }
    }
    for (const auto& cval : special) {
        WPoly member_c = s1.retower(join_towers(tw, cval.tower())) +
                         s2.retower(join_towers(tw, cval.tower())).scaled(cval);
        if (!fold_member(member_c)) return out;
        out.notes.push_back("special member analyzed");
    }
    // the member at infinity
    fold_member(s2);
    return out;
}

} // namespace dpa
