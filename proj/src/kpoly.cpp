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
#include "dpa/kpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dpa {

void KPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

KPoly KPoly::constant(const TowerPtr& tw, const FE& v) { return KPoly(tw, {v}); }

KPoly KPoly::monomial(const TowerPtr& tw, int deg, const FE& v) {
    std::vector<FE> c((size_t)deg + 1, tw->zero());
    c[(size_t)deg] = v;
    return KPoly(tw, std::move(c));
}

KPoly KPoly::x(const TowerPtr& tw) { return monomial(tw, 1, tw->one()); }

KPoly KPoly::from_qpoly(const TowerPtr& tw, const QPoly& p) {
    std::vector<FE> c((size_t)p.degree() + 1, tw->zero());
    for (int i = 0; i <= p.degree(); ++i) c[(size_t)i] = tw->from_rat(p[i]);
    return KPoly(tw, std::move(c));
}

FE KPoly::coeff(int i) const {
    if (i < 0 || i >= (int)c_.size()) return tw_ ? tw_->zero() : FE();
    return c_[(size_t)i];
}

KPoly KPoly::operator+(const KPoly& o) const {
    TowerPtr tw = tw_ ? tw_ : o.tw_;
    std::vector<FE> r(std::max(c_.size(), o.c_.size()), tw->zero());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = r[i] + c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
    return KPoly(tw, std::move(r));
}

KPoly KPoly::operator-() const {
    std::vector<FE> r = c_;
    for (auto& v : r) v = -v;
    return KPoly(tw_, std::move(r));
}

KPoly KPoly::operator-(const KPoly& o) const { return *this + (-o); }

KPoly KPoly::operator*(const KPoly& o) const {
    TowerPtr tw = tw_ ? tw_ : o.tw_;
    if (is_zero() || o.is_zero()) return KPoly(tw);
    std::vector<FE> r(c_.size() + o.c_.size() - 1, tw->zero());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            r[i + j] = r[i + j] + c_[i] * o.c_[j];
        }
    }
    return KPoly(tw, std::move(r));
}

KPoly KPoly::scaled(const FE& f) const {
    std::vector<FE> r = c_;
    for (auto& v : r) v = v * f;
    return KPoly(tw_, std::move(r));
}

bool KPoly::operator==(const KPoly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (!(c_[i] == o.c_[i])) return false;
    return true;
}

KPoly KPoly::derivative() const {
    if (degree() < 1) return KPoly(tw_);
    std::vector<FE> r(c_.size() - 1, tw_->zero());
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * tw_->from_rat((long)i);
    return KPoly(tw_, std::move(r));
}

FE KPoly::eval(const FE& x) const {
    FE acc = tw_ ? tw_->zero() : FE();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

KPoly KPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(lc().inverse());
}

KPoly KPoly::shifted(const FE& s) const {
    KPoly acc(tw_);
    KPoly lin(tw_, {s, tw_->one()});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * lin + constant(tw_, *it);
    return acc;
}

std::pair<KPoly, KPoly> KPoly::divmod(const KPoly& a, const KPoly& b) {
    if (b.is_zero()) throw Error(ErrKind::Internal, "division by zero polynomial");
    KPoly r = a;
    TowerPtr tw = a.tw_ ? a.tw_ : b.tw_;
    std::vector<FE> q((size_t)std::max(0, a.degree() - b.degree() + 1), tw->zero());
    FE lcinv = b.lc().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        FE f = r.lc() * lcinv;
        int d = r.degree() - b.degree();
        q[(size_t)d] = f;
        r = r - (b * monomial(tw, d, f));
    }
    return {KPoly(tw, std::move(q)), r};
}

KPoly KPoly::gcd(KPoly a, KPoly b) {
    while (!b.is_zero()) {
        KPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

std::string KPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        FE a = coeff(i);
        if (a.is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << a.str() << ")";
        if (i > 0) {
            os << "*" << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

KSquarefree squarefree_k(const KPoly& f) {
    KSquarefree out;
    const TowerPtr& tw = f.tower();
    out.unit = f.is_zero() ? tw->zero() : f.lc();
    if (f.is_zero() || f.degree() == 0) return out;
    KPoly a = f.monic();
    KPoly d = a.derivative();
    KPoly g = KPoly::gcd(a, d);
    KPoly w = KPoly::divmod(a, g).first;
    KPoly y = KPoly::divmod(d, g).first;
    KPoly z = y - w.derivative();
    int k = 1;
    while (!w.is_zero() && w.degree() > 0) {
        KPoly gi = KPoly::gcd(w, z);
        if (gi.degree() > 0) out.parts.push_back({gi, k});
        w = KPoly::divmod(w, gi).first;
        y = KPoly::divmod(z, gi).first;
        z = y - w.derivative();
        ++k;
        if (k > f.degree() + 2) throw Error(ErrKind::Internal, "squarefree loop");
    }
    return out;
}

FE resultant_k(const KPoly& a, const KPoly& b) {
    const TowerPtr& tw = a.tower() ? a.tower() : b.tower();
    if (a.is_zero() || b.is_zero()) return tw->zero();
    KPoly f = a, g = b;
    FE res = tw->one();
    int sign = 1;
    while (true) {
        if (g.degree() == 0) {
            FE r = g.coeff(0).pow(f.degree());
            if (sign < 0) r = -r;
            return res * r;
        }
        if (f.degree() < g.degree()) {
            if ((f.degree() & 1) && (g.degree() & 1)) sign = -sign;
            std::swap(f, g);
            continue;
        }
        KPoly r = KPoly::divmod(f, g).second;
        if (r.is_zero()) return tw->zero();
        FE mul = g.lc().pow(f.degree() - r.degree());
        if ((f.degree() & 1) && (g.degree() & 1)) sign = -sign;
        res = res * mul;
        f = g;
        g = r;
    }
}

namespace {

/// Norm of f(x) from the tower down to Q: Res_z(M(z), F(x,z)) where M is the
/// primitive minimal polynomial and F rewrites coefficients as polynomials in
/// the primitive generator. Computed by evaluation/interpolation over Q.
QPoly norm_to_q(const KPoly& f) {
    const TowerPtr& tw = f.tower();
    const QPoly& M = tw->primitive_minpoly();
    int n = M.degree();
    int d = f.degree();
    // rewrite: coefficient i -> QPoly in z
    std::vector<QPoly> cz((size_t)d + 1);
    for (int i = 0; i <= d; ++i) cz[(size_t)i] = tw->to_primitive(f.coeff(i));
    int deg_norm = n * d;
    // evaluate at x = j and take univariate resultants over Q
    std::vector<Rat> xs, ys;
    long j = 0;
    while ((int)xs.size() < deg_norm + 1) {
        Rat xv(j);
        // F(j, z)
        std::vector<Rat> fz;
        QPoly acc;
        Rat p(1);
        for (int i = 0; i <= d; ++i) {
            acc = acc + cz[(size_t)i].scaled(p);
            p *= xv;
        }
        xs.push_back(xv);
        ys.push_back(resultant_q(M, acc));
        j = j >= 0 ? -(j + 1) : -j; // 0, -1, 1, -2, 2, ...
    }
    // Lagrange interpolation (Newton form)
    size_t npts = xs.size();
    std::vector<Rat> dd = ys; // divided differences
    for (size_t k = 1; k < npts; ++k)
        for (size_t i = npts - 1; i >= k; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - k]);
            if (i == k) break;
        }
    QPoly result = QPoly::constant(dd[npts - 1]);
    for (size_t i = npts - 1; i-- > 0;) {
        QPoly lin({std::vector<Rat>{-xs[i], Rat(1)}});
        result = result * lin + QPoly::constant(dd[i]);
    }
    return result;
}

} // namespace

KFactorization factor_k(const KPoly& f, int norm_degree_cap) {
    KFactorization out;
    const TowerPtr& tw = f.tower();
    out.unit = f.is_zero() ? tw->zero() : f.lc();
    if (f.is_zero() || f.degree() == 0) return out;

    auto sqf = squarefree_k(f);
    for (const auto& part : sqf.parts) {
        const KPoly& g0 = part.poly;
        if (g0.degree() == 1) {
            out.factors.push_back({g0, part.multiplicity});
            continue;
        }
        if (tw->abs_degree() == 1) {
            // plain rationals: use the integer machinery
            QPoly q;
            {
                std::vector<Rat> c((size_t)g0.degree() + 1);
                for (int i = 0; i <= g0.degree(); ++i) c[(size_t)i] = g0.coeff(i).rat_value();
                q = QPoly(std::move(c));
            }
            auto fq = factor_q(q, std::max(norm_degree_cap, q.degree()));
            for (const auto& ff : fq.factors)
                out.factors.push_back({KPoly::from_qpoly(tw, ff.poly), part.multiplicity});
            continue;
        }
        if (tw->abs_degree() * g0.degree() > norm_degree_cap)
            throw Error(ErrKind::DegreeCap,
                        "norm degree " + std::to_string(tw->abs_degree() * g0.degree()) +
                            " exceeds cap " + std::to_string(norm_degree_cap));
        // Trager: shift until the norm is squarefree
        FE gen = tw->from_primitive(QPoly::x()); // the primitive generator
        bool done = false;
        for (long s = 0; s < 60 && !done; ++s) {
            // h(x) = g0(x - s*gamma); factors of g0 are factors of h shifted back
            KPoly gs = g0.shifted(tw->from_rat(Rat(-s)) * gen);
            QPoly N = norm_to_q(gs);
            if (QPoly::gcd(N, N.derivative()).degree() != 0) continue;
            auto fq = factor_q(N, std::max(norm_degree_cap, N.degree()));
            for (const auto& Nj : fq.factors) {
                KPoly njk = KPoly::from_qpoly(tw, Nj.poly);
                KPoly h = KPoly::gcd(gs, njk);
                if (h.degree() > 0) {
                    KPoly lifted = h.shifted(tw->from_rat(Rat(s)) * gen);
                    out.factors.push_back({lifted.monic(), part.multiplicity});
                }
            }
            done = true;
        }
        if (!done)
            throw Error(ErrKind::Internal, "no squarefree norm shift found");
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const KFactor& a, const KFactor& b) {
        if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
        for (int i = a.poly.degree(); i >= 0; --i) {
            FE ca = a.poly.coeff(i), cb = b.poly.coeff(i);
            if (!(ca == cb)) return ca < cb;
        }
        return a.multiplicity < b.multiplicity;
    });
    return out;
}

Irreducibility kpoly_irreducible(const KPoly& f, int norm_degree_cap) {
    if (f.degree() <= 0) return Irreducibility::No;
    if (f.degree() == 1) return Irreducibility::Yes;
    try {
        auto fac = factor_k(f, norm_degree_cap);
        int count = 0;
        for (const auto& g : fac.factors) count += g.multiplicity;
        return count == 1 ? Irreducibility::Yes : Irreducibility::No;
    } catch (const Error& e) {
        if (e.kind() == ErrKind::DegreeCap) return Irreducibility::Unknown;
        throw;
    }
}

std::vector<FE> roots_in_tower(const KPoly& f, bool* complete) {
    if (complete) *complete = true;
    std::vector<FE> roots;
    if (f.is_zero() || f.degree() == 0) return roots;
    try {
        auto fac = factor_k(f);
        for (const auto& g : fac.factors)
            if (g.poly.degree() == 1) roots.push_back(-g.poly.coeff(0));
    } catch (const Error& e) {
        if (e.kind() != ErrKind::DegreeCap) throw;
        if (complete) *complete = false;
        // fall back: at least collect rational roots of the rational part
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](const FE& a, const FE& b) { return a == b; }),
                roots.end());
    return roots;
}


/// Roots of an irreducible nonlinear factor through a fresh simple extension
/// when the tower's extension slot is free; otherwise an obstruction entry.
std::vector<FE> roots_via_extension(const KPoly& f, std::vector<std::string>* obstructions) {
    std::vector<FE> out;
    const TowerPtr& tw = f.tower();
    // roots in a small cyclotomic enlargement first: keeps towers joinable
    if (!tw->has_ext() && f.degree() <= 6) {
        static const int extra[] = {3, 4, 5, 7, 8, 9, 11, 12, 13, 15, 16, 20, 21, 24};
        for (int j : extra) {
            long m2 = std::lcm((long)tw->conductor(), (long)j);
            if (m2 == tw->conductor()) continue;
            int phi2 = euler_phi((int)m2);
            if (phi2 > 16 || phi2 * f.degree() > 24) continue;
            TowerPtr big = Tower::cyclotomic((int)m2);
            std::vector<FE> c;
            for (const auto& v : f.coeffs()) c.push_back(embed(v, big));
            KPoly fb(big, c);
            try {
                auto fac = factor_k(fb, 24);
                bool all_linear = true;
                for (const auto& g : fac.factors)
                    if (g.poly.degree() != 1) all_linear = false;
                if (all_linear) {
                    for (const auto& g : fac.factors) out.push_back(-g.poly.coeff(0));
                    return out;
                }
            } catch (const Error& e) {
                if (e.kind() != ErrKind::DegreeCap) throw;
            }
        }
    }
    if (tw->has_ext() || f.degree() > 6) {
        if (obstructions) obstructions->push_back(f.str());
        return out;
    }
    try {
        TowerPtr E = tw->extended(f.monic().coeffs());
        KPoly fe(E);
        {
            std::vector<FE> c;
            for (const auto& v : f.coeffs()) c.push_back(embed(v, E));
            fe = KPoly(E, c);
        }
        auto fac = factor_k(fe, 24);
        for (const auto& g : fac.factors) {
            if (g.poly.degree() == 1) out.push_back(-g.poly.coeff(0));
            else if (obstructions) obstructions->push_back(g.poly.str());
        }
    } catch (const Error& e) {
        if (e.kind() == ErrKind::DegreeCap || e.kind() == ErrKind::NotIrreducible ||
            e.kind() == ErrKind::ExtensionRequired) {
            if (obstructions) obstructions->push_back(f.str());
            return out;
        }
        throw;
    }
    return out;
}

} // namespace dpa
