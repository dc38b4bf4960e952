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
#include "dpa/field.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "dpa/kpoly.hpp"

namespace dpa {

namespace {

// arithmetic on the zeta-part: polynomials in zeta reduced mod Phi_m
QPoly bred(const QPoly& a, const QPoly& phi) { return QPoly::divmod(a, phi).second; }

QPoly bmul(const QPoly& a, const QPoly& b, const QPoly& phi) { return bred(a * b, phi); }

QPoly binv(const QPoly& a, const QPoly& phi) {
    QPoly g, s, t;
    QPoly::xgcd(a, phi, g, s, t);
    if (g.degree() != 0) throw Error(ErrKind::Internal, "non-invertible base element");
    return bred(s.scaled(Rat(1) / g[0]), phi);
}

} // namespace

// ---------------------------------------------------------------------------
// FE
// ---------------------------------------------------------------------------

FE::FE(const TowerPtr& tw, std::vector<QPoly> c) : tw_(tw), c_(std::move(c)) { normalize(); }

void FE::normalize() {
    if (!tw_) { c_.clear(); return; }
    c_.resize(tw_->ext_degree());
    for (auto& p : c_) p = bred(p, tw_->cyclo());
}

FE FE::from_rat(const TowerPtr& tw, const Rat& r) { return tw->from_rat(r); }

bool FE::is_zero() const {
    for (const auto& p : c_)
        if (!p.is_zero()) return false;
    return true;
}

bool FE::is_rational() const {
    for (size_t j = 1; j < c_.size(); ++j)
        if (!c_[j].is_zero()) return false;
    return c_.empty() || c_[0].degree() <= 0;
}

Rat FE::rat_value() const {
    if (!is_rational()) throw Error(ErrKind::Internal, "not a rational value");
    if (c_.empty() || c_[0].is_zero()) return 0;
    return c_[0][0];
}

FE FE::operator+(const FE& o) const {
    if (!tw_ && !o.tw_) return FE();
    if (!tw_) return o;
    if (!o.tw_) return *this;
    if (!tw_->same_as(*o.tw_)) {
        TowerPtr j = join_towers(tw_, o.tw_);
        return embed(*this, j) + embed(o, j);
    }
    std::vector<QPoly> r = c_;
    for (size_t j = 0; j < o.c_.size(); ++j) r[j] = r[j] + o.c_[j];
    return FE(tw_, std::move(r));
}

FE FE::operator-() const {
    FE e;
    e.tw_ = tw_;
    e.c_ = c_;
    for (auto& p : e.c_) p = -p;
    return e;
}

FE FE::operator-(const FE& o) const { return *this + (-o); }

FE FE::operator*(const FE& o) const {
    if (!tw_ || !o.tw_) return FE(); // either side is the bare zero
    if (!tw_->same_as(*o.tw_)) {
        TowerPtr j = join_towers(tw_, o.tw_);
        return embed(*this, j) * embed(o, j);
    }
    const QPoly& phi = tw_->cyclo();
    int d = tw_->ext_degree();
    std::vector<QPoly> conv(2 * (size_t)d - 1);
    for (int i = 0; i < d; ++i) {
        if (c_[i].is_zero()) continue;
        for (int j = 0; j < d; ++j) {
            if (o.c_[j].is_zero()) continue;
            conv[i + j] = conv[i + j] + bmul(c_[i], o.c_[j], phi);
        }
    }
    if (d > 1) {
        const auto& mp = tw_->ext_minpoly(); // monic, size d+1
        for (int k = (int)conv.size() - 1; k >= d; --k) {
            QPoly lead = conv[k];
            if (lead.is_zero()) continue;
            conv[k] = QPoly();
            for (int i = 0; i < d; ++i)
                conv[(size_t)k - d + i] = conv[(size_t)k - d + i] - bmul(lead, mp[i], phi);
        }
    }
    conv.resize(d);
    return FE(tw_, std::move(conv));
}

FE FE::inverse() const {
    if (is_zero() || !tw_) throw Error(ErrKind::Internal, "division by zero");
    const QPoly& phi = tw_->cyclo();
    if (tw_->ext_degree() == 1) {
        FE r;
        r.tw_ = tw_;
        r.c_ = {binv(c_[0], phi)};
        return r;
    }
    // extended Euclid in K[u] modulo the ext minpoly, K = Q(zeta_m)
    using BP = std::vector<QPoly>;
    auto trim = [](BP& a) { while (!a.empty() && a.back().is_zero()) a.pop_back(); };
    auto sub = [&](BP a, const BP& b) {
        if (a.size() < b.size()) a.resize(b.size());
        for (size_t i = 0; i < b.size(); ++i) a[i] = a[i] - b[i];
        trim(a);
        return a;
    };
    auto mul = [&](const BP& a, const BP& b) {
        BP r;
        if (a.empty() || b.empty()) return r;
        r.assign(a.size() + b.size() - 1, QPoly());
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j)
                r[i + j] = r[i + j] + bmul(a[i], b[j], phi);
        trim(r);
        return r;
    };
    auto divmod = [&](BP a, const BP& b, BP& q) {
        q.clear();
        if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, QPoly());
        QPoly lcinv = binv(b.back(), phi);
        while (a.size() >= b.size() && !a.empty()) {
            QPoly f = bmul(a.back(), lcinv, phi);
            size_t off = a.size() - b.size();
            q[off] = f;
            for (size_t i = 0; i < b.size(); ++i) a[off + i] = a[off + i] - bmul(f, b[i], phi);
            trim(a);
        }
        trim(q);
        return a;
    };
    BP mp(tw_->ext_minpoly());
    BP a = c_;
    trim(a);
    BP r0 = mp, r1 = a, s0 = {}, s1 = {QPoly::constant(1)};
    while (!r1.empty()) {
        BP q;
        BP r2 = divmod(r0, r1, q);
        BP s2 = sub(s0, mul(q, s1));
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0.size() != 1) throw Error(ErrKind::Internal, "inverse: gcd not constant");
    QPoly inv0 = binv(r0[0], phi);
    BP res = s0;
    for (auto& p : res) p = bmul(p, inv0, phi);
    res.resize(tw_->ext_degree());
    return FE(tw_, std::vector<QPoly>(res.begin(), res.end()));
}

FE FE::pow(long e) const {
    if (!tw_) return FE();
    if (e < 0) return inverse().pow(-e);
    FE acc = tw_->one();
    FE base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool FE::operator==(const FE& o) const {
    if (!tw_) return o.is_zero();
    if (!o.tw_) return is_zero();
    if (tw_->same_as(*o.tw_)) return c_ == o.c_;
    TowerPtr j = join_towers(tw_, o.tw_);
    return embed(*this, j).c_ == embed(o, j).c_;
}

bool FE::operator<(const FE& o) const {
    auto key = [](const FE& e) {
        std::vector<Rat> v;
        for (const auto& p : e.c_)
            for (int i = 0; i <= p.degree(); ++i) v.push_back(p[i]);
        return v;
    };
    std::vector<Rat> a = key(*this), b = key(o);
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

std::size_t FE::hash() const {
    std::size_t h = 0;
    bool any = false;
    for (const auto& p : c_) {
        if (!p.is_zero()) any = true;
        h = hash_combine(h, (std::size_t)p.degree() + 7);
        for (int i = 0; i <= p.degree(); ++i) h = hash_combine(h, hash_rat(p[i]));
    }
    if (any && tw_) h = hash_combine(h, (std::size_t)tw_->conductor() * 131 + tw_->ext_degree());
    return h;
}

std::string FE::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j].is_zero()) continue;
        std::string zp = tw_->conductor() == 1
                             ? c_[j].str("zeta")
                             : c_[j].str("zeta(" + std::to_string(tw_->conductor()) + ")");
        if (!first) os << " + ";
        if (j == 0) os << zp;
        else {
            os << "(" << zp << ")*" << tw_->ext_gen_name();
            if (j > 1) os << "^" << j;
        }
        first = false;
    }
    return os.str();
}

std::optional<int> FE::torsion_order(int bound) const {
    if (is_zero() || !tw_) return std::nullopt;
    FE one = tw_->one();
    FE p = *this;
    for (int k = 1; k <= bound; ++k) {
        if (p == one) return k;
        p = p * *this;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Tower
// ---------------------------------------------------------------------------

TowerPtr Tower::rationals() { return cyclotomic(1); }

TowerPtr Tower::cyclotomic(int m) {
    static std::map<int, TowerPtr> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    if (m < 1) throw Error(ErrKind::Internal, "conductor must be >= 1");
    auto t = std::shared_ptr<Tower>(new Tower());
    t->m_ = m;
    t->phi_ = euler_phi(m);
    t->cyclo_ = cyclotomic_polynomial(m);
    t->prim_minpoly_ = t->cyclo_;
    TowerPtr p = t;
    cache[m] = p;
    return p;
}

FE Tower::make(std::vector<QPoly> c) const {
    return FE(shared_from_this(), std::move(c));
}

FE Tower::zero() const { return make({}); }
FE Tower::one() const { return from_rat(1); }

FE Tower::from_rat(const Rat& r) const {
    std::vector<QPoly> c(ext_degree());
    c[0] = QPoly::constant(r);
    return make(std::move(c));
}

FE Tower::zeta() const {
    std::vector<QPoly> c(ext_degree());
    c[0] = bred(QPoly::x(), cyclo_);
    return make(std::move(c));
}

FE Tower::zeta_power(long k) const {
    long mm = m_;
    k %= mm;
    if (k < 0) k += mm;
    std::vector<QPoly> c(ext_degree());
    c[0] = bred(QPoly::monomial((int)k, 1), cyclo_);
    return make(std::move(c));
}

FE Tower::u_gen() const {
    if (!has_ext()) throw Error(ErrKind::Internal, "tower has no extension");
    std::vector<QPoly> c(ext_degree());
    c[1] = QPoly::constant(1);
    return make(std::move(c));
}

FE Tower::from_zeta_poly(const QPoly& p) const {
    std::vector<QPoly> c(ext_degree());
    c[0] = p;
    return make(std::move(c));
}

std::optional<FE> Tower::root_of_unity(int D) const {
    if (D <= 0) return std::nullopt;
    if (D == 1) return one();
    if (D == 2) return from_rat(-1);
    if (m_ % D == 0) return zeta_power(m_ / D);
    if (D % 2 == 0 && m_ % 2 == 1 && m_ % (D / 2) == 0) {
        int d = D / 2; // odd
        FE zd = zeta_power((long)(m_ / d));
        return -(zd.pow((d + 1) / 2));
    }
    return std::nullopt;
}

int Tower::enlarged_conductor(int m, int D) {
    auto contains = [](long mm, int DD) {
        if (mm % DD == 0) return true;
        return DD % 2 == 0 && mm % 2 == 1 && mm % (DD / 2) == 0;
    };
    if (D % 4 == 2) {
        long l2 = std::lcm((long)m, (long)(D / 2));
        if (contains(l2, D)) return (int)l2;
    }
    long l = std::lcm((long)m, (long)D);
    if (!contains(l, D)) l = std::lcm(l, 2L * (long)D);
    return (int)l;
}

bool Tower::same_as(const Tower& o) const {
    if (this == &o) return true;
    return m_ == o.m_ && ext_deg_ == o.ext_deg_ && ext_minpoly_ == o.ext_minpoly_;
}

TowerPtr Tower::extended(const std::vector<FE>& coeffs, const std::string& gen_name) const {
    if (has_ext())
        throw Error(ErrKind::ExtensionRequired,
                    "tower already carries an extension; single-extension limit");
    if (coeffs.size() < 3) throw Error(ErrKind::Internal, "extension degree must be >= 2");
    TowerPtr self = shared_from_this();
    std::vector<QPoly> mp(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) {
        FE c = embed(coeffs[i], self);
        mp[i] = c.parts()[0];
    }
    if (!(mp.back() == QPoly::constant(1))) {
        QPoly inv = binv(mp.back(), cyclo_);
        for (auto& p : mp) p = bmul(p, inv, cyclo_);
    }
    {
        std::vector<FE> cs(mp.size());
        for (size_t i = 0; i < mp.size(); ++i) cs[i] = from_zeta_poly(mp[i]);
        KPoly p(self, cs);
        auto st = kpoly_irreducible(p, 24);
        if (st == Irreducibility::No)
            throw Error(ErrKind::NotIrreducible, "extension minimal polynomial splits");
        if (st == Irreducibility::Unknown)
            throw Error(ErrKind::DegreeCap, "irreducibility test exceeded the degree cap");
    }
    auto t = std::shared_ptr<Tower>(new Tower());
    t->m_ = m_;
    t->phi_ = phi_;
    t->cyclo_ = cyclo_;
    t->ext_deg_ = (int)mp.size() - 1;
    t->ext_minpoly_ = std::move(mp);
    t->ext_name_ = gen_name;
    t->build_primitive();
    return t;
}

namespace {

// Solve A x = b over Q, A given by columns. Returns empty when inconsistent
// or the solution fails verification.
std::vector<Rat> solve_linear(const std::vector<std::vector<Rat>>& cols, const std::vector<Rat>& b) {
    size_t n = b.size();
    std::vector<std::vector<Rat>> M(n, std::vector<Rat>(cols.size() + 1, Rat(0)));
    for (size_t j = 0; j < cols.size(); ++j)
        for (size_t i = 0; i < n; ++i) M[i][j] = cols[j][i];
    for (size_t i = 0; i < n; ++i) M[i][cols.size()] = b[i];
    size_t rank = 0, w = cols.size();
    std::vector<int> pivots;
    for (size_t col = 0; col < w && rank < n; ++col) {
        size_t piv = rank;
        while (piv < n && M[piv][col] == 0) ++piv;
        if (piv == n) continue;
        std::swap(M[rank], M[piv]);
        Rat inv = Rat(1) / M[rank][col];
        for (size_t j = col; j <= w; ++j) M[rank][j] *= inv;
        for (size_t r = 0; r < n; ++r) {
            if (r == rank || M[r][col] == 0) continue;
            Rat f = M[r][col];
            for (size_t j = col; j <= w; ++j) M[r][j] -= f * M[rank][j];
        }
        pivots.push_back((int)col);
        ++rank;
    }
    std::vector<Rat> x(w, Rat(0));
    for (size_t r = 0; r < rank; ++r) x[pivots[r]] = M[r][w];
    for (size_t i = 0; i < n; ++i) {
        Rat acc(0);
        for (size_t j = 0; j < w; ++j)
            if (x[j] != 0) acc += cols[j][i] * x[j];
        if (acc != b[i]) return {};
    }
    return x;
}

} // namespace

void Tower::build_primitive() {
    int n = abs_degree();
    auto scratch = std::shared_ptr<Tower>(new Tower(*this));
    TowerPtr sp = scratch;
    auto vec_of = [&](const FE& e) {
        std::vector<Rat> v((size_t)n, Rat(0));
        const auto& parts = e.parts();
        for (int j = 0; j < (int)parts.size(); ++j)
            for (int i = 0; i <= parts[j].degree(); ++i) v[(size_t)j * phi_ + i] = parts[j][i];
        return v;
    };
    for (int shift = 1; shift < 40; ++shift) {
        FE gamma = sp->zeta() + sp->u_gen() * sp->from_rat(shift);
        std::vector<std::vector<Rat>> cols;
        FE p = sp->one();
        for (int k = 0; k < n; ++k) {
            cols.push_back(vec_of(p));
            p = p * gamma;
        }
        std::vector<Rat> target = vec_of(p); // gamma^n
        auto a = solve_linear(cols, target);
        if (a.empty()) continue;
        bool independent = true;
        std::vector<std::vector<Rat>> solver;
        for (int i = 0; i < n && independent; ++i) {
            std::vector<Rat> e((size_t)n, Rat(0));
            e[(size_t)i] = 1;
            auto x = solve_linear(cols, e);
            if (x.empty()) independent = false;
            else solver.push_back(std::move(x));
        }
        if (!independent) continue;
        std::vector<Rat> mp((size_t)n + 1, Rat(0));
        mp[(size_t)n] = 1;
        for (int k = 0; k < n; ++k) mp[(size_t)k] = -a[(size_t)k];
        prim_shift_ = shift;
        prim_minpoly_ = QPoly(std::move(mp));
        prim_basis_solver_ = std::move(solver);
        return;
    }
    throw Error(ErrKind::Internal, "no primitive element found");
}

QPoly Tower::to_primitive(const FE& e) const {
    if (!has_ext()) return e.parts().empty() ? QPoly() : e.parts()[0];
    int n = abs_degree();
    std::vector<Rat> v((size_t)n, Rat(0));
    const auto& parts = e.parts();
    for (int j = 0; j < (int)parts.size(); ++j)
        for (int i = 0; i <= parts[j].degree(); ++i) v[(size_t)j * phi_ + i] = parts[j][i];
    std::vector<Rat> x((size_t)n, Rat(0));
    for (int i = 0; i < n; ++i) {
        if (v[(size_t)i] == 0) continue;
        for (int k = 0; k < n; ++k) x[(size_t)k] += prim_basis_solver_[(size_t)i][(size_t)k] * v[(size_t)i];
    }
    return QPoly(std::move(x));
}

FE Tower::from_primitive(const QPoly& p) const {
    if (!has_ext()) return from_zeta_poly(p);
    FE gamma = zeta() + u_gen() * from_rat(prim_shift_);
    FE acc = zero();
    for (int i = p.degree(); i >= 0; --i) acc = acc * gamma + from_rat(p[i]);
    return acc;
}

FE embed(const FE& e, const TowerPtr& target) {
    if (!e.tower()) return target->zero();
    const Tower& src = *e.tower();
    if (src.same_as(*target)) return FE(target, e.parts());
    if (target->conductor() % src.conductor() != 0)
        throw Error(ErrKind::ExtensionRequired, "conductor not a multiple");
    int stride = target->conductor() / src.conductor();
    auto lift_base = [&](const QPoly& p) {
        QPoly acc;
        for (int i = 0; i <= p.degree(); ++i) {
            if (p[i] == 0) continue;
            acc = acc + QPoly::monomial(i * stride, p[i]);
        }
        return QPoly::divmod(acc, target->cyclo()).second;
    };
    if (src.has_ext()) {
        if (!target->has_ext())
            throw Error(ErrKind::ExtensionRequired, "target tower lacks the extension");
        if (src.ext_degree() != target->ext_degree())
            throw Error(ErrKind::ExtensionRequired, "extension mismatch");
        for (size_t i = 0; i < src.ext_minpoly().size(); ++i)
            if (!(lift_base(src.ext_minpoly()[i]) == target->ext_minpoly()[i]))
                throw Error(ErrKind::ExtensionRequired, "extension minimal polynomial mismatch");
    }
    std::vector<QPoly> c(target->ext_degree());
    for (size_t j = 0; j < e.parts().size(); ++j) c[j] = lift_base(e.parts()[j]);
    return FE(target, std::move(c));
}

TowerPtr join_towers(const TowerPtr& a, const TowerPtr& b) {
    if (!a) return b;
    if (!b) return a;
    if (a->same_as(*b)) return a;
    int m = (int)std::lcm((long)a->conductor(), (long)b->conductor());
    if (a->has_ext() && b->has_ext() && !a->same_as(*b))
        throw Error(ErrKind::ExtensionRequired, "two distinct extensions cannot be joined");
    const Tower* ext_src = a->has_ext() ? a.get() : (b->has_ext() ? b.get() : nullptr);
    if (ext_src && ext_src->conductor() == m) return a->has_ext() ? a : b;
    TowerPtr base = Tower::cyclotomic(m);
    if (!ext_src) return base;
    TowerPtr src_base = Tower::cyclotomic(ext_src->conductor());
    std::vector<FE> lifted;
    for (const auto& p : ext_src->ext_minpoly())
        lifted.push_back(embed(src_base->from_zeta_poly(p), base));
    return base->extended(lifted, ext_src->ext_gen_name());
}

} // namespace dpa
