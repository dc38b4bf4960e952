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
#include "dpa/qpoly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

namespace dpa {

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw Error(ErrKind::Parse, "empty rational");
    for (char ch : s)
        if (!(std::isdigit((unsigned char)ch) || ch == '-' || ch == '+' || ch == '/'))
            throw Error(ErrKind::Parse, "bad rational: " + s);
    try {
        Rat r(s);
        r.canonicalize();
        return r;
    } catch (const std::exception&) {
        throw Error(ErrKind::Parse, "bad rational: " + s);
    }
}

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::constant(const Rat& r) {
    QPoly p;
    if (r != 0) p.c_ = {r};
    return p;
}

QPoly QPoly::x() { return monomial(1, 1); }

QPoly QPoly::monomial(int deg, const Rat& c) {
    QPoly p;
    if (c != 0) {
        p.c_.assign(deg + 1, Rat(0));
        p.c_[deg] = c;
    }
    return p;
}

const Rat& QPoly::operator[](int i) const {
    static const Rat zero(0);
    if (i < 0 || i >= (int)c_.size()) return zero;
    return c_[i];
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator-() const {
    std::vector<Rat> r = c_;
    for (auto& v : r) v = -v;
    return QPoly(std::move(r));
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            if (o.c_[j] != 0) r[i + j] += c_[i] * o.c_[j];
    }
    return QPoly(std::move(r));
}

QPoly QPoly::scaled(const Rat& s) const {
    if (s == 0) return {};
    std::vector<Rat> r = c_;
    for (auto& v : r) v *= s;
    return QPoly(std::move(r));
}

QPoly QPoly::derivative() const {
    if (degree() < 1) return {};
    std::vector<Rat> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * (long)i;
    return QPoly(std::move(r));
}

Rat QPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QPoly QPoly::monic() const {
    if (is_zero()) return {};
    return scaled(Rat(1) / lc());
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw Error(ErrKind::Internal, "division by zero polynomial");
    QPoly r = a;
    std::vector<Rat> q(std::max(0, a.degree() - b.degree() + 1), Rat(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        Rat f = r.lc() / b.lc();
        int d = r.degree() - b.degree();
        q[d] = f;
        r = r - (b * QPoly::monomial(d, f));
    }
    return {QPoly(std::move(q)), r};
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

void QPoly::xgcd(const QPoly& a, const QPoly& b, QPoly& g, QPoly& s, QPoly& t) {
    QPoly r0 = a, r1 = b;
    QPoly s0 = QPoly::constant(1), s1;
    QPoly t0, t1 = QPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r2] = divmod(r0, r1);
        r0 = r1; r1 = r2;
        QPoly s2 = s0 - q * s1;
        s0 = s1; s1 = s2;
        QPoly t2 = t0 - q * t1;
        t0 = t1; t1 = t2;
    }
    if (!r0.is_zero()) {
        Rat inv = Rat(1) / r0.lc();
        r0 = r0.scaled(inv); s0 = s0.scaled(inv); t0 = t0.scaled(inv);
    }
    g = r0; s = s0; t = t0;
}

QPoly QPoly::shifted(const Rat& shift) const {
    QPoly acc;
    QPoly lin({std::vector<Rat>{shift, Rat(1)}});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * lin + QPoly::constant(*it);
    return acc;
}

QPoly QPoly::stretched(const Rat& r) const {
    std::vector<Rat> c = c_;
    Rat p(1);
    for (size_t i = 0; i < c.size(); ++i) { c[i] *= p; p *= r; }
    return QPoly(std::move(c));
}

std::string QPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& a = (*this)[i];
        if (a == 0) continue;
        if (!first) os << (a > 0 ? " + " : " - ");
        else if (a < 0) os << "-";
        Rat mag = abs(a);
        if (mag != 1 || i == 0) os << mag.get_str();
        if (i > 0) {
            if (mag != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

QSquarefree squarefree_decomposition(const QPoly& f) {
    QSquarefree out;
    if (f.is_zero()) { out.unit = 0; return out; }
    out.unit = f.lc();
    QPoly a = f.monic();
    if (a.degree() == 0) return out;
    QPoly d = a.derivative();
    QPoly g = QPoly::gcd(a, d);
    QPoly w = QPoly::divmod(a, g).first;
    QPoly y = QPoly::divmod(d, g).first;
    QPoly z = y - w.derivative();
    int k = 1;
    while (!w.is_zero() && w.degree() > 0) {
        QPoly gi = QPoly::gcd(w, z);
        if (gi.degree() > 0) out.parts.push_back({gi, k});
        w = QPoly::divmod(w, gi).first;
        y = QPoly::divmod(z, gi).first;
        z = y - w.derivative();
        ++k;
        if (k > f.degree() + 2) throw Error(ErrKind::Internal, "squarefree loop");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Zassenhaus machinery: word-size prime arithmetic, Berlekamp, Hensel.
// ---------------------------------------------------------------------------

namespace {

using ModPoly = std::vector<long>; // coeffs in [0,p)
using ZPoly = std::vector<Int>;

long mod_pow(long b, long e, long p) {
    long r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = (long)((__int128)r * b % p);
        b = (long)((__int128)b * b % p);
        e >>= 1;
    }
    return r;
}
long mod_inv(long a, long p) { return mod_pow(((a % p) + p) % p, p - 2, p); }

void mp_trim(ModPoly& a) { while (!a.empty() && a.back() == 0) a.pop_back(); }

ModPoly mp_mul(const ModPoly& a, const ModPoly& b, long p) {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (long)((r[i + j] + (__int128)a[i] * b[j]) % p);
    }
    mp_trim(r);
    return r;
}

ModPoly mp_sub(ModPoly a, const ModPoly& b, long p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % p + p) % p;
    mp_trim(a);
    return a;
}

ModPoly mp_rem(ModPoly a, const ModPoly& b, long p) {
    long binv = mod_inv(b.back(), p);
    while (a.size() >= b.size() && !a.empty()) {
        long f = (long)((__int128)a.back() * binv % p);
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[off + i] = (long)(((a[off + i] - (__int128)f * b[i]) % p + p) % p);
        mp_trim(a);
    }
    return a;
}

ModPoly mp_divq(ModPoly a, const ModPoly& b, long p) {
    long binv = mod_inv(b.back(), p);
    if (a.size() < b.size()) return {};
    ModPoly q(a.size() - b.size() + 1, 0);
    while (a.size() >= b.size() && !a.empty()) {
        long f = (long)((__int128)a.back() * binv % p);
        size_t off = a.size() - b.size();
        q[off] = f;
        for (size_t i = 0; i < b.size(); ++i)
            a[off + i] = (long)(((a[off + i] - (__int128)f * b[i]) % p + p) % p);
        mp_trim(a);
    }
    mp_trim(q);
    return q;
}

ModPoly mp_gcd(ModPoly a, ModPoly b, long p) {
    while (!b.empty()) {
        ModPoly r = mp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        long inv = mod_inv(a.back(), p);
        for (auto& v : a) v = (long)((__int128)v * inv % p);
    }
    return a;
}

ModPoly mp_deriv(const ModPoly& a, long p) {
    if (a.size() < 2) return {};
    ModPoly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = (long)((__int128)a[i] * i % p);
    mp_trim(r);
    return r;
}

/// Berlekamp factorization of a squarefree monic polynomial mod p (p small).
std::vector<ModPoly> berlekamp(const ModPoly& f, long p) {
    int n = (int)f.size() - 1;
    if (n <= 1) return {f};
    std::vector<ModPoly> rows(n);
    for (int i = 0; i < n; ++i) {
        ModPoly xi((size_t)i * p + 1, 0);
        xi.back() = 1;
        rows[i] = mp_rem(std::move(xi), f, p);
        rows[i].resize(n, 0);
    }
    // kernel of Q - I acting on row vectors v (v Q = v): solve (Q - I)^T w = 0.
    std::vector<std::vector<long>> M(n, std::vector<long>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            M[j][i] = ((rows[i][j] - (i == j ? 1 : 0)) % p + p) % p;
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int piv = -1;
        for (int r = rank; r < n; ++r)
            if (M[r][col]) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(M[rank], M[piv]);
        long inv = mod_inv(M[rank][col], p);
        for (int j = 0; j < n; ++j) M[rank][j] = (long)((__int128)M[rank][j] * inv % p);
        for (int r = 0; r < n; ++r) {
            if (r == rank || !M[r][col]) continue;
            long f2 = M[r][col];
            for (int j = 0; j < n; ++j)
                M[r][j] = (long)(((M[r][j] - (__int128)f2 * M[rank][j]) % p + p) % p);
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<ModPoly> kernel;
    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col) is_pivot[c] = true;
    for (int col = 0; col < n; ++col) {
        if (is_pivot[col]) continue;
        ModPoly v(n, 0);
        v[col] = 1;
        for (int r = 0; r < rank; ++r)
            v[pivot_col[r]] = ((-M[r][col]) % p + p) % p;
        mp_trim(v);
        kernel.push_back(v);
    }
    size_t nfactors = kernel.size();
    std::vector<ModPoly> factors = {f};
    if (nfactors <= 1) return factors;
    for (const auto& v : kernel) {
        if (factors.size() >= nfactors) break;
        if (v.size() <= 1) continue;
        std::vector<ModPoly> next;
        for (const auto& g : factors) {
            if ((int)g.size() - 1 <= 1 || factors.size() >= nfactors) {
                next.push_back(g);
                continue;
            }
            ModPoly rem_g = g;
            for (long s = 0; s < p && (int)rem_g.size() - 1 > 0; ++s) {
                ModPoly vs = v;
                vs[0] = ((vs[0] - s) % p + p) % p;
                mp_trim(vs);
                if (vs.empty()) continue;
                ModPoly h = mp_gcd(rem_g, vs, p);
                if (h.size() > 1 && h.size() < rem_g.size()) {
                    next.push_back(h);
                    rem_g = mp_divq(rem_g, h, p);
                }
            }
            if (rem_g.size() > 1) next.push_back(rem_g);
        }
        factors = std::move(next);
    }
    return factors;
}

void zp_trim(ZPoly& a) { while (!a.empty() && a.back() == 0) a.pop_back(); }

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    zp_trim(r);
    return r;
}

ZPoly zp_sub(ZPoly a, const ZPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Int(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    zp_trim(a);
    return a;
}

ZPoly zp_add(ZPoly a, const ZPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Int(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    zp_trim(a);
    return a;
}

void zp_mod(ZPoly& a, const Int& m) {
    for (auto& v : a) { v %= m; if (v < 0) v += m; }
    zp_trim(a);
}

void zp_mod_sym(ZPoly& a, const Int& m) {
    for (auto& v : a) {
        v %= m; if (v < 0) v += m;
        if (v * 2 > m) v -= m;
    }
    zp_trim(a);
}

ZPoly zpk_mul(const ZPoly& a, const ZPoly& b, const Int& m) {
    ZPoly r = zp_mul(a, b);
    zp_mod(r, m);
    return r;
}

/// a = q*b + r with b monic, coefficients mod m.
void zpk_divmod(const ZPoly& a, const ZPoly& b, const Int& m, ZPoly& q, ZPoly& r) {
    r = a;
    zp_mod(r, m);
    q.clear();
    if (r.size() >= b.size()) q.assign(r.size() - b.size() + 1, Int(0));
    while (r.size() >= b.size() && !r.empty()) {
        Int f = r.back();
        size_t off = r.size() - b.size();
        q[off] = f;
        for (size_t i = 0; i < b.size(); ++i) r[off + i] -= f * b[i];
        zp_mod(r, m);
    }
    zp_trim(q);
}

/// Lift a monic coprime factorization f = prod(factors) mod p to mod target.
std::vector<ZPoly> multifactor_hensel(const ZPoly& f, const std::vector<ZPoly>& factors,
                                      long p, const Int& target) {
    if (factors.size() == 1) {
        ZPoly g = f;
        zp_mod(g, target);
        return {g};
    }
    size_t half = factors.size() / 2;
    std::vector<ZPoly> left(factors.begin(), factors.begin() + half);
    std::vector<ZPoly> right(factors.begin() + half, factors.end());
    Int P(p);
    ZPoly g = {Int(1)}, h = {Int(1)};
    for (const auto& fac : left) g = zpk_mul(g, fac, P);
    for (const auto& fac : right) h = zpk_mul(h, fac, P);
    // Bezout s*g + t*h = 1 mod p
    auto to_mod = [&](const ZPoly& a) {
        ModPoly r(a.size());
        for (size_t i = 0; i < a.size(); ++i) r[i] = (long)mpz_fdiv_ui(a[i].get_mpz_t(), p);
        mp_trim(r);
        return r;
    };
    ModPoly r0 = to_mod(g), r1 = to_mod(h), s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
    while (!r1.empty()) {
        ModPoly q = mp_divq(r0, r1, p);
        ModPoly r2 = mp_sub(r0, mp_mul(q, r1, p), p);
        r0 = r1; r1 = r2;
        ModPoly s2 = mp_sub(s0, mp_mul(q, s1, p), p);
        s0 = s1; s1 = s2;
        ModPoly t2 = mp_sub(t0, mp_mul(q, t1, p), p);
        t0 = t1; t1 = t2;
    }
    if (r0.size() != 1) throw Error(ErrKind::Internal, "hensel: factors not coprime mod p");
    long inv = mod_inv(r0[0], p);
    ZPoly S(s0.size()), T(t0.size());
    for (size_t i = 0; i < s0.size(); ++i) S[i] = (long)((__int128)s0[i] * inv % p);
    for (size_t i = 0; i < t0.size(); ++i) T[i] = (long)((__int128)t0[i] * inv % p);
    // quadratic lifting; H stays monic, G recovered by exact monic division
    Int m(p);
    ZPoly G = g, H = h;
    while (m < target) {
        Int m2 = m * m;
        ZPoly e = zp_sub(f, zp_mul(G, H));
        zp_mod(e, m2);
        ZPoly se = zpk_mul(S, e, m2);
        ZPoly q, r;
        zpk_divmod(se, H, m2, q, r);
        ZPoly H1 = zp_add(H, r);
        zp_mod(H1, m2);
        ZPoly G1, R;
        zpk_divmod(f, H1, m2, G1, R);
        if (!R.empty()) throw Error(ErrKind::Internal, "hensel: lifted factor not dividing");
        ZPoly b = zp_sub(zp_add(zpk_mul(S, G1, m2), zpk_mul(T, H1, m2)), ZPoly{Int(1)});
        zp_mod(b, m2);
        ZPoly sb = zpk_mul(S, b, m2);
        ZPoly q2, r2;
        zpk_divmod(sb, H1, m2, q2, r2);
        ZPoly S1 = zp_sub(S, r2);
        zp_mod(S1, m2);
        ZPoly T1 = zp_sub(T, zp_add(zpk_mul(T, b, m2), zpk_mul(q2, G1, m2)));
        zp_mod(T1, m2);
        G = G1; H = H1; S = S1; T = T1;
        m = m2;
    }
    zp_mod(G, target);
    zp_mod(H, target);
    auto out = multifactor_hensel(G, left, p, target);
    auto out2 = multifactor_hensel(H, right, p, target);
    out.insert(out.end(), out2.begin(), out2.end());
    return out;
}

std::optional<ZPoly> zp_exact_div(const ZPoly& a, const ZPoly& b) {
    if (b.empty()) return std::nullopt;
    ZPoly r = a, q;
    if (r.size() < b.size()) return std::nullopt;
    q.assign(r.size() - b.size() + 1, Int(0));
    while (!r.empty() && r.size() >= b.size()) {
        Int f = r.back();
        if (!mpz_divisible_p(f.get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
        f /= b.back();
        size_t off = r.size() - b.size();
        q[off] = f;
        for (size_t i = 0; i < b.size(); ++i) r[off + i] -= f * b[i];
        zp_trim(r);
    }
    if (!r.empty()) return std::nullopt;
    zp_trim(q);
    return q;
}

/// Factor a primitive squarefree integer polynomial with positive leading
/// coefficient into irreducible integer polynomials.
std::vector<ZPoly> factor_squarefree_z(const ZPoly& zf) {
    int n = (int)zf.size() - 1;
    if (n <= 1) return {zf};
    Int lc = zf.back();
    // monicize: fstar(x) = lc^(n-1) * f(x/lc), integer & monic
    // fstar(x) = lc^(n-1) * f(x/lc) is monic with fstar[i] = zf[i]*lc^(n-1-i)
    ZPoly fstar(zf.size());
    {
        fstar[(size_t)n] = 1;
        Int pw(1);
        for (int i = n - 1; i >= 0; --i) {
            fstar[(size_t)i] = zf[(size_t)i] * pw;
            pw *= lc;
        }
    }
    static const long primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43,
                                  47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    long p = 0;
    ModPoly fsp;
    for (long cand : primes) {
        ModPoly g(fstar.size());
        for (size_t i = 0; i < fstar.size(); ++i)
            g[i] = (long)mpz_fdiv_ui(fstar[i].get_mpz_t(), cand);
        mp_trim(g);
        if ((int)g.size() - 1 != n) continue; // lc divisible
        if (mp_gcd(g, mp_deriv(g, cand), cand).size() != 1) continue;
        p = cand;
        fsp = g;
        break;
    }
    if (!p) throw Error(ErrKind::Internal, "no suitable prime for factorization");
    auto mf = berlekamp(fsp, p);
    std::sort(mf.begin(), mf.end());
    if (mf.size() == 1) return {zf};
    Int norm2sq(0);
    for (const auto& v : fstar) norm2sq += v * v;
    Int B = (Int(1) << (n + 1)) * (sqrt(norm2sq) + 1);
    Int target(p);
    while (target <= 2 * B) target *= p;
    std::vector<ZPoly> start;
    for (auto& m : mf) {
        ZPoly z(m.size());
        for (size_t i = 0; i < m.size(); ++i) z[i] = m[i];
        start.push_back(z);
    }
    auto lifted = multifactor_hensel(fstar, start, p, target);
    int r = (int)lifted.size();
    std::vector<bool> used(r, false);
    ZPoly remaining = fstar;
    std::vector<ZPoly> found_star;
    for (int take = 1; take <= r; ++take) {
        bool progress = true;
        while (progress) {
            progress = false;
            std::vector<int> avail;
            for (int i = 0; i < r; ++i)
                if (!used[i]) avail.push_back(i);
            if ((int)avail.size() < take) break;
            std::vector<int> comb(take);
            std::iota(comb.begin(), comb.end(), 0);
            while (true) {
                ZPoly prod = {Int(1)};
                for (int i = 0; i < take; ++i) prod = zpk_mul(prod, lifted[avail[comb[i]]], target);
                zp_mod_sym(prod, target);
                auto qd = zp_exact_div(remaining, prod);
                if (qd) {
                    found_star.push_back(prod);
                    remaining = *qd;
                    for (int i = 0; i < take; ++i) used[avail[comb[i]]] = true;
                    progress = true;
                    break;
                }
                int pos = take - 1;
                while (pos >= 0 && comb[pos] == (int)avail.size() - take + pos) --pos;
                if (pos < 0) break;
                ++comb[pos];
                for (int i = pos + 1; i < take; ++i) comb[i] = comb[i - 1] + 1;
            }
        }
        if ((int)remaining.size() - 1 <= 0) break;
    }
    if ((int)remaining.size() - 1 > 0) found_star.push_back(remaining);
    // undo x -> x/lc: factor of f = primitive part of g*(lc*x)
    std::vector<ZPoly> out;
    for (const auto& gs : found_star) {
        ZPoly g(gs.size());
        Int pw(1);
        for (size_t i = 0; i < gs.size(); ++i) { g[i] = gs[i] * pw; pw *= lc; }
        Int cont(0);
        for (const auto& v : g) cont = gcd(cont, v);
        if (cont != 0)
            for (auto& v : g) v /= cont;
        if (!g.empty() && g.back() < 0)
            for (auto& v : g) v = -v;
        out.push_back(g);
    }
    return out;
}

} // namespace

QFactorization factor_q(const QPoly& f, int degree_cap) {
    QFactorization out;
    out.unit = 1;
    if (f.is_zero()) { out.unit = 0; return out; }
    if (f.degree() > degree_cap)
        throw Error(ErrKind::DegreeCap, "factorization degree " + std::to_string(f.degree()) +
                                            " exceeds cap " + std::to_string(degree_cap));
    out.unit = f.lc();
    if (f.degree() == 0) return out;

    QSquarefree sf = squarefree_decomposition(f);
    for (const auto& part : sf.parts) {
        const QPoly& q = part.poly;
        Int den(1);
        for (const auto& c : q.coeffs()) den = lcm(den, Int(c.get_den()));
        ZPoly zf(q.coeffs().size());
        for (size_t i = 0; i < zf.size(); ++i)
            zf[i] = Int(q.coeffs()[i].get_num()) * (den / Int(q.coeffs()[i].get_den()));
        Int cont(0);
        for (const auto& v : zf) cont = gcd(cont, v);
        if (cont != 0)
            for (auto& v : zf) v /= cont;
        if (zf.back() < 0)
            for (auto& v : zf) v = -v;
        for (const auto& g : factor_squarefree_z(zf)) {
            std::vector<Rat> qc(g.size());
            for (size_t i = 0; i < g.size(); ++i) qc[i] = Rat(g[i]);
            out.factors.push_back({QPoly(std::move(qc)).monic(), part.multiplicity});
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const QFactor& a, const QFactor& b) {
        if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
        for (int i = a.poly.degree(); i >= 0; --i)
            if (a.poly[i] != b.poly[i]) return a.poly[i] < b.poly[i];
        return a.multiplicity < b.multiplicity;
    });
    return out;
}

std::vector<Rat> rational_roots(const QPoly& f) {
    std::vector<Rat> roots;
    auto fact = factor_q(f, 64);
    for (const auto& g : fact.factors)
        if (g.poly.degree() == 1) roots.push_back(-g.poly[0] / g.poly[1]);
    std::sort(roots.begin(), roots.end());
    return roots;
}

Rat resultant_q(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return 0;
    QPoly f = a, g = b;
    Rat res(1);
    int sign = 1;
    while (true) {
        if (g.degree() == 0) {
            Rat r(1);
            for (int i = 0; i < f.degree(); ++i) r *= g[0];
            return res * r * sign;
        }
        if (f.degree() < g.degree()) {
            if ((f.degree() & 1) && (g.degree() & 1)) sign = -sign;
            std::swap(f, g);
            continue;
        }
        QPoly r = QPoly::divmod(f, g).second;
        if (r.is_zero()) return 0;
        Rat lcg = g.lc();
        Rat mul(1);
        for (int i = 0; i < f.degree() - r.degree(); ++i) mul *= lcg;
        if ((f.degree() & 1) && (g.degree() & 1)) sign = -sign;
        res *= mul;
        f = g;
        g = r;
    }
}

int euler_phi(int m) {
    int r = m, mm = m;
    for (int p = 2; p * p <= mm; ++p) {
        if (mm % p == 0) {
            r -= r / p;
            while (mm % p == 0) mm /= p;
        }
    }
    if (mm > 1) r -= r / mm;
    return r;
}

const QPoly& cyclotomic_polynomial(int m) {
    static std::map<int, QPoly> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    std::vector<Rat> xm(m + 1, Rat(0));
    xm[0] = -1;
    xm[m] = 1;
    QPoly num{std::vector<Rat>(xm)};
    for (int d = 1; d < m; ++d) {
        if (m % d) continue;
        num = QPoly::divmod(num, cyclotomic_polynomial(d)).first;
    }
    return cache.emplace(m, num).first->second;
}

} // namespace dpa
