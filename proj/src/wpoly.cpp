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
#include "dpa/wpoly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace dpa {

int WRing::index_of(const std::string& name) const {
    for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return (int)i;
    return -1;
}

WRingPtr make_ring(std::vector<std::string> vars, std::vector<int> weights) {
    if (vars.size() != weights.size())
        throw Error(ErrKind::Internal, "ring: vars/weights size mismatch");
    for (int w : weights)
        if (w < 1) throw Error(ErrKind::Internal, "ring weights must be >= 1");
    for (size_t i = 0; i < vars.size(); ++i)
        for (size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) throw Error(ErrKind::Internal, "duplicate variable name");
    auto r = std::make_shared<WRing>();
    r->vars = std::move(vars);
    r->weights = std::move(weights);
    return r;
}

static int wdeg_of(const WRing& ring, const Expo& e) {
    int d = 0;
    for (size_t i = 0; i < e.size(); ++i) d += e[i] * ring.weights[i];
    return d;
}

bool TermOrder::operator()(const Expo& a, const Expo& b) const {
    int da = wdeg_of(*ring, a), db = wdeg_of(*ring, b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

WPoly::WPoly(WRingPtr ring, TowerPtr tw)
    : ring_(std::move(ring)), tw_(std::move(tw)), terms_(TermOrder{ring_.get()}) {}

WPoly WPoly::zero(const WRingPtr& ring, const TowerPtr& tw) { return WPoly(ring, tw); }

WPoly WPoly::constant(const WRingPtr& ring, const TowerPtr& tw, const FE& c) {
    WPoly p(ring, tw);
    if (!c.is_zero()) p.terms_.emplace(Expo(ring->vars.size(), 0), embed(c, tw));
    return p;
}

WPoly WPoly::variable(const WRingPtr& ring, const TowerPtr& tw, int var) {
    Expo e(ring->vars.size(), 0);
    e[(size_t)var] = 1;
    return monomial(ring, tw, e, tw->one());
}

WPoly WPoly::monomial(const WRingPtr& ring, const TowerPtr& tw, const Expo& e, const FE& c) {
    WPoly p(ring, tw);
    if (!c.is_zero()) p.terms_.emplace(e, embed(c, tw));
    return p;
}

void WPoly::add_term(const Expo& e, const FE& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int WPoly::weighted_degree() const {
    if (terms_.empty()) return -1;
    return wdeg_of(*ring_, terms_.rbegin()->first);
}

int WPoly::min_weighted_degree() const {
    if (terms_.empty()) return -1;
    return wdeg_of(*ring_, terms_.begin()->first);
}

bool WPoly::is_homogeneous() const {
    return terms_.empty() || weighted_degree() == min_weighted_degree();
}

int WPoly::degree_in(int var) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[(size_t)var]);
    return d;
}

int WPoly::min_degree_in(int var) const {
    if (terms_.empty()) return -1;
    int d = INT32_MAX;
    for (const auto& [e, c] : terms_) d = std::min(d, e[(size_t)var]);
    return d;
}

WPoly WPoly::operator+(const WPoly& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    TowerPtr tw = join_towers(tw_, o.tw_);
    WPoly r = retower(tw);
    for (const auto& [e, c] : o.terms_) r.add_term(e, embed(c, tw));
    return r;
}

WPoly WPoly::operator-() const {
    WPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

WPoly WPoly::operator-(const WPoly& o) const { return *this + (-o); }

WPoly WPoly::operator*(const WPoly& o) const {
    TowerPtr tw = join_towers(tw_, o.tw_);
    WPoly r(ring_ ? ring_ : o.ring_, tw);
    if (is_zero() || o.is_zero()) return r;
    for (const auto& [e1, c1] : terms_) {
        FE c1e = embed(c1, tw);
        for (const auto& [e2, c2] : o.terms_) {
            Expo e(e1.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1e * embed(c2, tw));
        }
    }
    return r;
}

WPoly WPoly::scaled(const FE& f) const {
    if (f.is_zero()) return WPoly(ring_, tw_);
    TowerPtr tw = join_towers(tw_, f.tower());
    WPoly r = retower(tw);
    FE fe = embed(f, tw);
    for (auto& [e, c] : r.terms_) c = c * fe;
    return r;
}

WPoly WPoly::pow(int e) const {
    if (e < 0) throw Error(ErrKind::Internal, "negative power");
    WPoly acc = constant(ring_, tw_, tw_->one());
    WPoly base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool WPoly::operator==(const WPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto it2 = o.terms_.begin();
    for (const auto& [e, c] : terms_) {
        if (e != it2->first || !(c == it2->second)) return false;
        ++it2;
    }
    return true;
}

FE WPoly::coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? (tw_ ? tw_->zero() : FE()) : it->second;
}

FE WPoly::leading_coeff() const {
    if (terms_.empty()) return tw_->zero();
    return terms_.rbegin()->second;
}

Expo WPoly::leading_expo() const {
    if (terms_.empty()) throw Error(ErrKind::Internal, "leading term of zero");
    return terms_.rbegin()->first;
}

WPoly WPoly::derivative(int var) const {
    WPoly r(ring_, tw_);
    for (const auto& [e, c] : terms_) {
        if (e[(size_t)var] == 0) continue;
        Expo d = e;
        d[(size_t)var] -= 1;
        r.add_term(d, c * tw_->from_rat(e[(size_t)var]));
    }
    return r;
}

FE WPoly::eval(const std::vector<FE>& point) const {
    TowerPtr tw = tw_;
    for (const auto& p : point) tw = join_towers(tw, p.tower());
    FE acc = tw->zero();
    for (const auto& [e, c] : terms_) {
        FE t = embed(c, tw);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i]) t = t * embed(point[i], tw).pow(e[i]);
        acc = acc + t;
    }
    return acc;
}

WPoly WPoly::substitute(const std::vector<WPoly>& images, bool check_weights) const {
    if (images.size() != ring_->vars.size())
        throw Error(ErrKind::Internal, "substitute: image count mismatch");
    if (check_weights) {
        for (size_t i = 0; i < images.size(); ++i) {
            if (images[i].is_zero()) continue;
            if (!images[i].is_homogeneous() || images[i].weighted_degree() != ring_->weights[i])
                throw Error(ErrKind::WeightMismatch,
                            "image of " + ring_->vars[i] + " is not homogeneous of weight " +
                                std::to_string(ring_->weights[i]));
        }
    }
    WRingPtr out_ring = images.empty() ? ring_ : images[0].ring();
    TowerPtr tw = tw_;
    for (const auto& im : images) tw = join_towers(tw, im.tower());
    WPoly acc(out_ring, tw);
    for (const auto& [e, c] : terms_) {
        WPoly t = constant(out_ring, tw, embed(c, tw));
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i]) t = t * images[i].pow(e[i]);
        acc = acc + t;
    }
    return acc;
}

WPoly WPoly::substitute_var(int var, const WPoly& image) const {
    std::vector<WPoly> images;
    for (size_t i = 0; i < ring_->vars.size(); ++i)
        images.push_back((int)i == var ? image : variable(ring_, tw_, (int)i));
    return substitute(images, false);
}

WPoly WPoly::retower(const TowerPtr& target) const {
    if (tw_ && tw_->same_as(*target)) return *this;
    WPoly r(ring_, target);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, embed(c, target));
    return r;
}

WPoly WPoly::truncate_total_degree(int bound) const {
    WPoly r(ring_, tw_);
    for (const auto& [e, c] : terms_) {
        int total = 0;
        for (int v : e) total += v;
        if (total <= bound) r.terms_.emplace(e, c);
    }
    return r;
}

std::map<int, WPoly> WPoly::univariate_in(int var) const {
    std::map<int, WPoly> out;
    for (const auto& [e, c] : terms_) {
        Expo rest = e;
        int d = rest[(size_t)var];
        rest[(size_t)var] = 0;
        auto it = out.find(d);
        if (it == out.end()) it = out.emplace(d, WPoly(ring_, tw_)).first;
        it->second.add_term(rest, c);
    }
    return out;
}

WPoly WPoly::divide_exact(const WPoly& a, const WPoly& b) {
    if (b.is_zero()) throw Error(ErrKind::Internal, "exact division by zero");
    TowerPtr tw = join_towers(a.tw_, b.tw_);
    WPoly r = a.retower(tw);
    WPoly bb = b.retower(tw);
    WPoly q(a.ring_, tw);
    Expo lead_b = bb.leading_expo();
    FE lc_b_inv = bb.leading_coeff().inverse();
    while (!r.is_zero()) {
        Expo lead_r = r.leading_expo();
        Expo mono(lead_r.size());
        for (size_t i = 0; i < mono.size(); ++i) {
            mono[i] = lead_r[i] - lead_b[i];
            if (mono[i] < 0) throw Error(ErrKind::Internal, "division not exact (monomial)");
        }
        FE c = r.leading_coeff() * lc_b_inv;
        WPoly t = monomial(a.ring_, tw, mono, c);
        q = q + t;
        r = r - t * bb;
    }
    return q;
}

std::string WPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string cs = c.str();
        bool negated = false;
        bool simple = cs.find(' ') == std::string::npos && cs.find('+') == std::string::npos;
        if (!first && simple && !cs.empty() && cs[0] == '-') {
            negated = true;
            cs = cs.substr(1);
        }
        os << (first ? "" : (negated ? " - " : " + "));
        bool has_var = false;
        for (int v : e)
            if (v) has_var = true;
        bool coeff_is_one = (cs == "1");
        if (!has_var || !coeff_is_one) {
            if (simple) os << cs;
            else os << "(" << cs << ")";
            if (has_var) os << "*";
        }
        bool firstv = true;
        for (size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            if (!firstv) os << "*";
            os << ring_->vars[i];
            if (e[i] > 1) os << "^" << e[i];
            firstv = false;
        }
        first = false;
    }
    return os.str();
}

std::size_t WPoly::hash() const {
    std::size_t h = terms_.size();
    for (const auto& [e, c] : terms_) {
        for (int v : e) h = hash_combine(h, (size_t)v + 3);
        h = hash_combine(h, c.hash());
    }
    return h;
}

std::vector<Expo> graded_monomials(const WRing& ring, int d) {
    std::vector<Expo> out;
    if (ring.vars.empty()) {
        if (d == 0) out.push_back({});
        return out;
    }
    Expo cur(ring.vars.size(), 0);
    std::function<void(size_t, int)> rec = [&](size_t i, int rem) {
        if (i + 1 == ring.vars.size()) {
            if (rem % ring.weights[i] == 0) {
                cur[i] = rem / ring.weights[i];
                out.push_back(cur);
                cur[i] = 0;
            }
            return;
        }
        for (int k = rem / ring.weights[i]; k >= 0; --k) {
            cur[i] = k;
            rec(i + 1, rem - k * ring.weights[i]);
        }
        cur[i] = 0;
    };
    rec(0, d);
    return out;
}

WPoly wpoly_resultant(const WPoly& p, const WPoly& q, int var) {
    TowerPtr tw = join_towers(p.tower(), q.tower());
    const WRingPtr& ring = p.ring();
    WPoly one = WPoly::constant(ring, tw, tw->one());
    if (p.is_zero() || q.is_zero()) return WPoly::zero(ring, tw);
    auto pc = p.univariate_in(var);
    auto qc = q.univariate_in(var);
    int dp = p.degree_in(var), dq = q.degree_in(var);
    if (dp == 0 && dq == 0) return one;
    if (dp == 0) return p.retower(tw).pow(dq);
    if (dq == 0) return q.retower(tw).pow(dp);
    int n = dp + dq;
    auto get = [&](std::map<int, WPoly>& m, int i) {
        auto it = m.find(i);
        return it == m.end() ? WPoly::zero(ring, tw) : it->second.retower(tw);
    };
    std::vector<std::vector<WPoly>> M((size_t)n,
                                      std::vector<WPoly>((size_t)n, WPoly::zero(ring, tw)));
    for (int r = 0; r < dq; ++r)
        for (int k = 0; k <= dp; ++k) M[(size_t)r][(size_t)(r + k)] = get(pc, dp - k);
    for (int r = 0; r < dp; ++r)
        for (int k = 0; k <= dq; ++k) M[(size_t)(dq + r)][(size_t)(r + k)] = get(qc, dq - k);
    // Bareiss fraction-free elimination
    WPoly prev = one;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (M[(size_t)k][(size_t)k].is_zero()) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (!M[(size_t)r][(size_t)k].is_zero()) { piv = r; break; }
            if (piv < 0) return WPoly::zero(ring, tw);
            std::swap(M[(size_t)k], M[(size_t)piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                WPoly num = M[(size_t)i][(size_t)j] * M[(size_t)k][(size_t)k] -
                            M[(size_t)i][(size_t)k] * M[(size_t)k][(size_t)j];
                M[(size_t)i][(size_t)j] = (k == 0) ? num : WPoly::divide_exact(num, prev);
            }
            M[(size_t)i][(size_t)k] = WPoly::zero(ring, tw);
        }
        prev = M[(size_t)k][(size_t)k];
    }
    WPoly det = M[(size_t)(n - 1)][(size_t)(n - 1)];
    if (sign < 0) det = -det;
    return det;
}

KPoly wpoly_to_kpoly(const WPoly& p, int var) {
    const TowerPtr& tw = p.tower();
    int d = p.degree_in(var);
    std::vector<FE> c((size_t)d + 1, tw->zero());
    for (const auto& [e, coeff] : p.terms()) {
        for (size_t i = 0; i < e.size(); ++i)
            if ((int)i != var && e[i] != 0)
                throw Error(ErrKind::Internal, "wpoly_to_kpoly: extra variable present");
        c[(size_t)e[(size_t)var]] = coeff;
    }
    return KPoly(tw, std::move(c));
}

WPoly kpoly_to_wpoly(const KPoly& p, const WRingPtr& ring, int var) {
    WPoly r = WPoly::zero(ring, p.tower());
    for (int i = 0; i <= p.degree(); ++i) {
        if (p.coeff(i).is_zero()) continue;
        Expo e(ring->vars.size(), 0);
        e[(size_t)var] = i;
        r = r + WPoly::monomial(ring, p.tower(), e, p.coeff(i));
    }
    return r;
}

KPoly binary_dehomogenize(const WPoly& p, int xvar, int yvar) {
    const TowerPtr& tw = p.tower();
    int d = p.degree_in(xvar);
    std::vector<FE> c((size_t)d + 1, tw->zero());
    for (const auto& [e, coeff] : p.terms()) {
        for (size_t i = 0; i < e.size(); ++i)
            if ((int)i != xvar && (int)i != yvar && e[i] != 0)
                throw Error(ErrKind::Internal, "binary_dehomogenize: extra variable");
        c[(size_t)e[(size_t)xvar]] = c[(size_t)e[(size_t)xvar]] + coeff;
    }
    return KPoly(tw, std::move(c));
}

WPoly binary_gcd(const WPoly& a, const WPoly& b, int xvar, int yvar) {
    const WRingPtr& ring = a.ring();
    TowerPtr tw = join_towers(a.tower(), b.tower());
    if (a.is_zero()) return b.retower(tw);
    if (b.is_zero()) return a.retower(tw);
    int wx = ring->weights[(size_t)xvar], wy = ring->weights[(size_t)yvar];
    KPoly ka = binary_dehomogenize(a.retower(tw), xvar, yvar);
    KPoly kb = binary_dehomogenize(b.retower(tw), xvar, yvar);
    int ay = (a.weighted_degree() - ka.degree() * wx) / wy;
    int by = (b.weighted_degree() - kb.degree() * wx) / wy;
    KPoly kg = KPoly::gcd(ka, kb);
    int gy = std::min(ay, by);
    WPoly g = WPoly::zero(ring, tw);
    int dg = kg.degree();
    for (int i = 0; i <= dg; ++i) {
        if (kg.coeff(i).is_zero()) continue;
        Expo e(ring->vars.size(), 0);
        e[(size_t)xvar] = i;
        e[(size_t)yvar] = ((dg - i) * wx) / wy; // wx == wy == 1 in all uses
        g = g + WPoly::monomial(ring, tw, e, kg.coeff(i));
    }
    if (gy > 0) {
        Expo e(ring->vars.size(), 0);
        e[(size_t)yvar] = gy;
        g = g * WPoly::monomial(ring, tw, e, tw->one());
    }
    return g;
}

WSquarefree wpoly_squarefree(const WPoly& p, int var) {
    WSquarefree out;
    const WRingPtr& ring = p.ring();
    const TowerPtr& tw = p.tower();
    out.unit = WPoly::constant(ring, tw, tw->one());
    if (p.is_zero()) {
        out.unit = p;
        return out;
    }
    int other = -1;
    for (size_t i = 0; i < ring->vars.size(); ++i) {
        if ((int)i == var) continue;
        if (p.degree_in((int)i) > 0) {
            if (other >= 0)
                throw Error(ErrKind::UnsupportedMapShape,
                            "squarefree: more than two variables present");
            other = (int)i;
        }
    }
    KPoly k;
    int ymult = 0;
    if (other < 0) {
        k = wpoly_to_kpoly(p, var);
    } else {
        if (!p.is_homogeneous())
            throw Error(ErrKind::UnsupportedMapShape, "squarefree: inhomogeneous bivariate");
        k = binary_dehomogenize(p, var, other);
        ymult = (p.weighted_degree() - k.degree() * ring->weights[(size_t)var]) /
                ring->weights[(size_t)other];
    }
    auto homogenize = [&](const KPoly& q) {
        WPoly g = WPoly::zero(ring, tw);
        for (int i = 0; i <= q.degree(); ++i) {
            if (q.coeff(i).is_zero()) continue;
            Expo e(ring->vars.size(), 0);
            e[(size_t)var] = i;
            if (other >= 0) e[(size_t)other] = q.degree() - i;
            g = g + WPoly::monomial(ring, tw, e, q.coeff(i));
        }
        return g;
    };
    auto sq = squarefree_k(k);
    for (const auto& part : sq.parts) out.parts.push_back({homogenize(part.poly), part.multiplicity});
    WPoly unit = WPoly::constant(ring, tw, sq.unit);
    if (ymult > 0) {
        Expo e(ring->vars.size(), 0);
        e[(size_t)other] = ymult;
        unit = unit * WPoly::monomial(ring, tw, e, tw->one());
    }
    out.unit = unit;
    return out;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

struct Tok {
    enum Kind { Num, Ident, Pow, Mul, Div, Plus, Minus, LPar, RPar, End } kind;
    std::string text;
    long num = 0;
};

std::vector<Tok> tokenize(const std::string& s) {
    std::vector<Tok> out;
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace((unsigned char)c)) { ++i; continue; }
        if (std::isdigit((unsigned char)c)) {
            size_t j = i;
            while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
            out.push_back({Tok::Num, s.substr(i, j - i), std::stol(s.substr(i, j - i))});
            i = j;
            continue;
        }
        if (std::isalpha((unsigned char)c) || c == '_') {
            size_t j = i;
            while (j < s.size() && (std::isalnum((unsigned char)s[j]) || s[j] == '_')) ++j;
            out.push_back({Tok::Ident, s.substr(i, j - i)});
            i = j;
            continue;
        }
        switch (c) {
        case '^': out.push_back({Tok::Pow, "^"}); break;
        case '*': out.push_back({Tok::Mul, "*"}); break;
        case '/': out.push_back({Tok::Div, "/"}); break;
        case '+': out.push_back({Tok::Plus, "+"}); break;
        case '-': out.push_back({Tok::Minus, "-"}); break;
        case '(': out.push_back({Tok::LPar, "("}); break;
        case ')': out.push_back({Tok::RPar, ")"}); break;
        default:
            throw Error(ErrKind::Parse,
                        std::string("unexpected character '") + c + "' at " + std::to_string(i));
        }
        ++i;
    }
    out.push_back({Tok::End, ""});
    return out;
}

class Parser {
  public:
    Parser(std::vector<Tok> toks, WRingPtr ring, TowerPtr tw)
        : t_(std::move(toks)), ring_(std::move(ring)), tw_(std::move(tw)) {}

    WPoly parse() {
        WPoly p = expr();
        if (cur().kind != Tok::End)
            throw Error(ErrKind::Parse, "trailing input '" + cur().text + "'");
        return p;
    }

  private:
    const Tok& cur() const { return t_[pos_]; }
    void advance() { ++pos_; }
    void expect(Tok::Kind k, const char* what) {
        if (cur().kind != k)
            throw Error(ErrKind::Parse, std::string("expected ") + what + ", got '" +
                                            cur().text + "'");
        advance();
    }

    WPoly expr() {
        bool neg = false;
        if (cur().kind == Tok::Minus) { neg = true; advance(); }
        else if (cur().kind == Tok::Plus) advance();
        WPoly acc = term();
        if (neg) acc = -acc;
        while (cur().kind == Tok::Plus || cur().kind == Tok::Minus) {
            bool minus = cur().kind == Tok::Minus;
            advance();
            WPoly t = term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    bool starts_factor() const {
        return cur().kind == Tok::Num || cur().kind == Tok::Ident || cur().kind == Tok::LPar;
    }

    WPoly term() {
        WPoly acc = factor();
        while (true) {
            if (cur().kind == Tok::Mul) {
                advance();
                acc = acc * factor();
            } else if (cur().kind == Tok::Div) {
                advance();
                WPoly d = factor();
                if (d.term_count() != 1 || d.weighted_degree() != 0)
                    throw Error(ErrKind::Parse, "division only by constants");
                acc = acc.scaled(d.leading_coeff().inverse());
            } else if (starts_factor()) {
                acc = acc * factor();
            } else {
                break;
            }
        }
        return acc;
    }

    WPoly factor() {
        WPoly b = base();
        if (cur().kind == Tok::Pow) {
            advance();
            if (cur().kind != Tok::Num) throw Error(ErrKind::Parse, "exponent must be a number");
            long e = cur().num;
            advance();
            b = b.pow((int)e);
        }
        return b;
    }

    WPoly base() {
        if (cur().kind == Tok::Num) {
            Rat v(cur().num);
            advance();
            return WPoly::constant(ring_, tw_, tw_->from_rat(v));
        }
        if (cur().kind == Tok::LPar) {
            advance();
            WPoly p = expr();
            expect(Tok::RPar, ")");
            return p;
        }
        if (cur().kind == Tok::Ident) {
            std::string name = cur().text;
            advance();
            if (name == "zeta") {
                expect(Tok::LPar, "(");
                if (cur().kind != Tok::Num) throw Error(ErrKind::Parse, "zeta(m) needs integer m");
                long m = cur().num;
                advance();
                expect(Tok::RPar, ")");
                auto r = tw_->root_of_unity((int)m);
                if (!r)
                    throw Error(ErrKind::ExtensionRequired,
                                "zeta(" + std::to_string(m) + ") is not in the field (conductor " +
                                    std::to_string(tw_->conductor()) + ")");
                return WPoly::constant(ring_, tw_, *r);
            }
            if (tw_->has_ext() && name == tw_->ext_gen_name())
                return WPoly::constant(ring_, tw_, tw_->u_gen());
            int v = ring_->index_of(name);
            if (v < 0) throw Error(ErrKind::Parse, "unknown variable '" + name + "'");
            return WPoly::variable(ring_, tw_, v);
        }
        throw Error(ErrKind::Parse, "unexpected token '" + cur().text + "'");
    }

    std::vector<Tok> t_;
    size_t pos_ = 0;
    WRingPtr ring_;
    TowerPtr tw_;
};

} // namespace

WPoly parse_wpoly(const std::string& text, const WRingPtr& ring, const TowerPtr& tw) {
    return Parser(tokenize(text), ring, tw).parse();
}

} // namespace dpa
