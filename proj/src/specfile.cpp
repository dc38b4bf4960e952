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
#include "dpa/specfile.hpp"

#include <algorithm>
#include <sstream>

namespace dpa {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

std::vector<std::string> words(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

Rat parse_value(const std::string& s) { return parse_rat(s); }

} // namespace

SurfaceSpec parse_spec(const std::string& text) {
    SurfaceSpec spec;
    std::istringstream is(text);
    std::string raw;
    int lineno = 0;
    bool version_seen = false;
    while (std::getline(is, raw)) {
        ++lineno;
        std::string line = raw;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw Error(ErrKind::Parse,
                        "line " + std::to_string(lineno) + ": expected 'key: value'");
        std::string key = trim(line.substr(0, colon));
        std::string value = trim(line.substr(colon + 1));
        auto keyw = words(key);
        if (keyw.empty()) throw Error(ErrKind::Parse, "line " + std::to_string(lineno));
        const std::string& head = keyw[0];
        if (head == "spec_version") {
            if (value != "1")
                throw Error(ErrKind::Parse, "unsupported spec_version " + value);
            version_seen = true;
        } else if (head == "label") {
            spec.label = value;
        } else if (head == "kind") {
            spec.kind_str = value;
        } else if (head == "conductor") {
            spec.conductor = std::stoi(value);
        } else if (head == "variables") {
            spec.variables = words(value);
        } else if (head == "equation") {
            if (spec.equations.empty()) spec.equations.push_back(value);
            else spec.equations.insert(spec.equations.begin(), value);
        } else if (head == "equation2") {
            spec.equations.push_back(value);
        } else if (head == "degree") {
            spec.lookup_degree = std::stoi(value);
        } else if (head == "group_order") {
            spec.group_order = std::stoi(value);
        } else if (head == "group_label") {
            spec.group_label = value;
        } else if (head == "generator") {
            if (keyw.size() != 2)
                throw Error(ErrKind::Parse, "generator needs a name (line " +
                                                std::to_string(lineno) + ")");
            spec.generators.push_back({keyw[1], split(value, ';')});
        } else if (head == "factor1" || head == "factor2") {
            if (keyw.size() != 2)
                throw Error(ErrKind::Parse, "factor generator needs a name");
            auto& dst = head == "factor1" ? spec.factor1 : spec.factor2;
            dst.push_back({keyw[1], split(value, ';')});
        } else if (head == "subgroup") {
            if (keyw.size() != 2)
                throw Error(ErrKind::Parse, "subgroup needs a name");
            spec.subgroups.push_back({keyw[1], words(value)});
        } else if (head == "hypothesis") {
            if (keyw.size() == 2 && keyw[1] == "picard_generated_by_K") {
                spec.hyp.picard_generated_by_K = value.substr(0, 4) == "true";
                size_t src = value.find("source=");
                if (src != std::string::npos) spec.hyp.attestation = value.substr(src + 7);
            } else {
                throw Error(ErrKind::Parse, "unknown hypothesis " + key);
            }
        } else if (head == "expect") {
            SpecExpectation e;
            // forms:
            //   expect lct <group_ref>: <value> [anchor <text>]
            //   expect lct <group_ref>: [<lo>, <hi>] [anchor <text>]
            //   expect invariant-count <group_ref> n=<n>: <count> [anchor <text>]
            if (keyw.size() < 3) throw Error(ErrKind::Parse, "malformed expectation");
            std::string what = keyw[1];
            e.group_ref = keyw[2];
            std::string rest = value;
            size_t an = rest.find("anchor ");
            if (an != std::string::npos) {
                e.anchor = trim(rest.substr(an + 7));
                rest = trim(rest.substr(0, an));
            }
            if (what == "lct") {
                e.kind = SpecExpectation::Kind::Lct;
                if (!rest.empty() && rest[0] == '[') {
                    e.interval = true;
                    auto parts = split(rest.substr(1, rest.size() - 2), ',');
                    if (parts.size() != 2) throw Error(ErrKind::Parse, "bad interval");
                    e.lo = parse_value(parts[0]);
                    e.hi = parse_value(parts[1]);
                } else {
                    e.lo = e.hi = parse_value(rest);
                }
            } else if (what == "invariant-count") {
                e.kind = SpecExpectation::Kind::InvariantCount;
                if (keyw.size() < 4 || keyw[3].substr(0, 2) != "n=")
                    throw Error(ErrKind::Parse, "invariant-count needs n=<level>");
                e.level = std::stoi(keyw[3].substr(2));
                e.count = std::stoi(rest);
            } else {
                throw Error(ErrKind::Parse, "unknown expectation kind " + what);
            }
            spec.expectations.push_back(std::move(e));
        } else {
            throw Error(ErrKind::Parse,
                        "unknown key '" + head + "' (line " + std::to_string(lineno) + ")");
        }
    }
    if (!version_seen) throw Error(ErrKind::Parse, "missing spec_version");
    if (spec.kind_str.empty()) throw Error(ErrKind::Parse, "missing kind");
    return spec;
}

std::string serialize_spec(const SurfaceSpec& spec) {
    std::ostringstream os;
    os << "spec_version: 1\n";
    if (!spec.label.empty()) os << "label: " << spec.label << "\n";
    os << "kind: " << spec.kind_str << "\n";
    if (spec.conductor != 1) os << "conductor: " << spec.conductor << "\n";
    if (!spec.variables.empty()) {
        os << "variables:";
        for (const auto& v : spec.variables) os << " " << v;
        os << "\n";
    }
    if (!spec.equations.empty()) os << "equation: " << spec.equations[0] << "\n";
    if (spec.equations.size() > 1) os << "equation2: " << spec.equations[1] << "\n";
    if (spec.lookup_degree) os << "degree: " << spec.lookup_degree << "\n";
    if (spec.group_order != 1) os << "group_order: " << spec.group_order << "\n";
    if (!spec.group_label.empty()) os << "group_label: " << spec.group_label << "\n";
    for (const auto& [name, imgs] : spec.generators) {
        os << "generator " << name << ": ";
        for (size_t i = 0; i < imgs.size(); ++i) os << (i ? " ; " : "") << imgs[i];
        os << "\n";
    }
    for (const auto& [name, imgs] : spec.factor1) {
        os << "factor1 " << name << ": " << imgs[0] << " ; " << imgs[1] << "\n";
    }
    for (const auto& [name, imgs] : spec.factor2) {
        os << "factor2 " << name << ": " << imgs[0] << " ; " << imgs[1] << "\n";
    }
    for (const auto& [name, gens] : spec.subgroups) {
        os << "subgroup " << name << ":";
        for (const auto& g : gens) os << " " << g;
        os << "\n";
    }
    if (spec.hyp.picard_generated_by_K) {
        os << "hypothesis picard_generated_by_K: true";
        if (!spec.hyp.attestation.empty()) os << " source=" << spec.hyp.attestation;
        os << "\n";
    }
    for (const auto& e : spec.expectations) {
        os << "expect ";
        if (e.kind == SpecExpectation::Kind::Lct) {
            os << "lct " << e.group_ref << ": ";
            if (e.interval)
                os << "[" << e.lo.get_str() << ", " << e.hi.get_str() << "]";
            else os << e.lo.get_str();
        } else {
            os << "invariant-count " << e.group_ref << " n=" << e.level << ": " << e.count;
        }
        if (!e.anchor.empty()) os << " anchor " << e.anchor;
        os << "\n";
    }
    return os.str();
}

Surface build_surface(const SurfaceSpec& spec, bool check_smooth) {
    TowerPtr tw = Tower::cyclotomic(spec.conductor);
    Surface X = Surface::p2(tw);
    if (spec.kind_str == "p2") {
        X = Surface::p2(tw);
    } else if (spec.kind_str == "p1xp1") {
        X = Surface::p1xp1(tw);
    } else if (spec.kind_str == "blowup-p2") {
        return Surface::lookup(spec.lookup_degree);
    } else {
        if (spec.variables.empty() || spec.equations.empty())
            throw Error(ErrKind::Parse, "equation kinds need variables and an equation");
        std::vector<int> weights;
        if (spec.kind_str == "sextic-wp1123") weights = {1, 1, 2, 3};
        else if (spec.kind_str == "quartic-wp1112") weights = {1, 1, 1, 2};
        else if (spec.kind_str == "cubic-p3") weights = {1, 1, 1, 1};
        else if (spec.kind_str == "quadric-pair-p4") weights = {1, 1, 1, 1, 1};
        else throw Error(ErrKind::Parse, "unknown kind " + spec.kind_str);
        if (spec.variables.size() != weights.size())
            throw Error(ErrKind::Parse, "variable count mismatch for kind " + spec.kind_str);
        auto ring = make_ring(spec.variables, weights);
        std::vector<WPoly> eqs;
        for (const auto& t : spec.equations) eqs.push_back(parse_wpoly(t, ring, tw));
        if (spec.kind_str == "sextic-wp1123") X = Surface::sextic_cone(eqs[0]);
        else if (spec.kind_str == "quartic-wp1112") X = Surface::quartic_double_plane(eqs[0]);
        else if (spec.kind_str == "cubic-p3") X = Surface::cubic(eqs[0]);
        else {
            if (eqs.size() != 2) throw Error(ErrKind::Parse, "quadric pair needs two equations");
            X = Surface::quadric_pair(eqs[0], eqs[1]);
        }
    }
    if (check_smooth && !X.equations().empty()) {
        auto rep = X.is_smooth();
        if (!rep.decided)
            throw Error(ErrKind::Undecided, "smoothness undecided: " + rep.obstruction);
        if (!rep.smooth)
            throw Error(ErrKind::Parse,
                        "surface is singular" +
                            (rep.witness ? " at " + rep.witness->str() : rep.obstruction));
    }
    return X;
}

FiniteGroup build_group(const SurfaceSpec& spec, const Surface& X, const std::string& group_ref) {
    std::vector<std::string> wanted;
    if (group_ref == "full") {
        for (const auto& [name, imgs] : spec.generators) wanted.push_back(name);
    } else {
        bool found = false;
        for (const auto& [name, gens] : spec.subgroups)
            if (name == group_ref) {
                wanted = gens;
                found = true;
            }
        if (!found) throw Error(ErrKind::Parse, "unknown subgroup '" + group_ref + "'");
    }
    std::vector<PAut> gens;
    for (const auto& want : wanted) {
        bool found = false;
        for (const auto& [name, imgs] : spec.generators) {
            if (name != want) continue;
            PAut g;
            if (imgs.size() != X.ring()->vars.size())
                throw Error(ErrKind::Parse, "generator " + name + " image count mismatch");
            for (const auto& im : imgs) g.images.push_back(parse_wpoly(im, X.ring(), X.tower()));
            gens.push_back(std::move(g));
            found = true;
        }
        if (!found) throw Error(ErrKind::Parse, "unknown generator '" + want + "'");
    }
    return FiniteGroup::closure(X, gens);
}

std::vector<Matrix> build_factor(const SurfaceSpec& spec, const TowerPtr& tw, int which) {
    const auto& src = which == 1 ? spec.factor1 : spec.factor2;
    auto ring = make_ring({"x0", "x1"}, {1, 1});
    std::vector<Matrix> out;
    for (const auto& [name, imgs] : src) {
        if (imgs.size() != 2)
            throw Error(ErrKind::Parse, "factor generator " + name + " needs two images");
        Matrix m(tw, 2, 2);
        for (int r = 0; r < 2; ++r) {
            WPoly p = parse_wpoly(imgs[(size_t)r], ring, tw);
            Expo e0 = {1, 0}, e1 = {0, 1};
            m.at(r, 0) = p.coeff(e0);
            m.at(r, 1) = p.coeff(e1);
        }
        out.push_back(std::move(m));
    }
    return out;
}

ClassifyOptions build_options(const SurfaceSpec& spec, const Surface& X) {
    ClassifyOptions opt;
    opt.hyp = spec.hyp;
    opt.lookup_group_order = spec.group_order;
    opt.lookup_group_label = spec.group_label;
    if (X.kind() == SurfaceKind::P1xP1 && (!spec.factor1.empty() || !spec.factor2.empty())) {
        opt.product = true;
        opt.factor1 = build_factor(spec, X.tower(), 1);
        opt.factor2 = build_factor(spec, X.tower(), 2);
    }
    return opt;
}

} // namespace dpa
