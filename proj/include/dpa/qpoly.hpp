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
#pragma once

#include <optional>
#include <vector>

#include "dpa/rational.hpp"

namespace dpa {

/// Dense univariate polynomial over Q. coeffs[i] is the x^i coefficient;
/// the top coefficient is always nonzero (zero polynomial = empty vector).
class QPoly {
  public:
    QPoly() = default;
    explicit QPoly(std::vector<Rat> c) : c_(std::move(c)) { trim(); }
    static QPoly constant(const Rat& r);
    static QPoly x();
    static QPoly monomial(int deg, const Rat& c);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return (int)c_.size() - 1; } // -1 for zero
    const Rat& operator[](int i) const;
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& lc() const { return c_.back(); }

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator-() const;
    QPoly scaled(const Rat& r) const;
    bool operator==(const QPoly& o) const { return c_ == o.c_; }

    QPoly derivative() const;
    Rat eval(const Rat& x) const;
    QPoly monic() const;
    /// Euclidean division; returns {quotient, remainder}.
    static std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
    static QPoly gcd(QPoly a, QPoly b); // monic gcd
    /// g = gcd, plus s,t with s*a + t*b = g.
    static void xgcd(const QPoly& a, const QPoly& b, QPoly& g, QPoly& s, QPoly& t);

    /// Substitute x -> x + shift.
    QPoly shifted(const Rat& shift) const;
    /// Substitute x -> r*x.
    QPoly stretched(const Rat& r) const;

    std::string str(const std::string& var = "x") const;

  private:
    void trim();
    std::vector<Rat> c_;
};

/// One factor with multiplicity.
struct QFactor {
    QPoly poly;
    int multiplicity = 1;
};

/// Squarefree decomposition (Yun). Product of poly^multiplicity equals
/// input up to the returned unit.
struct QSquarefree {
    Rat unit;
    std::vector<QFactor> parts;
};
QSquarefree squarefree_decomposition(const QPoly& f);

/// Full irreducible factorization over Q (Zassenhaus: Berlekamp mod p,
/// Hensel lifting, subset recombination). Throws DegreeCap above the cap.
struct QFactorization {
    Rat unit;
    std::vector<QFactor> factors; // irreducible, monic
};
QFactorization factor_q(const QPoly& f, int degree_cap = 24);

/// Rational roots of f (exact).
std::vector<Rat> rational_roots(const QPoly& f);

/// Resultant of two rational polynomials (subresultant PRS).
Rat resultant_q(const QPoly& a, const QPoly& b);

/// m-th cyclotomic polynomial (cached).
const QPoly& cyclotomic_polynomial(int m);

int euler_phi(int m);

} // namespace dpa
