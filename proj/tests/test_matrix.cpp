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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dpa/matrix.hpp"

using namespace dpa;

TEST_CASE("kernel basics") {
    auto Q = Tower::rationals();
    SUBCASE("identity has empty kernel") {
        CHECK(Matrix::identity(Q, 3).kernel_basis().empty());
    }
    SUBCASE("zero 2x2 has 2-dim kernel") {
        Matrix z(Q, 2, 2);
        CHECK(z.kernel_basis().size() == 2);
    }
    SUBCASE("singular cyclotomic matrix") {
        auto K3 = Tower::cyclotomic(3);
        Matrix m(K3, 2, 2);
        m.at(0, 0) = K3->one();
        m.at(0, 1) = K3->zeta();
        m.at(1, 0) = K3->zeta_power(2);
        m.at(1, 1) = K3->one();
        // det = 1 - zeta^3 = 0
        CHECK(m.determinant().is_zero());
        auto kb = m.kernel_basis();
        REQUIRE(kb.size() == 1);
        auto img = m.apply(kb[0]);
        for (auto& v : img) CHECK(v.is_zero());
    }
}

TEST_CASE("rank invariant under row permutation") {
    auto Q = Tower::rationals();
    Matrix m(Q, 3, 3);
    int vals[3][3] = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = Q->from_rat(vals[i][j]);
    Matrix p(Q, 3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) p.at(i, j) = Q->from_rat(vals[(i + 1) % 3][j]);
    CHECK(m.rank() == 2);
    CHECK(p.rank() == 2);
    CHECK(m.rank() + (int)m.kernel_basis().size() == 3);
}

TEST_CASE("charpoly and determinant agree") {
    auto Q = Tower::rationals();
    Matrix m(Q, 3, 3);
    int vals[3][3] = {{2, 1, 0}, {0, 3, 1}, {1, 0, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = Q->from_rat(vals[i][j]);
    KPoly cp = m.charpoly();
    // det = (-1)^n * cp(0)
    FE c0 = cp.coeff(0);
    CHECK(-c0 == m.determinant());
    auto inv = m.inverse();
    REQUIRE(inv.has_value());
    CHECK((*inv) * m == Matrix::identity(Q, 3));
}

TEST_CASE("eigen lines") {
    auto Q = Tower::rationals();
    SUBCASE("diag(1,-1)") {
        Matrix m(Q, 2, 2);
        m.at(0, 0) = Q->one();
        m.at(1, 1) = Q->from_rat(-1);
        auto e = eigen_lines(m);
        REQUIRE(e.lines.size() == 2);
        CHECK(e.unsplit.empty());
        CHECK(e.lines[0].value == Q->from_rat(-1));
        CHECK(e.lines[1].value == Q->one());
    }
    SUBCASE("swap matrix") {
        Matrix m(Q, 2, 2);
        m.at(0, 1) = Q->one();
        m.at(1, 0) = Q->one();
        auto e = eigen_lines(m);
        REQUIRE(e.lines.size() == 2);
        for (const auto& l : e.lines) {
            REQUIRE(l.space.size() == 1);
            auto img = m.apply(l.space[0]);
            for (size_t i = 0; i < img.size(); ++i)
                CHECK(img[i] == l.value * l.space[0][i]);
        }
    }
    SUBCASE("companion of x^2+x+1 over Q(zeta_3) splits") {
        auto K3 = Tower::cyclotomic(3);
        Matrix m(K3, 2, 2);
        m.at(0, 1) = K3->from_rat(-1);
        m.at(1, 0) = K3->one();
        m.at(1, 1) = K3->from_rat(-1);
        auto e = eigen_lines(m);
        REQUIRE(e.lines.size() == 2);
        CHECK(e.unsplit.empty());
        bool saw1 = false, saw2 = false;
        for (const auto& l : e.lines) {
            if (l.value == K3->zeta()) saw1 = true;
            if (l.value == K3->zeta_power(2)) saw2 = true;
        }
        CHECK(saw1);
        CHECK(saw2);
    }
    SUBCASE("rotation matrix over Q reports unsplit factor") {
        Matrix m(Q, 2, 2);
        m.at(0, 1) = Q->from_rat(-1);
        m.at(1, 0) = Q->one();
        auto e = eigen_lines(m);
        CHECK(e.lines.empty());
        REQUIRE(e.unsplit.size() == 1);
        CHECK(e.unsplit[0].degree() == 2);
    }
    SUBCASE("eigenvalue count equals split degree") {
        auto K3 = Tower::cyclotomic(3);
        Matrix m(K3, 3, 3);
        m.at(0, 0) = K3->zeta();
        m.at(1, 1) = K3->zeta();
        m.at(2, 2) = K3->from_rat(5);
        auto e = eigen_lines(m);
        int total = 0;
        for (const auto& l : e.lines) total += (int)l.space.size();
        CHECK(total == 3);
    }
}
