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

#include "dpa/kpoly.hpp"

namespace dpa {

/// Dense matrix of exact field elements.
class Matrix {
  public:
    Matrix() = default;
    Matrix(TowerPtr tw, int rows, int cols);
    static Matrix identity(const TowerPtr& tw, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const TowerPtr& tower() const { return tw_; }
    FE& at(int r, int c) { return e_[(size_t)r * cols_ + c]; }
    const FE& at(int r, int c) const { return e_[(size_t)r * cols_ + c]; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const FE& f) const;
    bool operator==(const Matrix& o) const;
    std::vector<FE> apply(const std::vector<FE>& v) const;

    /// Reduced row echelon form (in place copy); returns pivot columns.
    Matrix rref(std::vector<int>* pivot_cols = nullptr) const;
    int rank() const;
    /// Deterministic reduced kernel basis; M * v = 0 exactly for each v.
    std::vector<std::vector<FE>> kernel_basis() const;
    FE determinant() const;
    std::optional<Matrix> inverse() const;
    /// Characteristic polynomial det(xI - M).
    KPoly charpoly() const;

    std::size_t hash() const;
    std::string str() const;

  private:
    TowerPtr tw_;
    int rows_ = 0, cols_ = 0;
    std::vector<FE> e_;
};

struct EigenLine {
    FE value;
    std::vector<std::vector<FE>> space; // basis of the eigenspace
};

/// Exact eigen decomposition over the matrix's tower. Eigenvalues whose
/// factor does not split stay in `unsplit`; callers may extend and retry.
struct EigenResult {
    std::vector<EigenLine> lines;
    std::vector<KPoly> unsplit; // irreducible non-linear charpoly factors
};
EigenResult eigen_lines(const Matrix& m, int norm_degree_cap = 24);

/// Eigen decomposition for matrices of finite order up to scalar: M^k = c I.
/// Every eigenvalue is then a root of unity times a k-th root of c, so the
/// candidates are enumerated among the roots of unity of the (possibly
/// conductor-enlarged) tower. `unsplit` holds x^k - c when a k-th root of c
/// is outside every reachable cyclotomic field.
EigenResult eigen_lines_torsion(const Matrix& m, int order_bound = 512);

/// torsion route first, then the general splitting with one representative
/// eigenvalue per conjugate class (notes recorded in `folded`).
EigenResult eigen_lines_robust(const Matrix& m, std::vector<std::string>* folded = nullptr);

} // namespace dpa
