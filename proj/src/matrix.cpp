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
#include "dpa/matrix.hpp"

#include <sstream>

namespace dpa {

Matrix::Matrix(TowerPtr tw, int rows, int cols)
    : tw_(std::move(tw)), rows_(rows), cols_(cols), e_((size_t)rows * cols, tw_->zero()) {}

Matrix Matrix::identity(const TowerPtr& tw, int n) {
    Matrix m(tw, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = tw->one();
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw Error(ErrKind::Internal, "matrix shape mismatch");
    Matrix r(tw_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const FE& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const FE& b = o.at(k, j);
                if (b.is_zero()) continue;
                r.at(i, j) = r.at(i, j) + a * b;
            }
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    Matrix r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = r.e_[i] + o.e_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    Matrix r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = r.e_[i] - o.e_[i];
    return r;
}

Matrix Matrix::scaled(const FE& f) const {
    Matrix r = *this;
    for (auto& v : r.e_) v = v * f;
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < e_.size(); ++i)
        if (!(e_[i] == o.e_[i])) return false;
    return true;
}

std::vector<FE> Matrix::apply(const std::vector<FE>& v) const {
    if ((int)v.size() != cols_) throw Error(ErrKind::Internal, "vector size mismatch");
    std::vector<FE> r((size_t)rows_, tw_->zero());
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero() || v[(size_t)j].is_zero()) continue;
            r[(size_t)i] = r[(size_t)i] + at(i, j) * v[(size_t)j];
        }
    return r;
}

Matrix Matrix::rref(std::vector<int>* pivot_cols) const {
    Matrix m = *this;
    if (pivot_cols) pivot_cols->clear();
    int rank = 0;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        int piv = -1;
        for (int r = rank; r < rows_; ++r)
            if (!m.at(r, col).is_zero()) { piv = r; break; }
        if (piv < 0) continue;
        for (int j = 0; j < cols_; ++j) std::swap(m.at(rank, j), m.at(piv, j));
        FE inv = m.at(rank, col).inverse();
        for (int j = col; j < cols_; ++j) m.at(rank, j) = m.at(rank, j) * inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == rank || m.at(r, col).is_zero()) continue;
            FE f = m.at(r, col);
            for (int j = col; j < cols_; ++j)
                m.at(r, j) = m.at(r, j) - f * m.at(rank, j);
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++rank;
    }
    return m;
}

int Matrix::rank() const {
    std::vector<int> piv;
    rref(&piv);
    return (int)piv.size();
}

std::vector<std::vector<FE>> Matrix::kernel_basis() const {
    std::vector<int> piv;
    Matrix m = rref(&piv);
    std::vector<bool> is_pivot((size_t)cols_, false);
    for (int c : piv) is_pivot[(size_t)c] = true;
    std::vector<std::vector<FE>> basis;
    for (int col = 0; col < cols_; ++col) {
        if (is_pivot[(size_t)col]) continue;
        std::vector<FE> v((size_t)cols_, tw_->zero());
        v[(size_t)col] = tw_->one();
        for (size_t r = 0; r < piv.size(); ++r)
            v[(size_t)piv[r]] = -m.at((int)r, col);
        basis.push_back(std::move(v));
    }
    return basis;
}

FE Matrix::determinant() const {
    if (rows_ != cols_) throw Error(ErrKind::Internal, "determinant of non-square");
    Matrix m = *this;
    FE det = tw_->one();
    int n = rows_;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!m.at(r, col).is_zero()) { piv = r; break; }
        if (piv < 0) return tw_->zero();
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(m.at(col, j), m.at(piv, j));
            det = -det;
        }
        det = det * m.at(col, col);
        FE inv = m.at(col, col).inverse();
        for (int r = col + 1; r < n; ++r) {
            if (m.at(r, col).is_zero()) continue;
            FE f = m.at(r, col) * inv;
            for (int j = col; j < n; ++j) m.at(r, j) = m.at(r, j) - f * m.at(col, j);
        }
    }
    return det;
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) throw Error(ErrKind::Internal, "inverse of non-square");
    int n = rows_;
    Matrix aug(tw_, n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, n + i) = tw_->one();
    }
    std::vector<int> piv;
    Matrix r = aug.rref(&piv);
    if ((int)piv.size() != n || piv[(size_t)n - 1] != n - 1) return std::nullopt;
    Matrix inv(tw_, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = r.at(i, n + j);
    return inv;
}

KPoly Matrix::charpoly() const {
    if (rows_ != cols_) throw Error(ErrKind::Internal, "charpoly of non-square");
    // Faddeev-LeVerrier: exact in characteristic zero
    int n = rows_;
    std::vector<FE> c((size_t)n + 1, tw_->zero());
    c[(size_t)n] = tw_->one();
    Matrix M(tw_, n, n); // zero
    Matrix A = *this;
    for (int k = 1; k <= n; ++k) {
        if (k == 1) M = Matrix::identity(tw_, n);
        else {
            // M = A*M_prev + c_{n-k+1} * I
            Matrix AM = A * M;
            for (int i = 0; i < n; ++i) AM.at(i, i) = AM.at(i, i) + c[(size_t)(n - k + 1)];
            M = AM;
        }
        Matrix AM = A * M;
        FE tr = tw_->zero();
        for (int i = 0; i < n; ++i) tr = tr + AM.at(i, i);
        c[(size_t)(n - k)] = -(tr * tw_->from_rat(rat(1, k)));
    }
    return KPoly(tw_, c);
}

std::size_t Matrix::hash() const {
    std::size_t h = hash_combine((size_t)rows_, (size_t)cols_);
    for (const auto& v : e_) h = hash_combine(h, v.hash());
    return h;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << "[";
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << at(i, j).str();
        }
        os << "]\n";
    }
    return os.str();
}

EigenResult eigen_lines(const Matrix& m, int norm_degree_cap) {
    if (m.rows() != m.cols()) throw Error(ErrKind::Internal, "eigen of non-square");
    EigenResult out;
    KPoly cp = m.charpoly();
    KFactorization fac;
    try {
        fac = factor_k(cp, norm_degree_cap);
    } catch (const Error& e) {
        if (e.kind() != ErrKind::DegreeCap) throw;
        throw Error(ErrKind::ExtensionRequired,
                    "characteristic polynomial factorization exceeded degree cap: " + cp.str());
    }
    const TowerPtr& tw = m.tower();
    for (const auto& f : fac.factors) {
        if (f.poly.degree() > 1) {
            out.unsplit.push_back(f.poly);
            continue;
        }
        FE lambda = -f.poly.coeff(0);
        Matrix shifted = m;
        for (int i = 0; i < m.rows(); ++i)
            shifted.at(i, i) = shifted.at(i, i) - lambda;
        auto kb = shifted.kernel_basis();
        if (kb.empty()) throw Error(ErrKind::Internal, "eigenvalue with empty eigenspace");
        out.lines.push_back({lambda, std::move(kb)});
    }
    std::sort(out.lines.begin(), out.lines.end(),
              [](const EigenLine& a, const EigenLine& b) { return a.value < b.value; });
    return out;
}

EigenResult eigen_lines_torsion(const Matrix& m, int order_bound) {
    if (m.rows() != m.cols()) throw Error(ErrKind::Internal, "eigen of non-square");
    const TowerPtr& tw = m.tower();
    int n = m.rows();
    Matrix id = Matrix::identity(tw, n);
    // find k with M^k = c * id
    Matrix p = m;
    int k = 0;
    FE c;
    for (int j = 1; j <= order_bound; ++j) {
        bool scalar = true;
        FE d = p.at(0, 0);
        for (int r = 0; r < n && scalar; ++r)
            for (int cidx = 0; cidx < n && scalar; ++cidx) {
                if (r == cidx) {
                    if (!(p.at(r, cidx) == d)) scalar = false;
                } else if (!p.at(r, cidx).is_zero()) {
                    scalar = false;
                }
            }
        if (scalar && !d.is_zero()) {
            k = j;
            c = d;
            break;
        }
        p = p * m;
    }
    if (k == 0)
        throw Error(ErrKind::NotFiniteWithinBound, "matrix has no scalar power within bound");
    auto ord = c.torsion_order();
    if (!ord)
        throw Error(ErrKind::UnsupportedMapShape, "scalar power is not a root of unity");
    // eigenvalues are roots of x^k = c, all of multiplicative order dividing k * ord
    long full = (long)k * *ord;
    int m0 = tw->conductor();
    int m1 = Tower::enlarged_conductor(m0, (int)full);
    TowerPtr big = tw;
    if (m1 != m0) {
        TowerPtr cyc = Tower::cyclotomic(m1);
        big = tw->has_ext() ? join_towers(tw, cyc) : cyc;
    }
    Matrix M = m;
    if (!big->same_as(*tw)) {
        M = Matrix(big, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) M.at(i, j) = embed(m.at(i, j), big);
    }
    FE cb = embed(c, big);
    EigenResult out;
    auto zroot = big->root_of_unity((int)full);
    if (!zroot) {
        KPoly xk = KPoly::monomial(tw, k, tw->one()) - KPoly::constant(tw, c);
        out.unsplit.push_back(xk);
        return out;
    }
    int found_dim = 0;
    for (long j = 0; j < full; ++j) {
        FE mu = zroot->pow(j);
        if (!(mu.pow(k) == cb)) continue;
        Matrix shifted = M;
        for (int i = 0; i < n; ++i) shifted.at(i, i) = shifted.at(i, i) - mu;
        auto kb = shifted.kernel_basis();
        if (kb.empty()) continue;
        found_dim += (int)kb.size();
        out.lines.push_back({mu, std::move(kb)});
    }
    if (found_dim < n) {
        KPoly xk = KPoly::monomial(big, k, big->one()) - KPoly::constant(big, cb);
        out.unsplit.push_back(xk);
    }
    std::sort(out.lines.begin(), out.lines.end(),
              [](const EigenLine& a, const EigenLine& b) { return a.value < b.value; });
    return out;
}


EigenResult eigen_lines_robust(const Matrix& m, std::vector<std::string>* folded) {
    try {
        return eigen_lines_torsion(m);
    } catch (const Error& e) {
        if (e.kind() != ErrKind::UnsupportedMapShape && e.kind() != ErrKind::NotFiniteWithinBound)
            throw;
    }
    EigenResult ev = eigen_lines(m, 64);
    std::vector<KPoly> rest;
    for (const auto& f : ev.unsplit) {
        std::vector<std::string> obs;
        auto roots = roots_via_extension(f, &obs);
        if (roots.empty()) {
            rest.push_back(f);
            continue;
        }
        FE mu = roots[0];
        TowerPtr twe = join_towers(m.tower(), mu.tower());
        Matrix M2(twe, m.rows(), m.cols());
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) M2.at(i, j) = embed(m.at(i, j), twe);
        for (int i = 0; i < M2.rows(); ++i) M2.at(i, i) = M2.at(i, i) - embed(mu, twe);
        auto kb = M2.kernel_basis();
        if (!kb.empty()) ev.lines.push_back({mu, kb});
        if (folded) folded->push_back("conjugate eigensystems folded: " + f.str());
    }
    ev.unsplit = rest;
    return ev;
}

} // namespace dpa
