/*
 * Copyright 2026 The kummer-lcd Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "kummer_lcd/linear_algebra.hpp"

#include <stdexcept>

namespace kummer_lcd {

void Matrix::append_row(std::span<const Elem> r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw std::invalid_argument("append_row: column count mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

Matrix Matrix::transpose() const {
    Matrix T(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) T(j, i) = (*this)(i, j);
    return T;
}

namespace linalg {

Matrix multiply(const GaloisField& F, const Matrix& A, const Matrix& B) {
    if (A.cols() != B.rows()) throw std::invalid_argument("multiply: dimension mismatch");
    Matrix C(A.rows(), B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t l = 0; l < A.cols(); ++l) {
            Elem a = A(i, l);
            if (a.packed == 0) continue;
            for (std::size_t j = 0; j < B.cols(); ++j) C(i, j) = F.add(C(i, j), F.mul(a, B(l, j)));
        }
    return C;
}

Matrix rref(const GaloisField& F, Matrix M, std::vector<std::size_t>* pivots) {
    std::vector<std::size_t> piv;
    std::size_t lead_row = 0;
    for (std::size_t col = 0; col < M.cols() && lead_row < M.rows(); ++col) {
        std::size_t sel = lead_row;
        while (sel < M.rows() && M(sel, col).packed == 0) ++sel;
        if (sel == M.rows()) continue;
        if (sel != lead_row)
            for (std::size_t j = 0; j < M.cols(); ++j) std::swap(M(sel, j), M(lead_row, j));
        Elem inv = F.inv(M(lead_row, col));
        for (std::size_t j = col; j < M.cols(); ++j) M(lead_row, j) = F.mul(M(lead_row, j), inv);
        for (std::size_t i = 0; i < M.rows(); ++i) {
            if (i == lead_row) continue;
            Elem f = M(i, col);
            if (f.packed == 0) continue;
            for (std::size_t j = col; j < M.cols(); ++j) M(i, j) = F.sub(M(i, j), F.mul(f, M(lead_row, j)));
        }
        piv.push_back(col);
        ++lead_row;
    }
    Matrix out(lead_row, M.cols());
    for (std::size_t i = 0; i < lead_row; ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) out(i, j) = M(i, j);
    if (pivots) *pivots = std::move(piv);
    return out;
}

std::size_t rank(const GaloisField& F, const Matrix& M) { return rref(F, M).rows(); }

Matrix nullspace(const GaloisField& F, const Matrix& M) {
    std::vector<std::size_t> piv;
    Matrix R = rref(F, M, &piv);
    const std::size_t n = M.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : piv) is_pivot[c] = true;
    Matrix K(0, n);
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Elem> v(n, F.zero());
        v[free] = F.one();
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = F.neg(R(i, free));
        K.append_row(v);
    }
    return rref(F, K);
}

Matrix left_nullspace(const GaloisField& F, const Matrix& M) { return nullspace(F, M.transpose()); }

bool same_row_space(const GaloisField& F, const Matrix& A, const Matrix& B) {
    Matrix ra = rref(F, A), rb = rref(F, B);
    if (ra.rows() == 0 && rb.rows() == 0) return true;
    return ra == rb;
}

Matrix intersect_row_spaces(const GaloisField& F, const Matrix& A, const Matrix& B) {
    if (A.cols() != B.cols()) throw std::invalid_argument("intersect_row_spaces: column mismatch");
    Matrix ra = rref(F, A), rb = rref(F, B);
    Matrix stacked(0, A.cols());
    for (std::size_t i = 0; i < ra.rows(); ++i) stacked.append_row(ra.row(i));
    for (std::size_t i = 0; i < rb.rows(); ++i) stacked.append_row(rb.row(i));
    // u*ra = w*rb  <=>  (u, -w) in the left kernel of [ra; rb].
    Matrix K = left_nullspace(F, stacked);
    Matrix out(0, A.cols());
    for (std::size_t i = 0; i < K.rows(); ++i) {
        std::vector<Elem> v(A.cols(), F.zero());
        for (std::size_t l = 0; l < ra.rows(); ++l) {
            Elem c = K(i, l);
            if (c.packed == 0) continue;
            for (std::size_t j = 0; j < A.cols(); ++j) v[j] = F.add(v[j], F.mul(c, ra(l, j)));
        }
        out.append_row(v);
    }
    if (out.rows() == 0) return Matrix(0, A.cols());
    return rref(F, out);
}

bool in_row_space(const GaloisField& F, const Matrix& M, std::span<const Elem> v) {
    Matrix ext = M;
    if (ext.rows() == 0) ext = Matrix(0, v.size());
    ext.append_row(v);
    return rank(F, ext) == rank(F, M);
}

}  // namespace linalg
}  // namespace kummer_lcd
