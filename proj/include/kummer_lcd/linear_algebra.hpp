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

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kummer_lcd/finite_field.hpp"

namespace kummer_lcd {

/// Dense row-major matrix over a GaloisField (the field is passed to every
/// operation).
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0; }

    Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    Elem operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<Elem> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const Elem> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    void append_row(std::span<const Elem> r);
    Matrix transpose() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> data_;
};

namespace linalg {

Matrix multiply(const GaloisField& F, const Matrix& A, const Matrix& B);

/// Reduced row-echelon form with zero rows removed; `pivots` (optional)
/// receives the pivot column of each remaining row.
Matrix rref(const GaloisField& F, Matrix M, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const GaloisField& F, const Matrix& M);

/// Basis (as rows, in RREF) of { v : M v = 0 }.
Matrix nullspace(const GaloisField& F, const Matrix& M);

/// Basis (as rows) of { u : u M = 0 }.
Matrix left_nullspace(const GaloisField& F, const Matrix& M);

/// Row spaces compared through their reduced row-echelon forms.
bool same_row_space(const GaloisField& F, const Matrix& A, const Matrix& B);

/// Intersection of the row spaces of A and B (same column count), returned
/// in RREF. Computed from the left kernel of the stacked matrix [A; B].
Matrix intersect_row_spaces(const GaloisField& F, const Matrix& A, const Matrix& B);

/// v in rowspace(M)?
bool in_row_space(const GaloisField& F, const Matrix& M, std::span<const Elem> v);

}  // namespace linalg
}  // namespace kummer_lcd
