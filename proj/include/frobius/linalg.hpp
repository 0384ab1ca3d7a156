/*
 * Copyright 2026 The Frobius Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef FROBIUS_LINALG_HPP
#define FROBIUS_LINALG_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "frobius/field.hpp"

namespace frob {

/// Dense matrix over a fixed scalar field, row-major storage.
///
/// A morphism with m inputs and n outputs over a d-dimensional carrier is
/// stored as a d^n x d^m matrix; composition g after f is g.compose(f).
class Matrix {
  public:
    Matrix() : Matrix(0, 0, FieldDescriptor::rationals()) {}
    Matrix(int64_t rows, int64_t cols, const FieldDescriptor &F);

    static Matrix identity(int64_t n, const FieldDescriptor &F);
    static Matrix scalar(const FieldScalar &s); // 1x1

    int64_t rows() const { return rows_; }
    int64_t cols() const { return cols_; }
    const FieldDescriptor &field() const { return field_; }

    FieldScalar &at(int64_t r, int64_t c) { return data_[r * cols_ + c]; }
    const FieldScalar &at(int64_t r, int64_t c) const { return data_[r * cols_ + c]; }

    Matrix compose(const Matrix &inner) const; // *this after inner
    Matrix tensor(const Matrix &other) const;  // Kronecker product, *this is the left factor
    Matrix transpose() const;
    Matrix dagger() const; // conjugate transpose
    Matrix conjugate() const;
    Matrix scale(const FieldScalar &s) const;
    Matrix add(const Matrix &other) const;

    bool operator==(const Matrix &other) const;
    bool approx_equal(const Matrix &other, double tol) const;
    bool is_zero() const;

    /// Rank by fraction-free Gaussian elimination (exact fields only).
    int64_t rank() const;

    /// If other == c * this for a single nonzero scalar c, returns c.
    /// Returns 1 when both are zero; empty when no such scalar exists.
    std::optional<FieldScalar> scalar_multiple_of(const Matrix &other) const;

    std::string to_string() const;

  private:
    int64_t rows_, cols_;
    FieldDescriptor field_;
    std::vector<FieldScalar> data_;
};

/// Permutation matrix on d^2 swapping the two tensor factors.
Matrix swap_matrix(int64_t d, const FieldDescriptor &F);

} // namespace frob

#endif
