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

#include "frobius/linalg.hpp"

#include <sstream>

namespace frob {

Matrix::Matrix(int64_t rows, int64_t cols, const FieldDescriptor &F)
    : rows_(rows), cols_(cols), field_(F), data_(rows * cols, FieldScalar::zero(F)) {
    if (rows < 0 || cols < 0) throw domain_error("negative matrix dimension");
}

Matrix Matrix::identity(int64_t n, const FieldDescriptor &F) {
    Matrix m(n, n, F);
    for (int64_t i = 0; i < n; ++i) m.at(i, i) = FieldScalar::one(F);
    return m;
}

Matrix Matrix::scalar(const FieldScalar &s) {
    Matrix m(1, 1, s.descriptor());
    m.at(0, 0) = s;
    return m;
}

Matrix Matrix::compose(const Matrix &inner) const {
    if (cols_ != inner.rows_)
        throw domain_error("composition shape mismatch: " + std::to_string(cols_) + " vs " +
                           std::to_string(inner.rows_));
    Matrix r(rows_, inner.cols_, field_);
    for (int64_t i = 0; i < rows_; ++i)
        for (int64_t k = 0; k < cols_; ++k) {
            const FieldScalar &a = at(i, k);
            if (a.is_zero()) continue;
            for (int64_t j = 0; j < inner.cols_; ++j) {
                const FieldScalar &b = inner.at(k, j);
                if (b.is_zero()) continue;
                r.at(i, j) = r.at(i, j) + a * b;
            }
        }
    return r;
}

Matrix Matrix::tensor(const Matrix &other) const {
    Matrix r(rows_ * other.rows_, cols_ * other.cols_, field_);
    for (int64_t i = 0; i < rows_; ++i)
        for (int64_t j = 0; j < cols_; ++j) {
            const FieldScalar &a = at(i, j);
            if (a.is_zero()) continue;
            for (int64_t k = 0; k < other.rows_; ++k)
                for (int64_t l = 0; l < other.cols_; ++l)
                    r.at(i * other.rows_ + k, j * other.cols_ + l) = a * other.at(k, l);
        }
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_, field_);
    for (int64_t i = 0; i < rows_; ++i)
        for (int64_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Matrix Matrix::conjugate() const {
    Matrix r = *this;
    for (auto &s : r.data_) s = s.conjugate();
    return r;
}

Matrix Matrix::dagger() const { return transpose().conjugate(); }

Matrix Matrix::scale(const FieldScalar &s) const {
    Matrix r = *this;
    for (auto &x : r.data_) x = x * s;
    return r;
}

Matrix Matrix::add(const Matrix &other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw domain_error("addition shape mismatch");
    Matrix r = *this;
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = r.data_[i] + other.data_[i];
    return r;
}

bool Matrix::operator==(const Matrix &other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && field_ == other.field_ && data_ == other.data_;
}

bool Matrix::approx_equal(const Matrix &other, double tol) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) return false;
    for (size_t i = 0; i < data_.size(); ++i)
        if (std::abs(data_[i].to_complex() - other.data_[i].to_complex()) > tol) return false;
    return true;
}

bool Matrix::is_zero() const {
    for (const auto &s : data_)
        if (!s.is_zero()) return false;
    return true;
}

int64_t Matrix::rank() const {
    if (!field_.exact()) throw domain_error("rank requires an exact field");
    Matrix w = *this;
    int64_t rank = 0;
    int64_t row = 0;
    for (int64_t col = 0; col < cols_ && row < rows_; ++col) {
        int64_t pivot = -1;
        for (int64_t r = row; r < rows_; ++r)
            if (!w.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int64_t c = 0; c < cols_; ++c) std::swap(w.at(pivot, c), w.at(row, c));
        FieldScalar inv = w.at(row, col).inverse();
        for (int64_t c = col; c < cols_; ++c) w.at(row, c) = w.at(row, c) * inv;
        for (int64_t r = 0; r < rows_; ++r) {
            if (r == row || w.at(r, col).is_zero()) continue;
            FieldScalar f = w.at(r, col);
            for (int64_t c = col; c < cols_; ++c) w.at(r, c) = w.at(r, c) - f * w.at(row, c);
        }
        ++row;
        ++rank;
    }
    return rank;
}

std::optional<FieldScalar> Matrix::scalar_multiple_of(const Matrix &other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_ || !(field_ == other.field_)) return std::nullopt;
    std::optional<FieldScalar> c;
    for (size_t i = 0; i < data_.size(); ++i) {
        bool az = data_[i].is_zero(), bz = other.data_[i].is_zero();
        if (az != bz) return std::nullopt;
        if (az) continue;
        FieldScalar ratio = other.data_[i] / data_[i];
        if (!c) c = ratio;
        else if (!(*c == ratio)) return std::nullopt;
    }
    if (!c) return FieldScalar::one(field_); // both zero matrices
    return c;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    for (int64_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ") << "[";
        for (int64_t j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << at(i, j).to_string();
        }
        os << "]" << (i + 1 == rows_ ? "]" : ",\n");
    }
    if (rows_ == 0) os << "[]";
    return os.str();
}

Matrix swap_matrix(int64_t d, const FieldDescriptor &F) {
    Matrix m(d * d, d * d, F);
    for (int64_t i = 0; i < d; ++i)
        for (int64_t j = 0; j < d; ++j) m.at(j * d + i, i * d + j) = FieldScalar::one(F);
    return m;
}

} // namespace frob
