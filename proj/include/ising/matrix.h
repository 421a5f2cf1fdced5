// Copyright 2026 The ising-teleport Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ISING_MATRIX_H
#define ISING_MATRIX_H

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "ising/scalar.h"

namespace ising {

/// Small dense row-major matrix. Used for model data (F, R), gate blocks,
/// verification of operator identities and reduced density matrices.
/// State evolution never goes through this type.
template <Amplitude S>
class Matrix {
   public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, S(0)) {
    }
    Matrix(std::initializer_list<std::initializer_list<S>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto &row : rows) {
            if (row.size() != cols_) {
                throw std::invalid_argument("Matrix: ragged initializer");
            }
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(size_t dim) {
        Matrix m(dim, dim);
        for (size_t i = 0; i < dim; i++) {
            m(i, i) = S(1);
        }
        return m;
    }

    static Matrix diagonal(const std::vector<S> &entries) {
        Matrix m(entries.size(), entries.size());
        for (size_t i = 0; i < entries.size(); i++) {
            m(i, i) = entries[i];
        }
        return m;
    }

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    S &operator()(size_t r, size_t c) {
        return data_[r * cols_ + c];
    }
    const S &operator()(size_t r, size_t c) const {
        return data_[r * cols_ + c];
    }

    Matrix adjoint() const {
        Matrix m(cols_, rows_);
        for (size_t r = 0; r < rows_; r++) {
            for (size_t c = 0; c < cols_; c++) {
                m(c, r) = conj_of((*this)(r, c));
            }
        }
        return m;
    }

    Matrix scaled(const S &factor) const {
        Matrix m = *this;
        for (auto &x : m.data_) {
            x = x * factor;
        }
        return m;
    }

    friend Matrix operator*(const Matrix &a, const Matrix &b) {
        if (a.cols_ != b.rows_) {
            throw std::invalid_argument("Matrix: shape mismatch in product");
        }
        Matrix m(a.rows_, b.cols_);
        for (size_t r = 0; r < a.rows_; r++) {
            for (size_t k = 0; k < a.cols_; k++) {
                const S &x = a(r, k);
                if (is_exact_zero(x)) {
                    continue;
                }
                for (size_t c = 0; c < b.cols_; c++) {
                    if (!is_exact_zero(b(k, c))) {
                        m(r, c) += x * b(k, c);
                    }
                }
            }
        }
        return m;
    }

    friend Matrix operator+(Matrix a, const Matrix &b) {
        a.check_same_shape(b);
        for (size_t i = 0; i < a.data_.size(); i++) {
            a.data_[i] += b.data_[i];
        }
        return a;
    }

    friend Matrix operator-(Matrix a, const Matrix &b) {
        a.check_same_shape(b);
        for (size_t i = 0; i < a.data_.size(); i++) {
            a.data_[i] -= b.data_[i];
        }
        return a;
    }

    bool operator==(const Matrix &other) const = default;

    /// Max entrywise |a - b|.
    double max_abs_diff(const Matrix &other) const {
        check_same_shape(other);
        double worst = 0;
        for (size_t i = 0; i < data_.size(); i++) {
            worst = std::max(worst, std::abs(to_complex(data_[i]) - to_complex(other.data_[i])));
        }
        return worst;
    }

    Matrix<Complex> to_float() const {
        Matrix<Complex> m(rows_, cols_);
        for (size_t r = 0; r < rows_; r++) {
            for (size_t c = 0; c < cols_; c++) {
                m(r, c) = to_complex((*this)(r, c));
            }
        }
        return m;
    }

    S trace() const {
        S total(0);
        for (size_t i = 0; i < std::min(rows_, cols_); i++) {
            total += (*this)(i, i);
        }
        return total;
    }

    const std::vector<S> &data() const {
        return data_;
    }

   private:
    void check_same_shape(const Matrix &other) const {
        if (rows_ != other.rows_ || cols_ != other.cols_) {
            throw std::invalid_argument("Matrix: shape mismatch");
        }
    }

    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<S> data_;
};

template <Amplitude S>
Matrix<S> kron(const Matrix<S> &a, const Matrix<S> &b) {
    Matrix<S> m(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t ra = 0; ra < a.rows(); ra++) {
        for (size_t ca = 0; ca < a.cols(); ca++) {
            if (is_exact_zero(a(ra, ca))) {
                continue;
            }
            for (size_t rb = 0; rb < b.rows(); rb++) {
                for (size_t cb = 0; cb < b.cols(); cb++) {
                    m(ra * b.rows() + rb, ca * b.cols() + cb) = a(ra, ca) * b(rb, cb);
                }
            }
        }
    }
    return m;
}

using ExactMatrix = Matrix<CycScalar>;
using FloatMatrix = Matrix<Complex>;

}  // namespace ising

#endif
