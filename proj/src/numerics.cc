// Copyright 2026 The quditsim Authors
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

#include "quditsim/numerics.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "quditsim/error.h"

namespace quditsim {

DenseMatrix::DenseMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {
    if (rows == 0 || cols == 0) {
        throw Error(ErrorCode::Shape, "matrix dimensions must be positive");
    }
}

DenseMatrix::DenseMatrix(size_t rows, size_t cols, std::vector<Cplx> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0) {
        throw Error(ErrorCode::Shape, "matrix dimensions must be positive");
    }
    if (entries_.size() != rows * cols) {
        throw Error(
            ErrorCode::Shape, "expected " + std::to_string(rows * cols) + " entries, got " +
                                  std::to_string(entries_.size()));
    }
    for (const auto &e : entries_) {
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) {
            throw Error(ErrorCode::Validation, "matrix entries must be finite");
        }
    }
}

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<Cplx>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    if (rows_ == 0 || cols_ == 0) {
        throw Error(ErrorCode::Shape, "matrix dimensions must be positive");
    }
    entries_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw Error(ErrorCode::Shape, "ragged matrix literal");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

DenseMatrix DenseMatrix::identity(size_t n) {
    DenseMatrix m(n, n);
    for (size_t k = 0; k < n; k++) {
        m(k, k) = 1.0;
    }
    return m;
}

DenseMatrix DenseMatrix::diagonal(std::span<const Cplx> diag) {
    DenseMatrix m(diag.size(), diag.size());
    for (size_t k = 0; k < diag.size(); k++) {
        m(k, k) = diag[k];
    }
    return m;
}

DenseMatrix DenseMatrix::column(std::span<const Cplx> values) {
    return DenseMatrix(values.size(), 1, std::vector<Cplx>(values.begin(), values.end()));
}

DenseMatrix DenseMatrix::adjoint() const {
    DenseMatrix out(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

DenseMatrix DenseMatrix::transpose() const {
    DenseMatrix out(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            out(c, r) = (*this)(r, c);
        }
    }
    return out;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix &rhs) const {
    if (cols_ != rhs.rows_) {
        throw Error(
            ErrorCode::Shape, "cannot multiply " + std::to_string(rows_) + "x" + std::to_string(cols_) + " by " +
                                  std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_));
    }
    DenseMatrix out(rows_, rhs.cols_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t k = 0; k < cols_; k++) {
            Cplx a = (*this)(r, k);
            if (a == Cplx{}) {
                continue;
            }
            for (size_t c = 0; c < rhs.cols_; c++) {
                out(r, c) += a * rhs(k, c);
            }
        }
    }
    return out;
}

DenseMatrix DenseMatrix::operator*(Cplx scalar) const {
    DenseMatrix out = *this;
    for (auto &e : out.entries_) {
        e *= scalar;
    }
    return out;
}

DenseMatrix DenseMatrix::operator+(const DenseMatrix &rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw Error(ErrorCode::Shape, "matrix sum needs equal shapes");
    }
    DenseMatrix out = *this;
    for (size_t k = 0; k < entries_.size(); k++) {
        out.entries_[k] += rhs.entries_[k];
    }
    return out;
}

DenseMatrix DenseMatrix::operator-(const DenseMatrix &rhs) const {
    return *this + rhs * Cplx{-1.0};
}

double DenseMatrix::max_abs_diff(const DenseMatrix &other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw Error(ErrorCode::Shape, "matrix comparison needs equal shapes");
    }
    double worst = 0;
    for (size_t k = 0; k < entries_.size(); k++) {
        worst = std::max(worst, std::abs(entries_[k] - other.entries_[k]));
    }
    return worst;
}

bool approx_equal(const DenseMatrix &a, const DenseMatrix &b, double tol) {
    return a.rows() == b.rows() && a.cols() == b.cols() && a.max_abs_diff(b) <= tol;
}

Cplx root_of_unity(int64_t d, int64_t k) {
    if (d < 1) {
        throw Error(ErrorCode::InvalidDimension, "root of unity needs d >= 1, got " + std::to_string(d));
    }
    int64_t r = k % d;
    if (r < 0) {
        r += d;
    }
    // Quarter turns are returned exactly so permutation/phase matrices stay exact.
    if ((4 * r) % d == 0) {
        switch ((4 * r) / d) {
            case 0:
                return {1.0, 0.0};
            case 1:
                return {0.0, 1.0};
            case 2:
                return {-1.0, 0.0};
            case 3:
                return {0.0, -1.0};
        }
    }
    double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(d);
    return {std::cos(angle), std::sin(angle)};
}

DenseMatrix kron(const DenseMatrix &a, const DenseMatrix &b) {
    DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t ar = 0; ar < a.rows(); ar++) {
        for (size_t ac = 0; ac < a.cols(); ac++) {
            Cplx f = a(ar, ac);
            if (f == Cplx{}) {
                continue;
            }
            for (size_t br = 0; br < b.rows(); br++) {
                for (size_t bc = 0; bc < b.cols(); bc++) {
                    out(ar * b.rows() + br, ac * b.cols() + bc) = f * b(br, bc);
                }
            }
        }
    }
    return out;
}

DenseMatrix kron(std::span<const DenseMatrix> factors) {
    if (factors.empty()) {
        throw Error(ErrorCode::Arity, "kron needs at least one factor");
    }
    DenseMatrix acc = factors.front();
    for (size_t k = 1; k < factors.size(); k++) {
        acc = kron(acc, factors[k]);
    }
    return acc;
}

bool is_unitary(const DenseMatrix &m, double tol) {
    if (!m.is_square()) {
        throw Error(
            ErrorCode::Shape,
            "unitarity needs a square matrix, got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
    return (m.adjoint() * m).max_abs_diff(DenseMatrix::identity(m.rows())) <= tol;
}

DenseMatrix matrix_power(const DenseMatrix &m, int power) {
    if (!m.is_square()) {
        throw Error(ErrorCode::Shape, "matrix power needs a square matrix");
    }
    DenseMatrix base = power < 0 ? m.adjoint() : m;
    int reps = power < 0 ? -power : power;
    DenseMatrix acc = DenseMatrix::identity(m.rows());
    for (int k = 0; k < reps; k++) {
        acc = acc * base;
    }
    return acc;
}

RadixProfile::RadixProfile(std::vector<int> dims) : dims_(std::move(dims)), strides_(dims_.size()) {
    for (int d : dims_) {
        if (d < 2) {
            throw Error(ErrorCode::InvalidDimension, "radix must be >= 2, got " + std::to_string(d));
        }
    }
    size_t acc = 1;
    for (size_t k = dims_.size(); k-- > 0;) {
        strides_[k] = acc;
        acc *= static_cast<size_t>(dims_[k]);
    }
    size_ = acc;
}

std::vector<int> RadixProfile::decode(size_t index) const {
    if (index >= size_) {
        throw Error(
            ErrorCode::Bounds, "index " + std::to_string(index) + " out of range for " + std::to_string(size_) +
                                   " basis states");
    }
    std::vector<int> digits(dims_.size());
    for (size_t k = dims_.size(); k-- > 0;) {
        digits[k] = static_cast<int>(index % static_cast<size_t>(dims_[k]));
        index /= static_cast<size_t>(dims_[k]);
    }
    return digits;
}

size_t RadixProfile::encode(std::span<const int> digits) const {
    if (digits.size() != dims_.size()) {
        throw Error(
            ErrorCode::Bounds, "expected " + std::to_string(dims_.size()) + " digits, got " +
                                   std::to_string(digits.size()));
    }
    size_t index = 0;
    for (size_t k = 0; k < digits.size(); k++) {
        if (digits[k] < 0 || digits[k] >= dims_[k]) {
            throw Error(
                ErrorCode::Bounds, "digit " + std::to_string(digits[k]) + " at position " + std::to_string(k) +
                                       " out of range for radix " + std::to_string(dims_[k]));
        }
        index += static_cast<size_t>(digits[k]) * strides_[k];
    }
    return index;
}

std::vector<int> mixed_radix_decode(size_t index, const RadixProfile &profile) {
    return profile.decode(index);
}

size_t mixed_radix_encode(std::span<const int> digits, const RadixProfile &profile) {
    return profile.encode(digits);
}

}  // namespace quditsim
