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

#ifndef QUDITSIM_NUMERICS_H
#define QUDITSIM_NUMERICS_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace quditsim {

using Cplx = std::complex<double>;

/// Dense row-major complex matrix. Column vectors are matrices with one column.
class DenseMatrix {
   public:
    DenseMatrix(size_t rows, size_t cols);
    DenseMatrix(size_t rows, size_t cols, std::vector<Cplx> entries);
    /// Row-by-row literal, e.g. `DenseMatrix({{1, 0}, {0, -1}})`.
    DenseMatrix(std::initializer_list<std::initializer_list<Cplx>> rows);

    static DenseMatrix identity(size_t n);
    static DenseMatrix diagonal(std::span<const Cplx> diag);
    static DenseMatrix column(std::span<const Cplx> values);

    size_t rows() const noexcept {
        return rows_;
    }
    size_t cols() const noexcept {
        return cols_;
    }
    bool is_square() const noexcept {
        return rows_ == cols_;
    }

    Cplx &operator()(size_t r, size_t c) {
        return entries_[r * cols_ + c];
    }
    const Cplx &operator()(size_t r, size_t c) const {
        return entries_[r * cols_ + c];
    }

    std::span<const Cplx> entries() const noexcept {
        return entries_;
    }

    DenseMatrix adjoint() const;
    DenseMatrix transpose() const;

    DenseMatrix operator*(const DenseMatrix &rhs) const;
    DenseMatrix operator*(Cplx scalar) const;
    DenseMatrix operator+(const DenseMatrix &rhs) const;
    DenseMatrix operator-(const DenseMatrix &rhs) const;

    /// Largest entrywise absolute difference; shapes must agree.
    double max_abs_diff(const DenseMatrix &other) const;

   private:
    size_t rows_;
    size_t cols_;
    std::vector<Cplx> entries_;
};

bool approx_equal(const DenseMatrix &a, const DenseMatrix &b, double tol);

/// exp(2*pi*i*k/d), with k reduced modulo d first.
Cplx root_of_unity(int64_t d, int64_t k);

/// Left-associated Kronecker product of one or more factors.
DenseMatrix kron(std::span<const DenseMatrix> factors);
DenseMatrix kron(const DenseMatrix &a, const DenseMatrix &b);

/// True iff max |m^dagger m - I| <= tol. Throws Shape for non-square input.
bool is_unitary(const DenseMatrix &m, double tol);

/// Integer power by repeated multiplication; negative powers use the adjoint
/// (valid for unitary input only).
DenseMatrix matrix_power(const DenseMatrix &m, int power);

/// Per-position radices of a mixed-radix index space. Position 0 is the most
/// significant digit.
class RadixProfile {
   public:
    RadixProfile() = default;
    explicit RadixProfile(std::vector<int> dims);

    std::span<const int> dims() const noexcept {
        return dims_;
    }
    size_t num_digits() const noexcept {
        return dims_.size();
    }
    int dim(size_t position) const {
        return dims_.at(position);
    }
    /// Product of all radices (1 for an empty profile).
    size_t size() const noexcept {
        return size_;
    }
    /// Distance in the flat index between consecutive values of a digit.
    size_t stride(size_t position) const {
        return strides_.at(position);
    }

    std::vector<int> decode(size_t index) const;
    size_t encode(std::span<const int> digits) const;

    bool operator==(const RadixProfile &other) const {
        return dims_ == other.dims_;
    }

   private:
    std::vector<int> dims_;
    std::vector<size_t> strides_;
    size_t size_ = 1;
};

std::vector<int> mixed_radix_decode(size_t index, const RadixProfile &profile);
size_t mixed_radix_encode(std::span<const int> digits, const RadixProfile &profile);

}  // namespace quditsim

#endif
