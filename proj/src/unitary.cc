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

#include <algorithm>

#include "quditsim/circuit.h"
#include "quditsim/error.h"

namespace quditsim {

namespace {

// Embeds `gate` (acting on `targets`, in order) into the full space. The gate
// is first widened to gate (x) I over the permuted wire order
// [targets..., remaining wires ascending], then the permutation is undone by
// relabeling basis states.
DenseMatrix embed(const DenseMatrix &gate, const std::vector<size_t> &targets, const RadixProfile &profile) {
    size_t n = profile.num_digits();
    std::vector<size_t> order = targets;
    size_t rest_size = 1;
    for (size_t w = 0; w < n; w++) {
        if (std::find(targets.begin(), targets.end(), w) == targets.end()) {
            order.push_back(w);
            rest_size *= static_cast<size_t>(profile.dim(w));
        }
    }
    DenseMatrix widened = kron(gate, DenseMatrix::identity(rest_size));

    std::vector<int> permuted_dims;
    for (size_t w : order) {
        permuted_dims.push_back(profile.dim(w));
    }
    RadixProfile permuted(permuted_dims);

    size_t total = profile.size();
    std::vector<size_t> relabel(total);
    std::vector<int> permuted_digits(n);
    for (size_t i = 0; i < total; i++) {
        auto digits = profile.decode(i);
        for (size_t k = 0; k < n; k++) {
            permuted_digits[k] = digits[order[k]];
        }
        relabel[i] = permuted.encode(permuted_digits);
    }

    DenseMatrix out(total, total);
    for (size_t i = 0; i < total; i++) {
        for (size_t j = 0; j < total; j++) {
            out(i, j) = widened(relabel[i], relabel[j]);
        }
    }
    return out;
}

}  // namespace

DenseMatrix full_unitary(const Circuit &circuit, size_t max_dimension) {
    RadixProfile profile = circuit.profile();
    if (profile.size() > max_dimension) {
        throw Error(
            ErrorCode::Size, "full unitary of dimension " + std::to_string(profile.size()) + " exceeds cap " +
                                 std::to_string(max_dimension));
    }
    DenseMatrix acc = DenseMatrix::identity(profile.size());
    for (const auto &op : circuit.ops()) {
        const auto *g = std::get_if<GateOp>(&op);
        if (!g) {
            throw Error(ErrorCode::UnsupportedOp, "full unitary is undefined for circuits with measurements");
        }
        acc = embed(resolve(g->spec), op_wires(op), profile) * acc;
    }
    return acc;
}

}  // namespace quditsim
