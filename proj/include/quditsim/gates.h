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

#ifndef QUDITSIM_GATES_H
#define QUDITSIM_GATES_H

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quditsim/numerics.h"

namespace quditsim {

enum class GateKind { X, Z, H, S, U8, CNOT, CZ, CUSTOM };

/// Canonical spelling used by the circuit file format and diagrams.
std::string_view gate_kind_name(GateKind kind);
std::optional<GateKind> parse_gate_kind(std::string_view name);
/// Number of wires the kind acts on (0 for CUSTOM, whose arity comes from dims).
size_t gate_kind_arity(GateKind kind);

bool is_prime(int n);

/// A gate kind at concrete per-wire dimensions.
struct GateSpec {
    GateKind kind = GateKind::X;
    std::vector<int> dims;
    int power = 1;
    std::optional<std::string> label;
    std::optional<DenseMatrix> custom_matrix;

    static GateSpec x(int d, int power = 1);
    static GateSpec z(int d, int power = 1);
    static GateSpec h(int d, int power = 1);
    static GateSpec s(int d, int power = 1);
    static GateSpec u8(int d, int power = 1);
    static GateSpec cnot(int d, int power = 1);
    static GateSpec cz(int d, int power = 1);
    /// Any single-kind gate at uniform dimension `d` over its natural arity.
    static GateSpec of(GateKind kind, int d, int power = 1);
    static GateSpec custom(DenseMatrix matrix, std::vector<int> dims, std::string label);

    size_t arity() const noexcept {
        return dims.size();
    }

    /// Throws if the spec breaks an arity, dimension or primality constraint.
    void validate() const;

    bool operator==(const GateSpec &other) const;
};

DenseMatrix x_matrix(int d);
DenseMatrix z_matrix(int d);
DenseMatrix h_matrix(int d);
DenseMatrix s_matrix(int d);
DenseMatrix cz_matrix(int d);
DenseMatrix cnot_matrix(int d);
DenseMatrix u8_matrix(int d);

/// Diagonal of the U8 gate as exponents of a primitive root of unity:
/// entry j is exp(2*pi*i * exponents[j] / root_order).
struct U8Phases {
    int root_order = 0;
    std::vector<int> exponents;
};

/// The exponent table behind `u8_matrix(d)`.
///
/// d = 2: the T gate, root order 8, exponents (0, 1).
/// d = 3: root order 9 with the qutrit solution (z, gamma, epsilon) = (1, 2, 0),
///        giving exponents (0, 6z + 2gamma + 3epsilon, 6z + gamma + 6epsilon) = (0, 1, 8).
/// prime d >= 5: root order d with (z, gamma, epsilon) = (0, 1, 0) in
///        v_k = 12^{-1} k (gamma + k (6z + (2k - 3) gamma)) + k epsilon   (mod d).
U8Phases u8_phases(int d);

/// Matrix for `spec`, raised to `spec.power`.
DenseMatrix resolve(const GateSpec &spec);

}  // namespace quditsim

#endif
