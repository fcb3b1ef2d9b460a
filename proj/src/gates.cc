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

#include "quditsim/gates.h"

#include <cmath>
#include <numbers>

#include "quditsim/error.h"

namespace quditsim {

namespace {

void require_dimension(int d) {
    if (d < 2) {
        throw Error(ErrorCode::InvalidDimension, "qudit dimension must be >= 2, got " + std::to_string(d));
    }
}

int64_t mod(int64_t a, int64_t m) {
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}

int64_t inverse_mod(int64_t a, int64_t p) {
    // Fermat: a^(p-2) mod p for prime p.
    int64_t result = 1;
    int64_t base = mod(a, p);
    for (int64_t e = p - 2; e > 0; e >>= 1) {
        if (e & 1) {
            result = result * base % p;
        }
        base = base * base % p;
    }
    return result;
}

}  // namespace

std::string_view gate_kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::X:
            return "X";
        case GateKind::Z:
            return "Z";
        case GateKind::H:
            return "H";
        case GateKind::S:
            return "S";
        case GateKind::U8:
            return "U8";
        case GateKind::CNOT:
            return "CNOT";
        case GateKind::CZ:
            return "CZ";
        case GateKind::CUSTOM:
            return "CUSTOM";
    }
    return "?";
}

std::optional<GateKind> parse_gate_kind(std::string_view name) {
    for (GateKind k : {GateKind::X, GateKind::Z, GateKind::H, GateKind::S, GateKind::U8, GateKind::CNOT,
                       GateKind::CZ}) {
        if (gate_kind_name(k) == name) {
            return k;
        }
    }
    return std::nullopt;
}

size_t gate_kind_arity(GateKind kind) {
    switch (kind) {
        case GateKind::CNOT:
        case GateKind::CZ:
            return 2;
        case GateKind::CUSTOM:
            return 0;
        default:
            return 1;
    }
}

bool is_prime(int n) {
    if (n < 2) {
        return false;
    }
    for (int k = 2; k * k <= n; k++) {
        if (n % k == 0) {
            return false;
        }
    }
    return true;
}

GateSpec GateSpec::of(GateKind kind, int d, int power) {
    if (kind == GateKind::CUSTOM) {
        throw Error(ErrorCode::InvalidArgument, "custom gates need an explicit matrix");
    }
    GateSpec spec;
    spec.kind = kind;
    spec.dims.assign(gate_kind_arity(kind), d);
    spec.power = power;
    spec.validate();
    return spec;
}

GateSpec GateSpec::x(int d, int power) {
    return of(GateKind::X, d, power);
}
GateSpec GateSpec::z(int d, int power) {
    return of(GateKind::Z, d, power);
}
GateSpec GateSpec::h(int d, int power) {
    return of(GateKind::H, d, power);
}
GateSpec GateSpec::s(int d, int power) {
    return of(GateKind::S, d, power);
}
GateSpec GateSpec::u8(int d, int power) {
    return of(GateKind::U8, d, power);
}
GateSpec GateSpec::cnot(int d, int power) {
    return of(GateKind::CNOT, d, power);
}
GateSpec GateSpec::cz(int d, int power) {
    return of(GateKind::CZ, d, power);
}

GateSpec GateSpec::custom(DenseMatrix matrix, std::vector<int> dims, std::string label) {
    GateSpec spec;
    spec.kind = GateKind::CUSTOM;
    spec.dims = std::move(dims);
    spec.label = std::move(label);
    spec.custom_matrix = std::move(matrix);
    spec.validate();
    return spec;
}

void GateSpec::validate() const {
    for (int d : dims) {
        require_dimension(d);
    }
    if (kind == GateKind::CUSTOM) {
        if (!custom_matrix) {
            throw Error(ErrorCode::Validation, "custom gate has no matrix");
        }
        if (dims.empty()) {
            throw Error(ErrorCode::Arity, "custom gate needs at least one wire");
        }
        size_t side = 1;
        for (int d : dims) {
            side *= static_cast<size_t>(d);
        }
        if (custom_matrix->rows() != side || custom_matrix->cols() != side) {
            throw Error(
                ErrorCode::Shape, "custom matrix must be " + std::to_string(side) + "x" + std::to_string(side));
        }
        if (!is_unitary(*custom_matrix, 1e-10)) {
            throw Error(ErrorCode::Validation, "custom gate matrix is not unitary");
        }
        return;
    }
    if (dims.size() != gate_kind_arity(kind)) {
        throw Error(
            ErrorCode::Arity, std::string(gate_kind_name(kind)) + " acts on " +
                                  std::to_string(gate_kind_arity(kind)) + " wire(s), got " +
                                  std::to_string(dims.size()));
    }
    if (dims.size() == 2 && dims[0] != dims[1]) {
        throw Error(
            ErrorCode::DimensionMismatch, std::string(gate_kind_name(kind)) +
                                              " needs equal control and target dimensions, got d=" +
                                              std::to_string(dims[0]) + " and d=" + std::to_string(dims[1]));
    }
    if (kind == GateKind::U8 && !is_prime(dims[0])) {
        throw Error(
            ErrorCode::UnsupportedDimension,
            "U8 is defined for a prime dimension d, got d=" + std::to_string(dims[0]));
    }
}

bool GateSpec::operator==(const GateSpec &other) const {
    if (kind != other.kind || dims != other.dims || power != other.power || label != other.label) {
        return false;
    }
    if (custom_matrix.has_value() != other.custom_matrix.has_value()) {
        return false;
    }
    return !custom_matrix || approx_equal(*custom_matrix, *other.custom_matrix, 0.0);
}

DenseMatrix x_matrix(int d) {
    require_dimension(d);
    DenseMatrix m(d, d);
    for (int s = 0; s < d; s++) {
        m((s + 1) % d, s) = 1.0;
    }
    return m;
}

DenseMatrix z_matrix(int d) {
    require_dimension(d);
    DenseMatrix m(d, d);
    for (int s = 0; s < d; s++) {
        m(s, s) = root_of_unity(d, s);
    }
    return m;
}

DenseMatrix h_matrix(int d) {
    require_dimension(d);
    DenseMatrix m(d, d);
    double norm = 1.0 / std::sqrt(static_cast<double>(d));
    for (int j = 0; j < d; j++) {
        for (int s = 0; s < d; s++) {
            m(j, s) = root_of_unity(d, static_cast<int64_t>(j) * s) * norm;
        }
    }
    return m;
}

DenseMatrix s_matrix(int d) {
    require_dimension(d);
    int64_t parity = d % 2;
    DenseMatrix m(d, d);
    for (int64_t s = 0; s < d; s++) {
        // exp(2 pi i * s(s + p_d) / (2d)); s(s + p_d) is even whenever d is odd.
        m(s, s) = root_of_unity(2 * static_cast<int64_t>(d), s * (s + parity));
    }
    return m;
}

DenseMatrix cz_matrix(int d) {
    require_dimension(d);
    DenseMatrix m(d * d, d * d);
    for (int r = 0; r < d; r++) {
        for (int s = 0; s < d; s++) {
            m(r * d + s, r * d + s) = root_of_unity(d, static_cast<int64_t>(r) * s);
        }
    }
    return m;
}

DenseMatrix cnot_matrix(int d) {
    require_dimension(d);
    DenseMatrix m(d * d, d * d);
    for (int r = 0; r < d; r++) {
        for (int s = 0; s < d; s++) {
            m(r * d + (r + s) % d, r * d + s) = 1.0;
        }
    }
    return m;
}

U8Phases u8_phases(int d) {
    if (!is_prime(d)) {
        throw Error(ErrorCode::UnsupportedDimension, "U8 is defined for a prime dimension d, got d=" + std::to_string(d));
    }
    if (d == 2) {
        return {8, {0, 1}};
    }
    if (d == 3) {
        const int z = 1, gamma = 2, epsilon = 0;
        return {9, {0, static_cast<int>(mod(6 * z + 2 * gamma + 3 * epsilon, 9)),
                    static_cast<int>(mod(6 * z + gamma + 6 * epsilon, 9))}};
    }
    const int64_t z = 0, gamma = 1, epsilon = 0;
    int64_t inv12 = inverse_mod(12, d);
    U8Phases out{d, std::vector<int>(d)};
    for (int64_t k = 0; k < d; k++) {
        int64_t inner = mod(gamma + k * mod(6 * z + (2 * k - 3) * gamma, d), d);
        out.exponents[k] = static_cast<int>(mod(inv12 * mod(k * inner, d) + k * epsilon, d));
    }
    return out;
}

DenseMatrix u8_matrix(int d) {
    U8Phases phases = u8_phases(d);
    std::vector<Cplx> diag;
    diag.reserve(d);
    for (int v : phases.exponents) {
        diag.push_back(root_of_unity(phases.root_order, v));
    }
    return DenseMatrix::diagonal(diag);
}

DenseMatrix resolve(const GateSpec &spec) {
    spec.validate();
    DenseMatrix base = [&]() -> DenseMatrix {
        switch (spec.kind) {
            case GateKind::X:
                return x_matrix(spec.dims[0]);
            case GateKind::Z:
                return z_matrix(spec.dims[0]);
            case GateKind::H:
                return h_matrix(spec.dims[0]);
            case GateKind::S:
                return s_matrix(spec.dims[0]);
            case GateKind::U8:
                return u8_matrix(spec.dims[0]);
            case GateKind::CNOT:
                return cnot_matrix(spec.dims[0]);
            case GateKind::CZ:
                return cz_matrix(spec.dims[0]);
            case GateKind::CUSTOM:
                return *spec.custom_matrix;
        }
        throw Error(ErrorCode::InvalidArgument, "unknown gate kind");
    }();
    if (spec.power == 1) {
        return base;
    }
    return matrix_power(base, spec.power);
}

}  // namespace quditsim
