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

#ifndef QUDITSIM_CIRCUIT_H
#define QUDITSIM_CIRCUIT_H

#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "quditsim/gates.h"
#include "quditsim/numerics.h"

namespace quditsim {

/// A named wire. `ordinal` is the registration index inside its circuit and
/// also the wire's position in the state vector (0 = most significant digit).
struct QuditRef {
    std::string name;
    int dimension = 2;
    size_t ordinal = 0;

    bool operator==(const QuditRef &) const = default;
};

struct GateOp {
    GateSpec spec;
    std::vector<QuditRef> wires;

    bool operator==(const GateOp &) const = default;
};

struct MeasureOp {
    QuditRef wire;
    std::string key;

    bool operator==(const MeasureOp &) const = default;
};

using CircuitOp = std::variant<GateOp, MeasureOp>;

/// Ordinals of the wires an op touches, in op order.
std::vector<size_t> op_wires(const CircuitOp &op);

class Circuit {
   public:
    const std::vector<QuditRef> &qudits() const noexcept {
        return qudits_;
    }
    const std::vector<CircuitOp> &ops() const noexcept {
        return ops_;
    }
    bool empty() const noexcept {
        return ops_.empty();
    }

    std::optional<QuditRef> find(std::string_view name) const;

    /// Registers `name` at `dimension`, or returns the existing wire. A known
    /// name at a different dimension raises DimensionConflict.
    QuditRef add_qudit(const std::string &name, int dimension);

    /// Appends an op. Wires are matched by name; unknown names are registered
    /// at the wire's declared dimension. Ordinals on the incoming wires are
    /// ignored and rewritten.
    void append(CircuitOp op);
    void append(const GateSpec &spec, std::span<const std::string> wire_names);
    void append(const GateSpec &spec, std::initializer_list<std::string> wire_names);
    void measure(const std::string &name, const std::string &key);

    /// Appends every op of `other`, registering its qudits by name.
    void extend(const Circuit &other);

    RadixProfile profile() const;
    bool has_measurements() const;
    /// True when no gate touches a wire after that wire has been measured.
    bool measurements_terminal() const;
    std::vector<std::string> measurement_keys() const;

    bool operator==(const Circuit &) const = default;

   private:
    QuditRef resolve_wire(const QuditRef &wire);

    std::vector<QuditRef> qudits_;
    std::map<std::string, size_t, std::less<>> by_name_;
    std::vector<CircuitOp> ops_;
};

// Builder steps, mirroring the positional argument list of a circuit builder
// call: a bare integer sets the ambient dimension, tuples add gates or
// measurements.
struct DimensionStep {
    int dimension;
};
struct DeclareStep {
    std::string name;
    std::optional<int> dimension;
};
struct GateStep {
    GateKind kind;
    std::vector<std::string> names;
    std::optional<int> dimension;
    int power = 1;
};
struct MeasureStep {
    std::string name;
    std::optional<std::string> key;
};
using BuildStep = std::variant<DimensionStep, DeclareStep, GateStep, MeasureStep>;

struct BuildResult {
    Circuit circuit;
    std::map<std::string, QuditRef> qudits;
    std::vector<QuditRef> order;
};

/// Incremental form of `build`, so callers can attribute errors to a step.
///
/// Dimension resolution for a gate step: an explicit per-step dimension wins;
/// otherwise the dimension of already-registered wires; otherwise the ambient
/// default. A step dimension that contradicts a registered wire raises
/// DimensionConflict; no dimension at all raises MissingDimension.
class CircuitBuilder {
   public:
    explicit CircuitBuilder(std::optional<int> default_dimension = std::nullopt);

    void apply(const BuildStep &step);
    BuildResult result() const;

   private:
    int dimension_for(const std::vector<std::string> &names, std::optional<int> explicit_dim) const;

    std::optional<int> ambient_;
    Circuit circuit_;
};

BuildResult build(std::optional<int> default_dimension, std::span<const BuildStep> steps);

/// Greedy earliest-slot packing. Each entry lists op indices into circuit.ops().
std::vector<std::vector<size_t>> moments(const Circuit &circuit);

/// ASCII diagram: one row per qudit, one column per moment.
std::string render_diagram(const Circuit &circuit);

/// Dense unitary of a measurement-free circuit, built with Kronecker products
/// and explicit wire permutations. Intended as a reference for small sizes.
DenseMatrix full_unitary(const Circuit &circuit, size_t max_dimension = 4096);

/// H on the first wire followed by a CNOT staircase; optional terminal
/// measurements keyed m_<name>. Wires are named q0..q{n-1}.
Circuit ghz_circuit(int dimension, int num_qudits, bool measure);

}  // namespace quditsim

#endif
