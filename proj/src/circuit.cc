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

#include "quditsim/circuit.h"

#include <algorithm>
#include <set>

#include "quditsim/error.h"

namespace quditsim {

std::vector<size_t> op_wires(const CircuitOp &op) {
    std::vector<size_t> out;
    if (const auto *g = std::get_if<GateOp>(&op)) {
        for (const auto &w : g->wires) {
            out.push_back(w.ordinal);
        }
    } else {
        out.push_back(std::get<MeasureOp>(op).wire.ordinal);
    }
    return out;
}

std::optional<QuditRef> Circuit::find(std::string_view name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) {
        return std::nullopt;
    }
    return qudits_[it->second];
}

QuditRef Circuit::add_qudit(const std::string &name, int dimension) {
    if (name.empty()) {
        throw Error(ErrorCode::InvalidArgument, "qudit names must be non-empty");
    }
    if (auto existing = find(name)) {
        if (existing->dimension != dimension) {
            throw Error(
                ErrorCode::DimensionConflict, "qudit '" + name + "' has d=" + std::to_string(existing->dimension) +
                                                  ", cannot redeclare with d=" + std::to_string(dimension));
        }
        return *existing;
    }
    if (dimension < 2) {
        throw Error(ErrorCode::InvalidDimension, "qudit dimension must be >= 2, got " + std::to_string(dimension));
    }
    QuditRef ref{name, dimension, qudits_.size()};
    by_name_.emplace(name, qudits_.size());
    qudits_.push_back(ref);
    return ref;
}

QuditRef Circuit::resolve_wire(const QuditRef &wire) {
    if (auto existing = find(wire.name)) {
        if (existing->dimension != wire.dimension) {
            throw Error(
                ErrorCode::DimensionMismatch, "wire '" + wire.name + "' has d=" +
                                                  std::to_string(existing->dimension) + " but the op expects d=" +
                                                  std::to_string(wire.dimension));
        }
        return *existing;
    }
    return add_qudit(wire.name, wire.dimension);
}

void Circuit::append(CircuitOp op) {
    if (auto *g = std::get_if<GateOp>(&op)) {
        g->spec.validate();
        if (g->wires.size() != g->spec.arity()) {
            throw Error(
                ErrorCode::Arity, std::string(gate_kind_name(g->spec.kind)) + " expects " +
                                      std::to_string(g->spec.arity()) + " wire(s), got " +
                                      std::to_string(g->wires.size()));
        }
        std::set<std::string> seen;
        for (size_t k = 0; k < g->wires.size(); k++) {
            if (!seen.insert(g->wires[k].name).second) {
                throw Error(ErrorCode::Wiring, "wire '" + g->wires[k].name + "' used twice in one gate");
            }
            if (g->wires[k].dimension != g->spec.dims[k]) {
                throw Error(
                    ErrorCode::DimensionMismatch,
                    std::string(gate_kind_name(g->spec.kind)) + "(d=" + std::to_string(g->spec.dims[k]) +
                        ") cannot act on wire '" + g->wires[k].name + "' with d=" +
                        std::to_string(g->wires[k].dimension));
            }
        }
        // Check every wire before registering any, so a failed append leaves the circuit untouched.
        for (const auto &w : g->wires) {
            if (auto existing = find(w.name); existing && existing->dimension != w.dimension) {
                throw Error(
                    ErrorCode::DimensionMismatch,
                    std::string(gate_kind_name(g->spec.kind)) + "(d=" + std::to_string(w.dimension) +
                        ") cannot act on wire '" + w.name + "' with d=" + std::to_string(existing->dimension));
            }
        }
        for (auto &w : g->wires) {
            w = resolve_wire(w);
        }
    } else {
        auto &m = std::get<MeasureOp>(op);
        if (m.key.empty()) {
            throw Error(ErrorCode::InvalidArgument, "measurement key must be non-empty");
        }
        for (const auto &k : measurement_keys()) {
            if (k == m.key) {
                throw Error(ErrorCode::KeyCollision, "measurement key '" + m.key + "' already used");
            }
        }
        m.wire = resolve_wire(m.wire);
    }
    ops_.push_back(std::move(op));
}

void Circuit::append(const GateSpec &spec, std::span<const std::string> wire_names) {
    GateOp op{spec, {}};
    for (size_t k = 0; k < wire_names.size(); k++) {
        int d = k < spec.dims.size() ? spec.dims[k] : 0;
        if (auto existing = find(wire_names[k])) {
            d = existing->dimension;
        }
        op.wires.push_back({wire_names[k], d, 0});
    }
    append(CircuitOp{std::move(op)});
}

void Circuit::append(const GateSpec &spec, std::initializer_list<std::string> wire_names) {
    append(spec, std::span<const std::string>(wire_names.begin(), wire_names.size()));
}

void Circuit::measure(const std::string &name, const std::string &key) {
    auto existing = find(name);
    if (!existing) {
        throw Error(ErrorCode::MissingDimension, "cannot measure unknown qudit '" + name + "'");
    }
    append(CircuitOp{MeasureOp{*existing, key}});
}

void Circuit::extend(const Circuit &other) {
    for (const auto &q : other.qudits_) {
        add_qudit(q.name, q.dimension);
    }
    for (const auto &op : other.ops_) {
        append(op);
    }
}

RadixProfile Circuit::profile() const {
    std::vector<int> dims;
    dims.reserve(qudits_.size());
    for (const auto &q : qudits_) {
        dims.push_back(q.dimension);
    }
    return RadixProfile(std::move(dims));
}

bool Circuit::has_measurements() const {
    return std::any_of(ops_.begin(), ops_.end(), [](const CircuitOp &op) {
        return std::holds_alternative<MeasureOp>(op);
    });
}

bool Circuit::measurements_terminal() const {
    std::vector<bool> measured(qudits_.size(), false);
    for (const auto &op : ops_) {
        if (const auto *m = std::get_if<MeasureOp>(&op)) {
            measured[m->wire.ordinal] = true;
        } else {
            for (size_t w : op_wires(op)) {
                if (measured[w]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::vector<std::string> Circuit::measurement_keys() const {
    std::vector<std::string> keys;
    for (const auto &op : ops_) {
        if (const auto *m = std::get_if<MeasureOp>(&op)) {
            keys.push_back(m->key);
        }
    }
    return keys;
}

CircuitBuilder::CircuitBuilder(std::optional<int> default_dimension) : ambient_(default_dimension) {
    if (ambient_ && *ambient_ < 2) {
        throw Error(ErrorCode::InvalidDimension, "dimension must be >= 2, got " + std::to_string(*ambient_));
    }
}

int CircuitBuilder::dimension_for(const std::vector<std::string> &names, std::optional<int> explicit_dim) const {
    std::optional<int> known;
    for (const auto &n : names) {
        if (auto q = circuit_.find(n)) {
            if (explicit_dim && *explicit_dim != q->dimension) {
                throw Error(
                    ErrorCode::DimensionConflict, "qudit '" + n + "' has d=" + std::to_string(q->dimension) +
                                                      ", step requests d=" + std::to_string(*explicit_dim));
            }
            if (known && *known != q->dimension) {
                throw Error(
                    ErrorCode::DimensionMismatch, "wires of one gate have different dimensions (d=" +
                                                      std::to_string(*known) + " and d=" +
                                                      std::to_string(q->dimension) + ")");
            }
            known = q->dimension;
        }
    }
    if (explicit_dim) {
        return *explicit_dim;
    }
    if (known) {
        return *known;
    }
    if (ambient_) {
        return *ambient_;
    }
    throw Error(ErrorCode::MissingDimension, "no dimension set for qudit '" + names.front() + "'");
}

void CircuitBuilder::apply(const BuildStep &step) {
    if (const auto *s = std::get_if<DimensionStep>(&step)) {
        if (s->dimension < 2) {
            throw Error(ErrorCode::InvalidDimension, "dimension must be >= 2, got " + std::to_string(s->dimension));
        }
        ambient_ = s->dimension;
    } else if (const auto *s = std::get_if<DeclareStep>(&step)) {
        int d = dimension_for({s->name}, s->dimension);
        circuit_.add_qudit(s->name, d);
    } else if (const auto *s = std::get_if<GateStep>(&step)) {
        if (s->names.empty()) {
            throw Error(ErrorCode::Arity, std::string(gate_kind_name(s->kind)) + " needs at least one qudit");
        }
        int d = dimension_for(s->names, s->dimension);
        GateSpec spec = GateSpec::of(s->kind, d, s->power);
        if (s->names.size() != spec.arity()) {
            throw Error(
                ErrorCode::Arity, std::string(gate_kind_name(s->kind)) + " acts on " +
                                      std::to_string(spec.arity()) + " qudit(s), got " +
                                      std::to_string(s->names.size()));
        }
        circuit_.append(spec, s->names);
    } else {
        const auto &m = std::get<MeasureStep>(step);
        circuit_.measure(m.name, m.key.value_or("m_" + m.name));
    }
}

BuildResult CircuitBuilder::result() const {
    BuildResult out{circuit_, {}, circuit_.qudits()};
    for (const auto &q : circuit_.qudits()) {
        out.qudits.emplace(q.name, q);
    }
    return out;
}

BuildResult build(std::optional<int> default_dimension, std::span<const BuildStep> steps) {
    CircuitBuilder builder(default_dimension);
    for (const auto &step : steps) {
        builder.apply(step);
    }
    return builder.result();
}

std::vector<std::vector<size_t>> moments(const Circuit &circuit) {
    std::vector<std::vector<size_t>> out;
    std::vector<size_t> next_free(circuit.qudits().size(), 0);
    for (size_t k = 0; k < circuit.ops().size(); k++) {
        auto wires = op_wires(circuit.ops()[k]);
        size_t slot = 0;
        for (size_t w : wires) {
            slot = std::max(slot, next_free[w]);
        }
        if (slot == out.size()) {
            out.emplace_back();
        }
        out[slot].push_back(k);
        for (size_t w : wires) {
            next_free[w] = slot + 1;
        }
    }
    return out;
}

Circuit ghz_circuit(int dimension, int num_qudits, bool measure) {
    if (num_qudits < 1) {
        throw Error(ErrorCode::InvalidArgument, "GHZ circuit needs at least one qudit");
    }
    Circuit c;
    std::vector<std::string> names;
    for (int k = 0; k < num_qudits; k++) {
        names.push_back("q" + std::to_string(k));
        c.add_qudit(names.back(), dimension);
    }
    c.append(GateSpec::h(dimension), {names[0]});
    for (int k = 1; k < num_qudits; k++) {
        c.append(GateSpec::cnot(dimension), {names[k - 1], names[k]});
    }
    if (measure) {
        for (const auto &n : names) {
            c.measure(n, "m_" + n);
        }
    }
    return c;
}

}  // namespace quditsim
