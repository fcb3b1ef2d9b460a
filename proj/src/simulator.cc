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

#include "quditsim/simulator.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <thread>

#include "quditsim/error.h"

namespace quditsim {

uint64_t entropy_seed() {
    std::random_device rd;
    return (static_cast<uint64_t>(rd()) << 32) ^ static_cast<uint64_t>(rd());
}

StateVector::StateVector(RadixProfile profile, std::vector<Cplx> amps)
    : profile_(std::move(profile)), amps_(std::move(amps)) {
    if (amps_.size() != profile_.size()) {
        throw Error(
            ErrorCode::DimensionMismatch, "state has " + std::to_string(amps_.size()) + " amplitudes, profile needs " +
                                              std::to_string(profile_.size()));
    }
}

StateVector::StateVector(RadixProfile profile) : profile_(std::move(profile)), amps_(profile_.size()) {
    amps_[0] = 1.0;
}

double StateVector::norm_squared() const {
    double acc = 0;
    for (const auto &a : amps_) {
        acc += std::norm(a);
    }
    return acc;
}

StateVector basis_state(const RadixProfile &profile, std::span<const int> digits) {
    std::vector<Cplx> amps(profile.size());
    amps[profile.encode(digits)] = 1.0;
    return StateVector(profile, std::move(amps));
}

namespace {

// Column c of a monomial matrix has exactly one nonzero, at row rows[c].
struct Monomial {
    std::vector<size_t> rows;
    std::vector<Cplx> values;
};

std::optional<Monomial> as_monomial(const DenseMatrix &m) {
    Monomial out{std::vector<size_t>(m.cols()), std::vector<Cplx>(m.cols())};
    for (size_t c = 0; c < m.cols(); c++) {
        bool found = false;
        for (size_t r = 0; r < m.rows(); r++) {
            if (m(r, c) != Cplx{}) {
                if (found) {
                    return std::nullopt;
                }
                found = true;
                out.rows[c] = r;
                out.values[c] = m(r, c);
            }
        }
        if (!found) {
            return std::nullopt;
        }
    }
    return out;
}

}  // namespace

void apply_gate(StateVector &state, const DenseMatrix &matrix, std::span<const size_t> wires) {
    const RadixProfile &profile = state.profile();
    size_t n = profile.num_digits();
    size_t side = 1;
    for (size_t k = 0; k < wires.size(); k++) {
        if (wires[k] >= n) {
            throw Error(
                ErrorCode::Wiring, "wire " + std::to_string(wires[k]) + " out of range for " + std::to_string(n) +
                                       " qudits");
        }
        for (size_t j = 0; j < k; j++) {
            if (wires[j] == wires[k]) {
                throw Error(ErrorCode::Wiring, "wire " + std::to_string(wires[k]) + " repeated");
            }
        }
        side *= static_cast<size_t>(profile.dim(wires[k]));
    }
    if (wires.empty() || matrix.rows() != side || matrix.cols() != side) {
        throw Error(
            ErrorCode::DimensionMismatch, "matrix is " + std::to_string(matrix.rows()) + "x" +
                                              std::to_string(matrix.cols()) + " but the wires span " +
                                              std::to_string(side) + " states");
    }

    // Flat offset of every target-digit assignment, in matrix index order.
    std::vector<size_t> offsets(side, 0);
    for (size_t r = 0; r < side; r++) {
        size_t rem = r;
        for (size_t k = wires.size(); k-- > 0;) {
            size_t d = static_cast<size_t>(profile.dim(wires[k]));
            offsets[r] += (rem % d) * profile.stride(wires[k]);
            rem /= d;
        }
    }

    std::vector<size_t> outer;
    for (size_t w = 0; w < n; w++) {
        if (std::find(wires.begin(), wires.end(), w) == wires.end()) {
            outer.push_back(w);
        }
    }
    std::vector<int> counter(outer.size(), 0);

    auto monomial = as_monomial(matrix);
    std::vector<Cplx> in(side), out(side);
    std::span<Cplx> amps = state.amplitudes();
    size_t base = 0;
    while (true) {
        for (size_t r = 0; r < side; r++) {
            in[r] = amps[base + offsets[r]];
        }
        if (monomial) {
            for (size_t c = 0; c < side; c++) {
                out[monomial->rows[c]] = monomial->values[c] * in[c];
            }
        } else {
            for (size_t r = 0; r < side; r++) {
                Cplx acc{};
                for (size_t c = 0; c < side; c++) {
                    acc += matrix(r, c) * in[c];
                }
                out[r] = acc;
            }
        }
        for (size_t r = 0; r < side; r++) {
            amps[base + offsets[r]] = out[r];
        }

        // Odometer over the non-target digits, least significant first.
        size_t k = outer.size();
        while (k > 0) {
            k--;
            size_t w = outer[k];
            base += profile.stride(w);
            if (++counter[k] < profile.dim(w)) {
                break;
            }
            base -= static_cast<size_t>(profile.dim(w)) * profile.stride(w);
            counter[k] = 0;
            if (k == 0) {
                return;
            }
        }
        if (outer.empty()) {
            return;
        }
    }
}

std::vector<double> wire_probabilities(const StateVector &state, size_t wire) {
    const RadixProfile &profile = state.profile();
    if (wire >= profile.num_digits()) {
        throw Error(ErrorCode::Wiring, "wire " + std::to_string(wire) + " out of range");
    }
    size_t d = static_cast<size_t>(profile.dim(wire));
    size_t stride = profile.stride(wire);
    std::vector<double> probs(d, 0.0);
    auto amps = state.amplitudes();
    for (size_t i = 0; i < amps.size(); i++) {
        probs[(i / stride) % d] += std::norm(amps[i]);
    }
    return probs;
}

namespace {

// Index into `weights` chosen with probability proportional to weight.
size_t sample_index(std::span<const double> weights, double u) {
    double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    double target = u * total;
    double acc = 0;
    size_t last_nonzero = 0;
    for (size_t k = 0; k < weights.size(); k++) {
        if (weights[k] > 0) {
            last_nonzero = k;
        }
        acc += weights[k];
        if (target < acc) {
            return k;
        }
    }
    return last_nonzero;
}

void check_deadline(const RunOptions &options) {
    if (options.deadline && std::chrono::steady_clock::now() > *options.deadline) {
        throw Error(ErrorCode::Timeout, "simulation exceeded its deadline");
    }
}

MeasurementTable empty_table(const Circuit &circuit, size_t repetitions) {
    MeasurementTable table;
    for (const auto &op : circuit.ops()) {
        if (const auto *m = std::get_if<MeasureOp>(&op)) {
            table.add_key(m->key, m->wire.dimension, repetitions);
        }
    }
    return table;
}

// Runs the circuit on `state`, writing measurement digits into column `rep`.
void execute(
    const Circuit &circuit, StateVector &state, SplitMix64 &rng, MeasurementTable &table, size_t rep,
    const RunOptions &options) {
    for (const auto &op : circuit.ops()) {
        check_deadline(options);
        if (const auto *g = std::get_if<GateOp>(&op)) {
            apply_gate(state, resolve(g->spec), op_wires(op));
        } else {
            const auto &m = std::get<MeasureOp>(op);
            table.digits(m.key)[rep] = measure_wire(state, m.wire.ordinal, rng);
        }
    }
}

}  // namespace

int measure_wire(StateVector &state, size_t wire, SplitMix64 &rng) {
    auto probs = wire_probabilities(state, wire);
    int digit = static_cast<int>(sample_index(probs, rng.uniform01()));
    const RadixProfile &profile = state.profile();
    size_t d = static_cast<size_t>(profile.dim(wire));
    size_t stride = profile.stride(wire);
    double scale = 1.0 / std::sqrt(probs[digit]);
    auto amps = state.amplitudes();
    for (size_t i = 0; i < amps.size(); i++) {
        if ((i / stride) % d == static_cast<size_t>(digit)) {
            amps[i] *= scale;
        } else {
            amps[i] = 0;
        }
    }
    return digit;
}

void MeasurementTable::add_key(const std::string &key, int dimension, size_t repetitions) {
    for (const auto &e : entries_) {
        if (e.key == key) {
            throw Error(ErrorCode::KeyCollision, "measurement key '" + key + "' already present");
        }
    }
    entries_.push_back({key, dimension, std::vector<int>(repetitions, 0)});
}

const std::vector<int> &MeasurementTable::digits(std::string_view key) const {
    for (const auto &e : entries_) {
        if (e.key == key) {
            return e.digits;
        }
    }
    throw Error(ErrorCode::InvalidArgument, "no measurement key '" + std::string(key) + "'");
}

std::vector<int> &MeasurementTable::digits(std::string_view key) {
    return const_cast<std::vector<int> &>(std::as_const(*this).digits(key));
}

size_t MeasurementTable::repetitions() const noexcept {
    return entries_.empty() ? 0 : entries_.front().digits.size();
}

SimulationResult simulate(
    const Circuit &circuit, std::optional<StateVector> initial, std::optional<uint64_t> seed,
    const RunOptions &options) {
    RadixProfile profile = circuit.profile();
    if (initial && !(initial->profile() == profile)) {
        throw Error(ErrorCode::DimensionMismatch, "initial state does not match the circuit's qudit dimensions");
    }
    uint64_t used_seed = seed.value_or(entropy_seed());
    StateVector state = initial ? std::move(*initial) : StateVector(profile);
    MeasurementTable table = empty_table(circuit, 1);
    SplitMix64 rng = SplitMix64::substream(used_seed, 0);
    execute(circuit, state, rng, table, 0, options);
    return {std::move(state), std::move(table), used_seed};
}

RunResult run(const Circuit &circuit, size_t repetitions, std::optional<uint64_t> seed, const RunOptions &options) {
    if (repetitions == 0) {
        throw Error(ErrorCode::InvalidArgument, "repetitions must be positive");
    }
    if (!circuit.has_measurements()) {
        throw Error(ErrorCode::NothingToSample, "circuit has no measurements to sample");
    }
    uint64_t used_seed = seed.value_or(entropy_seed());
    RadixProfile profile = circuit.profile();
    MeasurementTable table = empty_table(circuit, repetitions);

    if (options.sample_terminal && circuit.measurements_terminal()) {
        // No gate follows a measurement on its wire, so every measurement
        // commutes to the end: simulate once, then sample the joint outcome.
        StateVector state(profile);
        for (const auto &op : circuit.ops()) {
            check_deadline(options);
            if (const auto *g = std::get_if<GateOp>(&op)) {
                apply_gate(state, resolve(g->spec), op_wires(op));
            }
        }
        std::vector<std::pair<double, size_t>> draws(repetitions);
        for (size_t rep = 0; rep < repetitions; rep++) {
            draws[rep] = {SplitMix64::substream(used_seed, rep).uniform01(), rep};
        }
        std::sort(draws.begin(), draws.end());
        auto amps = state.amplitudes();
        double total = state.norm_squared();
        double acc = 0;
        size_t index = 0;
        size_t last_nonzero = 0;
        std::vector<size_t> outcome(repetitions);
        for (const auto &[u, rep] : draws) {
            double target = u * total;
            while (index < amps.size() && acc + std::norm(amps[index]) <= target) {
                if (std::norm(amps[index]) > 0) {
                    last_nonzero = index;
                }
                acc += std::norm(amps[index]);
                index++;
            }
            if (index == amps.size()) {
                outcome[rep] = last_nonzero;
            } else {
                outcome[rep] = index;
            }
        }
        for (const auto &op : circuit.ops()) {
            if (const auto *m = std::get_if<MeasureOp>(&op)) {
                auto &digits = table.digits(m->key);
                size_t d = static_cast<size_t>(m->wire.dimension);
                size_t stride = profile.stride(m->wire.ordinal);
                for (size_t rep = 0; rep < repetitions; rep++) {
                    digits[rep] = static_cast<int>((outcome[rep] / stride) % d);
                }
            }
        }
        return {std::move(table), repetitions, used_seed};
    }

    unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(repetitions)));
    auto worker = [&](size_t begin, size_t end, MeasurementTable &out) {
        for (size_t rep = begin; rep < end; rep++) {
            StateVector state(profile);
            SplitMix64 rng = SplitMix64::substream(used_seed, rep);
            execute(circuit, state, rng, out, rep, options);
        }
    };
    if (threads == 1) {
        worker(0, repetitions, table);
    } else {
        // Each worker fills a private table; columns are merged in repetition order.
        std::vector<MeasurementTable> partial(threads, table);
        std::vector<std::exception_ptr> failures(threads);
        std::vector<std::thread> pool;
        size_t chunk = (repetitions + threads - 1) / threads;
        for (unsigned t = 0; t < threads; t++) {
            size_t begin = std::min(repetitions, t * chunk);
            size_t end = std::min(repetitions, begin + chunk);
            pool.emplace_back([&, t, begin, end] {
                try {
                    worker(begin, end, partial[t]);
                } catch (...) {
                    failures[t] = std::current_exception();
                }
            });
        }
        for (auto &th : pool) {
            th.join();
        }
        for (auto &f : failures) {
            if (f) {
                std::rethrow_exception(f);
            }
        }
        for (unsigned t = 0; t < threads; t++) {
            size_t begin = std::min(repetitions, t * chunk);
            size_t end = std::min(repetitions, begin + chunk);
            for (const auto &e : table.entries()) {
                auto &dst = table.digits(e.key);
                const auto &src = partial[t].digits(e.key);
                std::copy(src.begin() + begin, src.begin() + end, dst.begin() + begin);
            }
        }
    }
    return {std::move(table), repetitions, used_seed};
}

}  // namespace quditsim
