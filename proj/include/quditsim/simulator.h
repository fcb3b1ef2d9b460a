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

#ifndef QUDITSIM_SIMULATOR_H
#define QUDITSIM_SIMULATOR_H

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quditsim/circuit.h"
#include "quditsim/numerics.h"
#include "quditsim/rng.h"

namespace quditsim {

class StateVector {
   public:
    StateVector(RadixProfile profile, std::vector<Cplx> amps);
    /// |0...0>.
    explicit StateVector(RadixProfile profile);

    const RadixProfile &profile() const noexcept {
        return profile_;
    }
    size_t size() const noexcept {
        return amps_.size();
    }
    std::span<const Cplx> amplitudes() const noexcept {
        return amps_;
    }
    std::span<Cplx> amplitudes() noexcept {
        return amps_;
    }
    const Cplx &operator[](size_t index) const {
        return amps_[index];
    }
    Cplx amplitude(std::span<const int> digits) const {
        return amps_[profile_.encode(digits)];
    }

    double norm_squared() const;

   private:
    RadixProfile profile_;
    std::vector<Cplx> amps_;
};

StateVector basis_state(const RadixProfile &profile, std::span<const int> digits);

/// Applies `matrix` to the listed wires in place. Wire j of the list is digit j
/// (most significant first) of the matrix's row/column index. Wires may be in
/// any order and need not be adjacent.
void apply_gate(StateVector &state, const DenseMatrix &matrix, std::span<const size_t> wires);

/// Outcome probabilities of measuring one wire.
std::vector<double> wire_probabilities(const StateVector &state, size_t wire);

/// Samples a digit for `wire`, projects onto it and renormalizes.
int measure_wire(StateVector &state, size_t wire, SplitMix64 &rng);

/// Per-key digit sequences, one digit per repetition, in measurement order.
class MeasurementTable {
   public:
    struct Entry {
        std::string key;
        int dimension = 2;
        std::vector<int> digits;

        bool operator==(const Entry &) const = default;
    };

    void add_key(const std::string &key, int dimension, size_t repetitions = 0);
    const std::vector<Entry> &entries() const noexcept {
        return entries_;
    }
    const std::vector<int> &digits(std::string_view key) const;
    std::vector<int> &digits(std::string_view key);
    size_t repetitions() const noexcept;

    bool operator==(const MeasurementTable &) const = default;

   private:
    std::vector<Entry> entries_;
};

struct SimulationResult {
    StateVector final_state;
    MeasurementTable measurements;
    uint64_t seed = 0;
};

struct RunResult {
    MeasurementTable table;
    size_t repetitions = 0;
    uint64_t seed = 0;

    bool operator==(const RunResult &) const = default;
};

struct RunOptions {
    /// Worker threads for re-executed repetitions. Output does not depend on it.
    unsigned threads = 1;
    /// Sample terminal measurements from one simulated final state.
    bool sample_terminal = true;
    /// Abort with ErrorCode::Timeout once this time passes (checked between ops).
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// One pass through the circuit. Measurements sample, record and collapse.
SimulationResult simulate(
    const Circuit &circuit,
    std::optional<StateVector> initial = std::nullopt,
    std::optional<uint64_t> seed = std::nullopt,
    const RunOptions &options = {});

/// Repeated execution from |0...0>. Repetition k uses SplitMix64::substream(seed, k).
RunResult run(
    const Circuit &circuit, size_t repetitions, std::optional<uint64_t> seed = std::nullopt,
    const RunOptions &options = {});

}  // namespace quditsim

#endif
