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

#ifndef QUDITSIM_BENCH_H
#define QUDITSIM_BENCH_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "quditsim/circuit.h"

namespace quditsim {

struct BenchConfig {
    std::vector<int> dims{2, 3, 5, 7};
    int depth = 10;
    double budget_seconds = 60.0;
    int max_qudits = 64;
    uint64_t seed = 0;
    size_t repetitions = 1;
    /// Largest state probed; bigger (d, n) points are recorded as not completed
    /// without being run.
    size_t max_amplitudes = size_t{1} << 25;

    void validate() const;
};

struct BenchRow {
    int dimension = 0;
    int n_qudits = 0;
    double wall_seconds = 0;
    bool completed = false;
    uint64_t seed = 0;

    bool operator==(const BenchRow &) const = default;
};

/// `depth` gates drawn uniformly from {X, Z, H, CNOT} (CNOT only when n >= 2)
/// on uniformly drawn distinct wires, then a measurement of every qudit.
/// Wires are q0..q{n-1}; keys are m_q<k>.
Circuit random_circuit(int num_qudits, int dimension, int depth, uint64_t seed);

/// Seed of the (d, n) point of a sweep started from `seed`.
uint64_t bench_row_seed(uint64_t seed, int dimension, int num_qudits);

/// For each dimension, grows n from 1 until a run exceeds the budget (that run
/// is recorded with completed = false) or max_qudits is reached. Progress
/// lines go to `log` when non-null.
std::vector<BenchRow> scaling_sweep(const BenchConfig &config, std::ostream *log = nullptr);

/// Header `dimension,n_qudits,wall_seconds,completed,seed` plus one line per row.
std::string bench_csv(const std::vector<BenchRow> &rows);

/// Largest completed n per dimension, in the order dimensions first appear
/// (0 when nothing completed).
std::vector<std::pair<int, int>> frontier(const std::vector<BenchRow> &rows);

/// True when the completed-n frontier never grows as the dimension grows.
bool frontier_non_increasing(const std::vector<BenchRow> &rows);

}  // namespace quditsim

#endif
