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

#include "quditsim/bench.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ostream>

#include "quditsim/error.h"
#include "quditsim/rng.h"
#include "quditsim/simulator.h"

namespace quditsim {

void BenchConfig::validate() const {
    if (dims.empty()) {
        throw Error(ErrorCode::InvalidArgument, "bench needs at least one dimension");
    }
    for (int d : dims) {
        if (d < 2) {
            throw Error(ErrorCode::InvalidDimension, "bench dimension must be >= 2, got " + std::to_string(d));
        }
    }
    if (depth < 1) {
        throw Error(ErrorCode::InvalidArgument, "depth must be >= 1");
    }
    if (!(budget_seconds > 0)) {
        throw Error(ErrorCode::InvalidArgument, "budget must be positive");
    }
    if (max_qudits < 1) {
        throw Error(ErrorCode::InvalidArgument, "max_qudits must be >= 1");
    }
    if (repetitions < 1) {
        throw Error(ErrorCode::InvalidArgument, "repetitions must be >= 1");
    }
}

Circuit random_circuit(int num_qudits, int dimension, int depth, uint64_t seed) {
    if (num_qudits < 1) {
        throw Error(ErrorCode::InvalidArgument, "random circuit needs n >= 1, got " + std::to_string(num_qudits));
    }
    if (dimension < 2) {
        throw Error(ErrorCode::InvalidArgument, "random circuit needs d >= 2, got " + std::to_string(dimension));
    }
    if (depth < 1) {
        throw Error(ErrorCode::InvalidArgument, "random circuit needs depth >= 1, got " + std::to_string(depth));
    }
    SplitMix64 rng(seed);
    Circuit c;
    std::vector<std::string> names;
    for (int k = 0; k < num_qudits; k++) {
        names.push_back("q" + std::to_string(k));
        c.add_qudit(names.back(), dimension);
    }
    static constexpr GateKind kPool[] = {GateKind::X, GateKind::Z, GateKind::H, GateKind::CNOT};
    uint64_t pool_size = num_qudits >= 2 ? 4 : 3;
    uint64_t n = static_cast<uint64_t>(num_qudits);
    for (int g = 0; g < depth; g++) {
        GateKind kind = kPool[rng.below(pool_size)];
        if (kind == GateKind::CNOT) {
            uint64_t control = rng.below(n);
            uint64_t target = rng.below(n - 1);
            if (target >= control) {
                target++;
            }
            c.append(GateSpec::cnot(dimension), {names[control], names[target]});
        } else {
            c.append(GateSpec::of(kind, dimension), {names[rng.below(n)]});
        }
    }
    for (const auto &name : names) {
        c.measure(name, "m_" + name);
    }
    return c;
}

uint64_t bench_row_seed(uint64_t seed, int dimension, int num_qudits) {
    uint64_t point = (static_cast<uint64_t>(dimension) << 32) | static_cast<uint32_t>(num_qudits);
    return mix64(seed ^ mix64(point + SplitMix64::kGolden));
}

namespace {

// Wall time of one full run of `circuit`; nullopt if the deadline hit first.
std::optional<double> timed_run(const Circuit &circuit, const BenchConfig &config, uint64_t seed, double &elapsed) {
    auto start = std::chrono::steady_clock::now();
    RunOptions options;
    options.deadline =
        start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                    std::chrono::duration<double>(config.budget_seconds));
    std::optional<double> out;
    try {
        run(circuit, config.repetitions, seed, options);
        out = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    } catch (const Error &e) {
        if (e.code() != ErrorCode::Timeout) {
            throw;
        }
    }
    elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

}  // namespace

std::vector<BenchRow> scaling_sweep(const BenchConfig &config, std::ostream *log) {
    config.validate();
    std::vector<BenchRow> rows;
    for (int d : config.dims) {
        {
            double ignored = 0;
            timed_run(random_circuit(1, d, config.depth, bench_row_seed(config.seed, d, 0)), config, 0, ignored);
        }
        size_t amplitudes = 1;
        for (int n = 1; n <= config.max_qudits; n++) {
            uint64_t seed = bench_row_seed(config.seed, d, n);
            BenchRow row{d, n, 0.0, false, seed};
            if (amplitudes > config.max_amplitudes / static_cast<size_t>(d)) {
                if (log) {
                    *log << "d=" << d << " n=" << n << ": state exceeds " << config.max_amplitudes
                         << " amplitudes, not run\n";
                }
                rows.push_back(row);
                break;
            }
            amplitudes *= static_cast<size_t>(d);
            Circuit circuit = random_circuit(n, d, config.depth, seed);
            double elapsed = 0;
            auto wall = timed_run(circuit, config, seed, elapsed);
            row.wall_seconds = elapsed;
            row.completed = wall.has_value() && *wall <= config.budget_seconds;
            rows.push_back(row);
            if (log) {
                *log << "d=" << d << " n=" << n << ": " << elapsed << " s" << (row.completed ? "" : " (over budget)")
                     << "\n";
            }
            if (!row.completed) {
                break;
            }
        }
    }
    return rows;
}

std::string bench_csv(const std::vector<BenchRow> &rows) {
    std::string out = "dimension,n_qudits,wall_seconds,completed,seed\n";
    char buf[64];
    for (const auto &r : rows) {
        std::snprintf(buf, sizeof(buf), "%.6f", r.wall_seconds);
        out += std::to_string(r.dimension) + "," + std::to_string(r.n_qudits) + "," + buf + "," +
               (r.completed ? "true" : "false") + "," + std::to_string(r.seed) + "\n";
    }
    return out;
}

std::vector<std::pair<int, int>> frontier(const std::vector<BenchRow> &rows) {
    std::vector<std::pair<int, int>> out;
    for (const auto &r : rows) {
        auto it = std::find_if(out.begin(), out.end(), [&](const auto &p) {
            return p.first == r.dimension;
        });
        if (it == out.end()) {
            out.emplace_back(r.dimension, 0);
            it = out.end() - 1;
        }
        if (r.completed) {
            it->second = std::max(it->second, r.n_qudits);
        }
    }
    return out;
}

bool frontier_non_increasing(const std::vector<BenchRow> &rows) {
    auto f = frontier(rows);
    std::sort(f.begin(), f.end());
    for (size_t k = 1; k < f.size(); k++) {
        if (f[k].second > f[k - 1].second) {
            return false;
        }
    }
    return true;
}

}  // namespace quditsim
