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

#include <gtest/gtest.h>

#include <map>
#include <sstream>

#include "quditsim/error.h"

using namespace quditsim;

namespace {

size_t count_gates(const Circuit &c) {
    size_t n = 0;
    for (const auto &op : c.ops()) {
        n += std::holds_alternative<GateOp>(op);
    }
    return n;
}

std::vector<std::string> csv_lines(const std::string &text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

}  // namespace

TEST(random_circuit, single_qudit_has_no_cnot) {
    Circuit c = random_circuit(1, 3, 10, 99);
    EXPECT_EQ(count_gates(c), 10u);
    EXPECT_EQ(c.measurement_keys(), (std::vector<std::string>{"m_q0"}));
    for (const auto &op : c.ops()) {
        if (const auto *g = std::get_if<GateOp>(&op)) {
            EXPECT_NE(g->spec.kind, GateKind::CNOT);
        }
    }
}

TEST(random_circuit, shape_and_determinism) {
    Circuit c = random_circuit(3, 5, 10, 42);
    EXPECT_EQ(count_gates(c), 10u);
    EXPECT_EQ(c.measurement_keys().size(), 3u);
    EXPECT_TRUE(c.measurements_terminal());
    auto dims = c.profile().dims();
    EXPECT_EQ(std::vector<int>(dims.begin(), dims.end()), (std::vector<int>{5, 5, 5}));
    EXPECT_EQ(c, random_circuit(3, 5, 10, 42));
    EXPECT_NE(c, random_circuit(3, 5, 10, 43));
}

TEST(random_circuit, gate_choice_is_uniform) {
    std::map<GateKind, size_t> histogram;
    size_t total = 0;
    for (uint64_t seed = 0; seed < 1000; seed++) {
        Circuit c = random_circuit(4, 2, 10, seed);
        for (const auto &op : c.ops()) {
            if (const auto *g = std::get_if<GateOp>(&op)) {
                histogram[g->spec.kind]++;
                total++;
                if (g->spec.kind == GateKind::CNOT) {
                    EXPECT_NE(g->wires[0].ordinal, g->wires[1].ordinal);
                }
            }
        }
    }
    ASSERT_EQ(total, 10000u);
    ASSERT_EQ(histogram.size(), 4u);
    for (const auto &[kind, n] : histogram) {
        EXPECT_NEAR(static_cast<double>(n) / total, 0.25, 0.03) << gate_kind_name(kind);
    }
}

TEST(scaling_sweep, small_sweep_rows_and_csv) {
    BenchConfig config;
    config.dims = {2, 3};
    config.depth = 5;
    config.budget_seconds = 5;
    config.max_qudits = 4;
    config.seed = 7;
    auto rows = scaling_sweep(config);
    ASSERT_EQ(rows.size(), 8u);
    for (const auto &row : rows) {
        EXPECT_TRUE(row.completed);
        EXPECT_GE(row.wall_seconds, 0.0);
        EXPECT_EQ(row.seed, bench_row_seed(7, row.dimension, row.n_qudits));
    }
    auto lines = csv_lines(bench_csv(rows));
    ASSERT_EQ(lines.size(), 9u);
    EXPECT_EQ(lines[0], "dimension,n_qudits,wall_seconds,completed,seed");
    EXPECT_EQ(lines[1].rfind("2,1,", 0), 0u);
    EXPECT_EQ(frontier(rows), (std::vector<std::pair<int, int>>{{2, 4}, {3, 4}}));
    EXPECT_TRUE(frontier_non_increasing(rows));
}

TEST(scaling_sweep, tiny_budget_stops_at_first_point) {
    BenchConfig config;
    config.dims = {1024};
    config.depth = 40;
    config.budget_seconds = 1e-6;
    config.seed = 1;
    auto rows = scaling_sweep(config);
    ASSERT_FALSE(rows.empty());
    EXPECT_FALSE(rows.back().completed);
    EXPECT_EQ(frontier(rows).front().second, static_cast<int>(rows.size()) - 1);
}

TEST(scaling_sweep, amplitude_cap_records_incomplete_point) {
    BenchConfig config;
    config.dims = {16};
    config.depth = 2;
    config.budget_seconds = 5;
    config.max_amplitudes = 4096;
    config.seed = 3;
    auto rows = scaling_sweep(config);
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_TRUE(rows[2].completed);
    EXPECT_FALSE(rows[3].completed);
    EXPECT_EQ(rows[3].wall_seconds, 0.0);
}

TEST(frontier, detects_growth) {
    std::vector<BenchRow> rows{{2, 1, 0.1, true, 0}, {2, 2, 0.1, false, 0}, {3, 1, 0.1, true, 0},
        {3, 2, 0.1, true, 0}, {3, 3, 0.1, false, 0}};
    EXPECT_FALSE(frontier_non_increasing(rows));
}

TEST(bench_config, validate) {
    BenchConfig ok;
    EXPECT_NO_THROW(ok.validate());
    auto expect_invalid = [](BenchConfig c) {
        EXPECT_THROW(c.validate(), Error);
    };
    BenchConfig c = ok;
    c.dims = {};
    expect_invalid(c);
    c = ok;
    c.dims = {1};
    expect_invalid(c);
    c = ok;
    c.depth = -1;
    expect_invalid(c);
    c = ok;
    c.budget_seconds = 0;
    expect_invalid(c);
    c = ok;
    c.repetitions = 0;
    expect_invalid(c);
}
