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

#include <gtest/gtest.h>

#include <random>

#include "quditsim/error.h"
#include "test_support.h"

using namespace quditsim;
using quditsim::testing::near;

namespace {

ErrorCode code_of(auto &&fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorCode::Validation;
}

}  // namespace

TEST(basis_state, examples) {
    std::vector<int> three{3};
    StateVector s = basis_state(RadixProfile({10}), three);
    ASSERT_EQ(s.size(), 10u);
    for (size_t k = 0; k < 10; k++) {
        EXPECT_EQ(s[k], Cplx(k == 3 ? 1 : 0));
    }
    std::vector<int> zeros{0, 0};
    EXPECT_EQ(basis_state(RadixProfile({3, 3}), zeros)[0], Cplx(1));
    std::vector<int> mixed{1, 2};
    EXPECT_EQ(basis_state(RadixProfile({2, 3}), mixed)[5], Cplx(1));
    std::vector<int> bad{0, 3};
    EXPECT_EQ(code_of([&] { basis_state(RadixProfile({2, 3}), bad); }), ErrorCode::Bounds);
}

TEST(apply_gate, hadamard_on_zero) {
    StateVector s(RadixProfile({3}));
    std::vector<size_t> w{0};
    apply_gate(s, h_matrix(3), w);
    for (size_t k = 0; k < 3; k++) {
        EXPECT_TRUE(near(s[k], 1 / std::sqrt(3.0), 1e-15));
    }
}

TEST(apply_gate, bell_like_qutrit_pair) {
    StateVector s(RadixProfile({3, 3}));
    std::vector<size_t> w0{0}, w01{0, 1};
    apply_gate(s, h_matrix(3), w0);
    apply_gate(s, cnot_matrix(3), w01);
    for (size_t k = 0; k < 9; k++) {
        double expected = (k == 0 || k == 4 || k == 8) ? 1 / std::sqrt(3.0) : 0.0;
        EXPECT_NEAR(std::abs(s[k]), expected, 1e-12) << k;
    }
}

TEST(apply_gate, gate_then_adjoint_restores_state) {
    std::mt19937_64 rng(3);
    RadixProfile p({3, 2, 4});
    StateVector s(p, quditsim::testing::random_state(p.size(), rng));
    StateVector original = s;
    DenseMatrix u = kron(h_matrix(4), s_matrix(3)) * kron(z_matrix(4), x_matrix(3));
    std::vector<size_t> wires{2, 0};
    apply_gate(s, u, wires);
    EXPECT_NEAR(s.norm_squared(), 1.0, 1e-10);
    apply_gate(s, u.adjoint(), wires);
    for (size_t k = 0; k < p.size(); k++) {
        EXPECT_TRUE(near(s[k], original[k], 1e-10));
    }
}

TEST(apply_gate, errors) {
    StateVector s(RadixProfile({3, 3}));
    std::vector<size_t> one{0}, twice{1, 1}, out_of_range{2};
    EXPECT_EQ(code_of([&] { apply_gate(s, h_matrix(2), one); }), ErrorCode::DimensionMismatch);
    EXPECT_EQ(code_of([&] { apply_gate(s, cnot_matrix(3), twice); }), ErrorCode::Wiring);
    EXPECT_EQ(code_of([&] { apply_gate(s, h_matrix(3), out_of_range); }), ErrorCode::Wiring);
}

TEST(simulate, ghz3_amplitudes) {
    auto r = simulate(ghz_circuit(3, 3, false));
    for (size_t k = 0; k < 27; k++) {
        if (k == 0 || k == 13 || k == 26) {
            EXPECT_NEAR(std::abs(r.final_state[k]), 0.5773502, 1e-6);
        } else {
            EXPECT_LT(std::abs(r.final_state[k]), 1e-6);
        }
    }
}

TEST(simulate, two_hadamards) {
    Circuit c;
    c.append(GateSpec::h(3), {"q0"});
    c.append(GateSpec::h(3), {"q1"});
    auto r = simulate(c);
    for (size_t k = 0; k < 9; k++) {
        EXPECT_NEAR(std::abs(r.final_state[k]), 0.3333333, 1e-6);
    }
}

TEST(simulate, empty_circuit_returns_initial) {
    Circuit c;
    c.add_qudit("a", 3);
    c.add_qudit("b", 2);
    std::mt19937_64 rng(1);
    StateVector init(c.profile(), quditsim::testing::random_state(6, rng));
    auto r = simulate(c, init);
    for (size_t k = 0; k < 6; k++) {
        EXPECT_EQ(r.final_state[k], init[k]);
    }
    EXPECT_EQ(code_of([&] { simulate(c, StateVector(RadixProfile({2, 3}))); }), ErrorCode::DimensionMismatch);
}

TEST(simulate, mixed_dimensions) {
    Circuit c;
    c.append(GateSpec::h(3), {"q0"});
    c.append(GateSpec::h(4), {"q1"});
    auto r = simulate(c);
    ASSERT_EQ(r.final_state.size(), 12u);
    for (size_t k = 0; k < 12; k++) {
        EXPECT_NEAR(std::abs(r.final_state[k]), 1 / std::sqrt(12.0), 1e-10);
    }
}

TEST(simulate, matches_dense_oracle) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 60; trial++) {
        Circuit c = quditsim::testing::random_clifford_circuit(rng, 4, 5, 12);
        RadixProfile p = c.profile();
        StateVector init(p, quditsim::testing::random_state(p.size(), rng));
        auto expected = quditsim::testing::apply_dense(full_unitary(c), init.amplitudes());
        auto got = simulate(c, init).final_state;
        for (size_t k = 0; k < p.size(); k++) {
            ASSERT_TRUE(near(got[k], expected[k], 1e-10)) << trial << " " << k;
        }
    }
}

TEST(simulate, norm_preserved_after_every_op) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; trial++) {
        Circuit full = quditsim::testing::random_clifford_circuit(rng, 4, 5, 12);
        for (size_t k = 0; k < full.qudits().size(); k += 2) {
            full.measure(full.qudits()[k].name, "m" + std::to_string(k));
        }
        full.append(GateSpec::h(full.qudits()[0].dimension), {full.qudits()[0].name});
        Circuit prefix;
        for (const auto &q : full.qudits()) {
            prefix.add_qudit(q.name, q.dimension);
        }
        for (const auto &op : full.ops()) {
            prefix.append(op);
            EXPECT_NEAR(simulate(prefix, std::nullopt, 5).final_state.norm_squared(), 1.0, 1e-8);
        }
    }
}

TEST(simulate, repeated_measurement_agrees) {
    Circuit c;
    c.append(GateSpec::h(5), {"q"});
    c.measure("q", "first");
    c.measure("q", "second");
    for (uint64_t seed = 0; seed < 50; seed++) {
        auto r = simulate(c, std::nullopt, seed);
        EXPECT_EQ(r.measurements.digits("first"), r.measurements.digits("second"));
    }
    auto r = run(c, 200, 3, {.threads = 1, .sample_terminal = false});
    EXPECT_EQ(r.table.digits("first"), r.table.digits("second"));
}

TEST(simulate, mid_circuit_measurement_collapses) {
    // Measuring q0 in the middle, then copying it onto q1: q1 must read the same digit.
    Circuit c;
    c.append(GateSpec::h(3), {"q0"});
    c.measure("q0", "mid");
    c.append(GateSpec::cnot(3), {"q0", "q1"});
    c.measure("q1", "copy");
    EXPECT_FALSE(c.measurements_terminal());
    auto r = run(c, 300, 11);
    EXPECT_EQ(r.table.digits("mid"), r.table.digits("copy"));
}

TEST(run, ghz_registers_agree) {
    for (int d = 2; d <= 5; d++) {
        for (int n = 1; n <= 4; n++) {
            for (bool fast : {true, false}) {
                auto r = run(ghz_circuit(d, n, true), 10, 42, {.threads = 1, .sample_terminal = fast});
                const auto &first = r.table.digits("m_q0");
                for (int k = 1; k < n; k++) {
                    EXPECT_EQ(r.table.digits("m_q" + std::to_string(k)), first);
                }
                EXPECT_EQ(r.repetitions, 10u);
                EXPECT_EQ(r.table.repetitions(), 10u);
            }
        }
    }
}

TEST(run, uniform_qutrit_frequencies) {
    Circuit c;
    c.append(GateSpec::h(3), {"q"});
    c.measure("q", "m");
    for (bool fast : {true, false}) {
        auto r = run(c, 9000, 2024, {.threads = 1, .sample_terminal = fast});
        std::array<int, 3> counts{};
        for (int v : r.table.digits("m")) {
            counts[v]++;
        }
        for (int v = 0; v < 3; v++) {
            EXPECT_NEAR(counts[v] / 9000.0, 1 / 3.0, 0.03) << "digit " << v << " fast=" << fast;
        }
    }
}

TEST(run, deterministic_permutation) {
    Circuit c;
    c.append(GateSpec::x(4), {"q"});
    c.measure("q", "m");
    auto r = run(c, 25, 1);
    for (int v : r.table.digits("m")) {
        EXPECT_EQ(v, 1);
    }
}

TEST(run, same_seed_same_result_any_thread_count) {
    Circuit c = ghz_circuit(3, 3, false);
    c.measure("q1", "mid");
    c.append(GateSpec::h(3), {"q1"});
    c.measure("q0", "a");
    c.measure("q1", "b");
    c.measure("q2", "c");
    auto serial = run(c, 101, 77, {.threads = 1});
    EXPECT_EQ(serial, run(c, 101, 77, {.threads = 1}));
    EXPECT_EQ(serial, run(c, 101, 77, {.threads = 4}));
    EXPECT_EQ(serial.seed, 77u);
    EXPECT_NE(serial, run(c, 101, 78, {.threads = 1}));
}

TEST(run, fast_path_matches_reexecution_in_distribution) {
    // Joint distribution of a two-qutrit state with unequal weights.
    Circuit c;
    c.append(GateSpec::h(3), {"a"});
    c.append(GateSpec::s(3), {"a"});
    c.append(GateSpec::h(3), {"a"});
    c.append(GateSpec::cnot(3), {"a", "b"});
    c.append(GateSpec::h(3), {"b"});
    c.measure("a", "a");
    c.measure("b", "b");
    Circuit gates_only;
    for (const auto &op : c.ops()) {
        if (std::holds_alternative<GateOp>(op)) {
            gates_only.append(op);
        }
    }
    auto psi = simulate(gates_only).final_state;
    const size_t reps = 20000;
    for (bool fast : {true, false}) {
        auto r = run(c, reps, 5, {.threads = 1, .sample_terminal = fast});
        std::array<int, 9> counts{};
        for (size_t k = 0; k < reps; k++) {
            counts[r.table.digits("a")[k] * 3 + r.table.digits("b")[k]]++;
        }
        for (size_t i = 0; i < 9; i++) {
            EXPECT_NEAR(counts[i] / double(reps), std::norm(psi[i]), 0.015) << i << " fast=" << fast;
        }
    }
}

TEST(run, errors) {
    EXPECT_EQ(code_of([] { run(ghz_circuit(3, 2, false), 10, 1); }), ErrorCode::NothingToSample);
    EXPECT_EQ(code_of([] { run(ghz_circuit(3, 2, true), 0, 1); }), ErrorCode::InvalidArgument);
}

TEST(run, deadline_aborts) {
    Circuit c = ghz_circuit(2, 3, true);
    RunOptions options;
    options.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
    EXPECT_EQ(code_of([&] { run(c, 1, 1, options); }), ErrorCode::Timeout);
}
