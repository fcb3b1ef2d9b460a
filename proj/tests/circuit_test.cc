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

#include <gtest/gtest.h>

#include <random>

#include "quditsim/error.h"
#include "test_support.h"

using namespace quditsim;

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

TEST(circuit_append, single_gate_registers_qudit) {
    Circuit c;
    c.append(GateSpec::h(3), {"q0"});
    ASSERT_EQ(c.ops().size(), 1u);
    ASSERT_EQ(c.qudits().size(), 1u);
    EXPECT_EQ(c.qudits()[0], (QuditRef{"q0", 3, 0}));
}

TEST(circuit_append, two_qudit_gate_auto_registers_target) {
    Circuit c;
    c.append(GateSpec::h(3), {"q0"});
    c.append(GateSpec::cnot(3), {"q0", "q1"});
    ASSERT_EQ(c.qudits().size(), 2u);
    EXPECT_EQ(c.qudits()[1], (QuditRef{"q1", 3, 1}));
    const auto &g = std::get<GateOp>(c.ops()[1]);
    EXPECT_EQ(op_wires(c.ops()[1]), (std::vector<size_t>{0, 1}));
    EXPECT_EQ(g.spec.kind, GateKind::CNOT);
}

TEST(circuit_append, dimension_mismatch_names_both_values) {
    Circuit c;
    c.add_qudit("q0", 3);
    try {
        c.append(GateSpec::cnot(4), {"q0", "q1"});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
        std::string msg = e.what();
        EXPECT_NE(msg.find("d=4"), std::string::npos) << msg;
        EXPECT_NE(msg.find("d=3"), std::string::npos) << msg;
    }
    // The failed append registered nothing.
    EXPECT_EQ(c.qudits().size(), 1u);
    EXPECT_TRUE(c.empty());
}

TEST(circuit_append, key_collision_and_wiring) {
    Circuit c;
    c.append(GateSpec::h(3), {"a"});
    c.append(GateSpec::h(3), {"b"});
    c.measure("a", "k");
    EXPECT_EQ(code_of([&] { c.measure("b", "k"); }), ErrorCode::KeyCollision);
    EXPECT_EQ(code_of([&] { c.append(GateSpec::cz(3), {"a", "a"}); }), ErrorCode::Wiring);
    EXPECT_EQ(code_of([&] { c.append(GateSpec::h(3), {"a", "b"}); }), ErrorCode::Arity);
}

TEST(circuit_append, rejects_mixed_dimension_two_qudit_gate) {
    Circuit c;
    c.add_qudit("a", 3);
    c.add_qudit("b", 4);
    EXPECT_EQ(code_of([&] { c.append(GateSpec::cnot(3), {"a", "b"}); }), ErrorCode::DimensionMismatch);
}

TEST(circuit_build, paper_style_two_qudit_circuit) {
    std::vector<BuildStep> steps{
        GateStep{GateKind::H, {"q0"}},
        GateStep{GateKind::CNOT, {"q0", "q1"}},
        MeasureStep{"q0"},
        MeasureStep{"q1"},
    };
    BuildResult r = build(3, steps);
    EXPECT_EQ(r.circuit.ops().size(), 4u);
    EXPECT_EQ(r.circuit.measurement_keys(), (std::vector<std::string>{"m_q0", "m_q1"}));
    ASSERT_EQ(r.order.size(), 2u);
    EXPECT_EQ(r.order[0].name, "q0");
    EXPECT_EQ(r.qudits.at("q1").dimension, 3);

    // Same circuit by manual appends.
    Circuit manual;
    manual.append(GateSpec::h(3), {"q0"});
    manual.append(GateSpec::cnot(3), {"q0", "q1"});
    manual.measure("q0", "m_q0");
    manual.measure("q1", "m_q1");
    EXPECT_EQ(manual, r.circuit);
}

TEST(circuit_build, leading_integer_step_sets_dimension) {
    std::vector<BuildStep> steps{DimensionStep{3}, GateStep{GateKind::H, {"q0"}}};
    EXPECT_EQ(build(std::nullopt, steps).circuit, build(3, std::span(steps).subspan(1)).circuit);
}

TEST(circuit_build, per_step_dimensions) {
    std::vector<BuildStep> steps{
        GateStep{GateKind::H, {"q0"}, 3},
        GateStep{GateKind::H, {"q1"}, 4},
        GateStep{GateKind::U8, {"q3"}, 5},
        GateStep{GateKind::U8, {"q4"}, 7},
    };
    BuildResult r = build(std::nullopt, steps);
    ASSERT_EQ(r.order.size(), 4u);
    EXPECT_EQ(r.order[0].dimension, 3);
    EXPECT_EQ(r.order[1].dimension, 4);
    EXPECT_EQ(r.circuit.profile().size(), static_cast<size_t>(3 * 4 * 5 * 7));
}

TEST(circuit_build, empty) {
    BuildResult r = build(std::nullopt, {});
    EXPECT_TRUE(r.circuit.empty());
    EXPECT_TRUE(r.qudits.empty());
    EXPECT_TRUE(r.order.empty());
}

TEST(circuit_build, errors) {
    std::vector<BuildStep> missing{GateStep{GateKind::H, {"q0"}}};
    EXPECT_EQ(code_of([&] { build(std::nullopt, missing); }), ErrorCode::MissingDimension);
    std::vector<BuildStep> conflict{GateStep{GateKind::H, {"q0"}, 3}, GateStep{GateKind::X, {"q0"}, 4}};
    EXPECT_EQ(code_of([&] { build(std::nullopt, conflict); }), ErrorCode::DimensionConflict);
    std::vector<BuildStep> redeclare{DeclareStep{"q0", 3}, DeclareStep{"q0", 5}};
    EXPECT_EQ(code_of([&] { build(std::nullopt, redeclare); }), ErrorCode::DimensionConflict);
    std::vector<BuildStep> arity{GateStep{GateKind::CNOT, {"q0"}}};
    EXPECT_EQ(code_of([&] { build(3, arity); }), ErrorCode::Arity);
}

TEST(circuit_build, registered_dimension_beats_ambient) {
    std::vector<BuildStep> steps{
        DimensionStep{3}, GateStep{GateKind::H, {"q0"}}, DimensionStep{5}, GateStep{GateKind::CNOT, {"q0", "q1"}},
        GateStep{GateKind::H, {"q2"}}};
    BuildResult r = build(std::nullopt, steps);
    EXPECT_EQ(r.qudits.at("q1").dimension, 3);
    EXPECT_EQ(r.qudits.at("q2").dimension, 5);
}

TEST(moments, examples) {
    Circuit c;
    c.append(GateSpec::h(3), {"q0"});
    c.append(GateSpec::cnot(3), {"q0", "q1"});
    EXPECT_EQ(moments(c), (std::vector<std::vector<size_t>>{{0}, {1}}));

    Circuit parallel;
    parallel.append(GateSpec::h(3), {"q0"});
    parallel.append(GateSpec::h(3), {"q1"});
    EXPECT_EQ(moments(parallel), (std::vector<std::vector<size_t>>{{0, 1}}));

    EXPECT_TRUE(moments(Circuit{}).empty());
}

TEST(moments, disjoint_wires_and_order_preserved) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; trial++) {
        Circuit c = quditsim::testing::random_clifford_circuit(rng, 5, 3, 15);
        auto ms = moments(c);
        std::vector<size_t> slot_of(c.ops().size());
        size_t count = 0;
        for (size_t m = 0; m < ms.size(); m++) {
            std::vector<bool> used(c.qudits().size(), false);
            for (size_t k : ms[m]) {
                slot_of[k] = m;
                count++;
                for (size_t w : op_wires(c.ops()[k])) {
                    ASSERT_FALSE(used[w]);
                    used[w] = true;
                }
            }
        }
        ASSERT_EQ(count, c.ops().size());
        // Ops sharing a wire keep program order across moments.
        for (size_t a = 0; a < c.ops().size(); a++) {
            for (size_t b = a + 1; b < c.ops().size(); b++) {
                auto wa = op_wires(c.ops()[a]), wb = op_wires(c.ops()[b]);
                bool share = std::any_of(wa.begin(), wa.end(), [&](size_t w) {
                    return std::find(wb.begin(), wb.end(), w) != wb.end();
                });
                if (share) {
                    ASSERT_LT(slot_of[a], slot_of[b]);
                }
            }
        }
    }
}

TEST(full_unitary, examples) {
    Circuit idle;
    idle.add_qudit("q0", 3);
    idle.add_qudit("q1", 3);
    EXPECT_TRUE(approx_equal(full_unitary(idle), DenseMatrix::identity(9), 0));

    Circuit one = idle;
    one.append(GateSpec::h(3), {"q0"});
    EXPECT_LE(full_unitary(one).max_abs_diff(kron(quditsim::testing::fourier(3), DenseMatrix::identity(3))), 1e-14);

    DenseMatrix u = full_unitary(ghz_circuit(3, 3, false));
    for (size_t i = 0; i < 27; i++) {
        double expected = (i == 0 || i == 13 || i == 26) ? 1 / std::sqrt(3.0) : 0.0;
        EXPECT_NEAR(std::abs(u(i, 0)), expected, 1e-12) << i;
    }
}

TEST(full_unitary, reversed_and_non_adjacent_wires) {
    // CNOT with control on the last wire and target on the first, over [3,2,3] -> wires 0 and 2 are d=3.
    Circuit c;
    c.add_qudit("a", 3);
    c.add_qudit("b", 2);
    c.add_qudit("c", 3);
    c.append(GateSpec::cnot(3), {"c", "a"});
    DenseMatrix u = full_unitary(c);
    RadixProfile p({3, 2, 3});
    for (size_t j = 0; j < p.size(); j++) {
        auto digits = p.decode(j);
        digits[0] = (digits[0] + digits[2]) % 3;
        size_t i = p.encode(digits);
        EXPECT_EQ(u(i, j), Cplx(1)) << j;
    }
    EXPECT_TRUE(is_unitary(u, 1e-12));
}

TEST(full_unitary, errors) {
    Circuit m = ghz_circuit(3, 2, true);
    EXPECT_EQ(code_of([&] { full_unitary(m); }), ErrorCode::UnsupportedOp);
    Circuit big = ghz_circuit(5, 6, false);
    EXPECT_EQ(code_of([&] { full_unitary(big); }), ErrorCode::Size);
}

TEST(full_unitary, unitary_and_composes) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; trial++) {
        Circuit a = quditsim::testing::random_clifford_circuit(rng, 3, 4, 6);
        Circuit b;
        for (const auto &q : a.qudits()) {
            b.add_qudit(q.name, q.dimension);
        }
        // Second half acts on the same registry.
        std::uniform_int_distribution<size_t> pick(0, a.qudits().size() - 1);
        int d = a.qudits()[0].dimension;
        for (int g = 0; g < 5; g++) {
            b.append(GateSpec::h(d), {a.qudits()[pick(rng)].name});
            b.append(GateSpec::s(d), {a.qudits()[pick(rng)].name});
        }
        Circuit joined = a;
        joined.extend(b);
        DenseMatrix ua = full_unitary(a), ub = full_unitary(b), uab = full_unitary(joined);
        EXPECT_TRUE(is_unitary(uab, 1e-10));
        EXPECT_LE(uab.max_abs_diff(ub * ua), 1e-10);
    }
}
