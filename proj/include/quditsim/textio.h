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

#ifndef QUDITSIM_TEXTIO_H
#define QUDITSIM_TEXTIO_H

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "quditsim/circuit.h"
#include "quditsim/numerics.h"
#include "quditsim/simulator.h"

namespace quditsim {

// Statements of the .qdc circuit format:
//
//   # comment              (also allowed after a statement)
//   dim <d>                set the ambient dimension
//   qudit <name> [<d>]     register a qudit, optionally at its own dimension
//   <GATE>[^<k>] <name>... apply X Z H S U8 CNOT CZ, optionally raised to k
//   M <name> [<key>]       measure; the key defaults to m_<name>
//
// Names and keys are [A-Za-z0-9_]+.
struct DimStatement {
    int dimension;
    bool operator==(const DimStatement &) const = default;
};
struct QuditStatement {
    std::string name;
    std::optional<int> dimension;
    bool operator==(const QuditStatement &) const = default;
};
struct GateStatement {
    GateKind kind;
    int power = 1;
    std::vector<std::string> names;
    bool operator==(const GateStatement &) const = default;
};
struct MeasureStatement {
    std::string name;
    std::optional<std::string> key;
    bool operator==(const MeasureStatement &) const = default;
};
using Statement = std::variant<DimStatement, QuditStatement, GateStatement, MeasureStatement>;

/// Parsed file. A leading `dim` line becomes `default_dimension`; `lines`
/// holds the source line of each statement and is ignored by ==.
struct CircuitDocument {
    std::optional<int> default_dimension;
    std::vector<Statement> statements;
    std::vector<size_t> lines;

    bool operator==(const CircuitDocument &other) const {
        return default_dimension == other.default_dimension && statements == other.statements;
    }
};

CircuitDocument parse_document(std::string_view text);
/// Canonical text: one statement per line, no comments.
std::string render_document(const CircuitDocument &doc);
BuildResult build_document(const CircuitDocument &doc);
BuildResult parse_circuit(std::string_view text);

/// Python-style complex text, e.g. "(0.5773502691896258+0j)", "(1-1j)".
std::string format_complex(Cplx value);

/// "Final state vector:" followed by one "|digits⟩: value" line per amplitude
/// with magnitude >= threshold. Digits are comma separated when any qudit has
/// d > 10. `labels`, when given, must name every qudit in wire order.
std::string format_state(
    const StateVector &state, std::span<const std::string> labels = {}, double threshold = 1e-6);

enum class MatrixStyle { Float, Int, Str };
std::optional<MatrixStyle> parse_matrix_style(std::string_view name);

/// Nested-bracket grid of quoted entries, e.g. "[['1' '0']\n ['0' '-1']]".
std::string format_matrix(const DenseMatrix &m, MatrixStyle style = MatrixStyle::Float);

/// "key=digits" per measurement key. Digits are concatenated, or comma
/// separated for keys whose qudit has d > 10.
std::string format_run(const RunResult &result);

/// Command-line entry point. Returns 0 on success, 1 on usage errors and 2 on
/// circuit or validation errors.
int run_cli(std::span<const std::string> args, std::ostream &out, std::ostream &err);

}  // namespace quditsim

#endif
