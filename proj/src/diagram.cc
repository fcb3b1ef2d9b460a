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

#include <algorithm>
#include <string>

#include "quditsim/circuit.h"

namespace quditsim {

namespace {

std::string dim_suffix(int d) {
    return "(d=" + std::to_string(d) + ")";
}

// Negative powers use a "dg" suffix so glyphs never contain the wire dash.
std::string power_suffix(int power) {
    if (power == 1) {
        return "";
    }
    if (power < 0) {
        return power == -1 ? "dg" : "dg^" + std::to_string(-power);
    }
    return "^" + std::to_string(power);
}

// Glyph drawn on each wire of an op, in op wire order.
std::vector<std::string> glyphs(const CircuitOp &op) {
    if (const auto *m = std::get_if<MeasureOp>(&op)) {
        return {"M('" + m->key + "')"};
    }
    const auto &g = std::get<GateOp>(op);
    const auto &spec = g.spec;
    std::string pw = power_suffix(spec.power);
    switch (spec.kind) {
        case GateKind::CNOT:
            return {"C" + dim_suffix(spec.dims[0]), "X" + pw + dim_suffix(spec.dims[1])};
        case GateKind::CZ:
            return {"C" + dim_suffix(spec.dims[0]), "C" + pw + dim_suffix(spec.dims[1])};
        case GateKind::CUSTOM: {
            std::string name = spec.label.value_or("U");
            std::vector<std::string> out;
            for (int d : spec.dims) {
                out.push_back(name + pw + dim_suffix(d));
            }
            return out;
        }
        default:
            return {std::string(gate_kind_name(spec.kind)) + pw + dim_suffix(spec.dims[0])};
    }
}

struct Column {
    std::vector<size_t> ops;
    size_t width = 0;
};

std::pair<size_t, size_t> span_of(const CircuitOp &op) {
    auto wires = op_wires(op);
    auto [lo, hi] = std::minmax_element(wires.begin(), wires.end());
    return {*lo, *hi};
}

}  // namespace

std::string render_diagram(const Circuit &circuit) {
    const auto &qudits = circuit.qudits();
    if (qudits.empty()) {
        return "";
    }
    const auto &ops = circuit.ops();

    // A moment's ops touch disjoint wires, but a multi-wire op's connector also
    // crosses the rows between its wires; such moments are split into several
    // columns so connectors never pass through another cell.
    std::vector<Column> columns;
    for (const auto &moment : moments(circuit)) {
        std::vector<Column> split;
        std::vector<std::vector<bool>> occupied;
        for (size_t k : moment) {
            auto [lo, hi] = span_of(ops[k]);
            size_t target = 0;
            for (; target < split.size(); target++) {
                bool free = true;
                for (size_t r = lo; r <= hi; r++) {
                    free = free && !occupied[target][r];
                }
                if (free) {
                    break;
                }
            }
            if (target == split.size()) {
                split.emplace_back();
                occupied.emplace_back(qudits.size(), false);
            }
            split[target].ops.push_back(k);
            for (size_t r = lo; r <= hi; r++) {
                occupied[target][r] = true;
            }
        }
        columns.insert(columns.end(), split.begin(), split.end());
    }

    std::vector<std::vector<std::string>> cells(qudits.size(), std::vector<std::string>(columns.size()));
    for (size_t c = 0; c < columns.size(); c++) {
        for (size_t k : columns[c].ops) {
            auto wires = op_wires(ops[k]);
            auto text = glyphs(ops[k]);
            for (size_t j = 0; j < wires.size(); j++) {
                cells[wires[j]][c] = text[j];
                columns[c].width = std::max(columns[c].width, text[j].size());
            }
        }
    }

    std::vector<std::string> labels;
    size_t label_width = 0;
    for (const auto &q : qudits) {
        labels.push_back(q.name + " " + dim_suffix(q.dimension) + ": ");
        label_width = std::max(label_width, labels.back().size());
    }

    // Offset of each column's cell start within a row.
    std::vector<size_t> starts(columns.size());
    size_t pos = label_width;
    for (size_t c = 0; c < columns.size(); c++) {
        starts[c] = pos + 2;
        pos += 2 + columns[c].width;
    }

    std::string out;
    for (size_t r = 0; r < qudits.size(); r++) {
        std::string row = labels[r];
        row.resize(label_width, ' ');
        for (size_t c = 0; c < columns.size(); c++) {
            row += "--";
            std::string cell = cells[r][c];
            cell.resize(columns[c].width, '-');
            row += cell;
        }
        row += "--";
        out += row;
        out += '\n';

        if (r + 1 == qudits.size()) {
            break;
        }
        std::string connector(pos, ' ');
        for (size_t c = 0; c < columns.size(); c++) {
            for (size_t k : columns[c].ops) {
                auto [lo, hi] = span_of(ops[k]);
                if (lo <= r && r < hi) {
                    connector[starts[c] + (columns[c].width - 1) / 2] = '|';
                }
            }
        }
        connector.erase(connector.find_last_not_of(' ') + 1);
        out += connector;
        out += '\n';
    }
    return out;
}

}  // namespace quditsim
