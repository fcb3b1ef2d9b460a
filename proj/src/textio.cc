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

#include "quditsim/textio.h"

#include <charconv>
#include <cmath>

#include "quditsim/error.h"

namespace quditsim {

namespace {

struct Token {
    std::string_view text;
    size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    size_t k = 0;
    while (k < line.size()) {
        while (k < line.size() && (line[k] == ' ' || line[k] == '\t' || line[k] == '\r')) {
            k++;
        }
        if (k >= line.size()) {
            break;
        }
        size_t start = k;
        while (k < line.size() && line[k] != ' ' && line[k] != '\t' && line[k] != '\r') {
            k++;
        }
        out.push_back({line.substr(start, k - start), start + 1});
    }
    return out;
}

bool is_identifier(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
        if (!ok) {
            return false;
        }
    }
    return true;
}

std::optional<int> parse_int(std::string_view s) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        return std::nullopt;
    }
    return value;
}

class LineParser {
   public:
    LineParser(size_t line, std::vector<Token> tokens) : line_(line), tokens_(std::move(tokens)) {
    }

    [[noreturn]] void fail(const Token &at, const std::string &message, ErrorCode code = ErrorCode::Parse) const {
        throw ParseError(code, line_, at.column, message);
    }

    void expect_count(size_t lo, size_t hi, std::string_view usage) const {
        if (tokens_.size() < lo) {
            fail(tokens_.back(), "expected " + std::string(usage));
        }
        if (tokens_.size() > hi) {
            fail(tokens_[hi], "unexpected token '" + std::string(tokens_[hi].text) + "', expected " +
                                  std::string(usage));
        }
    }

    std::string name_at(size_t k) const {
        if (!is_identifier(tokens_[k].text)) {
            fail(tokens_[k], "invalid name '" + std::string(tokens_[k].text) + "'");
        }
        return std::string(tokens_[k].text);
    }

    int dimension_at(size_t k) const {
        auto d = parse_int(tokens_[k].text);
        if (!d) {
            fail(tokens_[k], "expected an integer dimension, got '" + std::string(tokens_[k].text) + "'");
        }
        if (*d < 2) {
            fail(tokens_[k], "dimension must be >= 2, got " + std::to_string(*d), ErrorCode::InvalidDimension);
        }
        return *d;
    }

    Statement parse() const {
        std::string_view head = tokens_[0].text;
        if (head == "dim") {
            expect_count(2, 2, "'dim <d>'");
            return DimStatement{dimension_at(1)};
        }
        if (head == "qudit") {
            expect_count(2, 3, "'qudit <name> [<d>]'");
            QuditStatement s{name_at(1), std::nullopt};
            if (tokens_.size() == 3) {
                s.dimension = dimension_at(2);
            }
            return s;
        }
        if (head == "M") {
            expect_count(2, 3, "'M <name> [<key>]'");
            MeasureStatement s{name_at(1), std::nullopt};
            if (tokens_.size() == 3) {
                s.key = name_at(2);
            }
            return s;
        }
        return parse_gate();
    }

   private:
    Statement parse_gate() const {
        std::string_view head = tokens_[0].text;
        std::string_view kind_text = head;
        int power = 1;
        if (auto caret = head.find('^'); caret != std::string_view::npos) {
            kind_text = head.substr(0, caret);
            auto p = parse_int(head.substr(caret + 1));
            if (!p) {
                fail(tokens_[0], "invalid gate power in '" + std::string(head) + "'");
            }
            power = *p;
        }
        auto kind = parse_gate_kind(kind_text);
        if (!kind) {
            fail(tokens_[0], "unknown gate '" + std::string(kind_text) + "'");
        }
        size_t arity = gate_kind_arity(*kind);
        if (tokens_.size() - 1 != arity) {
            fail(
                tokens_[0],
                std::string(kind_text) + " acts on " + std::to_string(arity) + " qudit(s), got " +
                    std::to_string(tokens_.size() - 1),
                ErrorCode::Arity);
        }
        GateStatement s{*kind, power, {}};
        for (size_t k = 1; k < tokens_.size(); k++) {
            s.names.push_back(name_at(k));
        }
        return s;
    }

    size_t line_;
    std::vector<Token> tokens_;
};

BuildStep to_step(const Statement &statement) {
    return std::visit(
        [](const auto &s) -> BuildStep {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, DimStatement>) {
                return DimensionStep{s.dimension};
            } else if constexpr (std::is_same_v<T, QuditStatement>) {
                return DeclareStep{s.name, s.dimension};
            } else if constexpr (std::is_same_v<T, GateStatement>) {
                return GateStep{s.kind, s.names, std::nullopt, s.power};
            } else {
                return MeasureStep{s.name, s.key};
            }
        },
        statement);
}

std::string shortest(double v) {
    if (v == 0) {
        v = std::signbit(v) ? -0.0 : 0.0;
    }
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

std::string ket(const RadixProfile &profile, size_t index) {
    auto digits = profile.decode(index);
    bool wide = false;
    for (int d : profile.dims()) {
        wide = wide || d > 10;
    }
    std::string out = "|";
    for (size_t k = 0; k < digits.size(); k++) {
        if (wide && k > 0) {
            out += ',';
        }
        out += std::to_string(digits[k]);
    }
    out += "⟩";
    return out;
}

std::string truncated_int(double v) {
    double t = std::trunc(v);
    if (t == 0) {
        return "0";
    }
    return std::to_string(static_cast<long long>(t));
}

std::string matrix_entry(Cplx v, MatrixStyle style) {
    bool real = std::abs(v.imag()) < 1e-12;
    switch (style) {
        case MatrixStyle::Int:
            if (real) {
                return truncated_int(v.real());
            } else {
                std::string im = truncated_int(v.imag());
                return "(" + truncated_int(v.real()) + (im[0] == '-' ? "" : "+") + im + "j)";
            }
        case MatrixStyle::Str:
            return real ? shortest(v.real()) : format_complex(v);
        case MatrixStyle::Float:
            break;
    }
    return format_complex(v);
}

}  // namespace

CircuitDocument parse_document(std::string_view text) {
    CircuitDocument doc;
    size_t line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        line_no++;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto tokens = tokenize(line);
        if (tokens.empty()) {
            continue;
        }
        Statement s = LineParser(line_no, std::move(tokens)).parse();
        if (doc.statements.empty() && !doc.default_dimension && std::holds_alternative<DimStatement>(s)) {
            doc.default_dimension = std::get<DimStatement>(s).dimension;
            continue;
        }
        doc.statements.push_back(std::move(s));
        doc.lines.push_back(line_no);
    }
    return doc;
}

std::string render_document(const CircuitDocument &doc) {
    std::string out;
    if (doc.default_dimension) {
        out += "dim " + std::to_string(*doc.default_dimension) + "\n";
    }
    for (const auto &statement : doc.statements) {
        std::visit(
            [&](const auto &s) {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, DimStatement>) {
                    out += "dim " + std::to_string(s.dimension);
                } else if constexpr (std::is_same_v<T, QuditStatement>) {
                    out += "qudit " + s.name;
                    if (s.dimension) {
                        out += " " + std::to_string(*s.dimension);
                    }
                } else if constexpr (std::is_same_v<T, GateStatement>) {
                    out += gate_kind_name(s.kind);
                    if (s.power != 1) {
                        out += "^" + std::to_string(s.power);
                    }
                    for (const auto &n : s.names) {
                        out += " " + n;
                    }
                } else {
                    out += "M " + s.name;
                    if (s.key) {
                        out += " " + *s.key;
                    }
                }
            },
            statement);
        out += '\n';
    }
    return out;
}

BuildResult build_document(const CircuitDocument &doc) {
    CircuitBuilder builder(doc.default_dimension);
    for (size_t k = 0; k < doc.statements.size(); k++) {
        try {
            builder.apply(to_step(doc.statements[k]));
        } catch (const ParseError &) {
            throw;
        } catch (const Error &e) {
            size_t line = k < doc.lines.size() ? doc.lines[k] : k + 1;
            throw ParseError(e.code(), line, 1, e.what());
        }
    }
    return builder.result();
}

BuildResult parse_circuit(std::string_view text) {
    return build_document(parse_document(text));
}

std::string format_complex(Cplx value) {
    std::string im = shortest(std::abs(value.imag()));
    bool negative = std::signbit(value.imag());
    return "(" + shortest(value.real()) + (negative ? "-" : "+") + im + "j)";
}

std::string format_state(const StateVector &state, std::span<const std::string> labels, double threshold) {
    if (!labels.empty() && labels.size() != state.profile().num_digits()) {
        throw Error(
            ErrorCode::InvalidArgument, "got " + std::to_string(labels.size()) + " labels for " +
                                            std::to_string(state.profile().num_digits()) + " qudits");
    }
    std::string out = "Final state vector:\n";
    auto amps = state.amplitudes();
    for (size_t i = 0; i < amps.size(); i++) {
        if (std::abs(amps[i]) >= threshold) {
            out += ket(state.profile(), i) + ": " + format_complex(amps[i]) + "\n";
        }
    }
    return out;
}

std::optional<MatrixStyle> parse_matrix_style(std::string_view name) {
    if (name == "float") {
        return MatrixStyle::Float;
    }
    if (name == "int") {
        return MatrixStyle::Int;
    }
    if (name == "str") {
        return MatrixStyle::Str;
    }
    return std::nullopt;
}

std::string format_matrix(const DenseMatrix &m, MatrixStyle style) {
    std::string out = "[";
    for (size_t r = 0; r < m.rows(); r++) {
        if (r > 0) {
            out += "\n ";
        }
        out += "[";
        for (size_t c = 0; c < m.cols(); c++) {
            if (c > 0) {
                out += " ";
            }
            out += "'" + matrix_entry(m(r, c), style) + "'";
        }
        out += "]";
    }
    out += "]";
    return out;
}

std::string format_run(const RunResult &result) {
    std::string out;
    for (const auto &e : result.table.entries()) {
        out += e.key + "=";
        for (size_t k = 0; k < e.digits.size(); k++) {
            if (e.dimension > 10 && k > 0) {
                out += ',';
            }
            out += std::to_string(e.digits[k]);
        }
        out += '\n';
    }
    return out;
}

}  // namespace quditsim
