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

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "quditsim/bench.h"
#include "quditsim/error.h"
#include "quditsim/textio.h"

namespace quditsim {

namespace {

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::InvalidArgument, "cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<int> parse_digits(const std::string &text) {
    std::vector<int> digits;
    if (text.find(',') != std::string::npos) {
        std::stringstream ss(text);
        std::string part;
        while (std::getline(ss, part, ',')) {
            try {
                size_t used = 0;
                digits.push_back(std::stoi(part, &used));
                if (used != part.size()) {
                    throw std::invalid_argument(part);
                }
            } catch (const std::exception &) {
                throw Error(ErrorCode::InvalidArgument, "invalid digit '" + part + "' in --initial");
            }
        }
        return digits;
    }
    for (char c : text) {
        if (c < '0' || c > '9') {
            throw Error(ErrorCode::InvalidArgument, std::string("invalid digit '") + c + "' in --initial");
        }
        digits.push_back(c - '0');
    }
    return digits;
}

uint64_t seed_or_entropy(const std::optional<uint64_t> &seed, std::ostream &err) {
    if (seed) {
        return *seed;
    }
    uint64_t s = entropy_seed();
    err << "seed=" << s << "\n";
    return s;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Simulate quantum circuits over qudits of arbitrary and mixed dimension.", "quditsim"};
    app.require_subcommand(1);

    std::string file;
    auto *diagram = app.add_subcommand("diagram", "Print the circuit diagram");
    diagram->add_option("file", file, "Circuit file (.qdc)")->required();

    double threshold = 1e-6;
    std::optional<std::string> initial;
    std::optional<uint64_t> seed;
    auto *simulate_cmd = app.add_subcommand("simulate", "Print the final state vector");
    simulate_cmd->add_option("file", file, "Circuit file (.qdc)")->required();
    simulate_cmd->add_option("--threshold", threshold, "Smallest amplitude magnitude to print");
    simulate_cmd->add_option("--initial", initial, "Initial basis state digits, e.g. 012 or 0,1,11");
    simulate_cmd->add_option("--seed", seed, "Seed for mid-circuit measurements");

    size_t reps = 0;
    unsigned threads = 1;
    auto *run_cmd = app.add_subcommand("run", "Sample measurement outcomes");
    run_cmd->add_option("file", file, "Circuit file (.qdc)")->required();
    run_cmd->add_option("--reps", reps, "Number of repetitions")->required();
    run_cmd->add_option("--seed", seed, "64-bit RNG seed");
    run_cmd->add_option("--threads", threads, "Worker threads for re-executed repetitions");

    BenchConfig config;
    std::string csv_path;
    auto *bench_cmd = app.add_subcommand("bench", "Time random circuits across dimensions and qudit counts");
    bench_cmd->add_option("--dims", config.dims, "Comma-separated dimensions")->delimiter(',');
    bench_cmd->add_option("--depth", config.depth, "Gates per circuit");
    bench_cmd->add_option("--budget", config.budget_seconds, "Wall-time budget per run, seconds");
    bench_cmd->add_option("--reps", config.repetitions, "Measurement repetitions per run");
    bench_cmd->add_option("--seed", seed, "64-bit RNG seed");
    bench_cmd->add_option("--max-qudits", config.max_qudits, "Largest qudit count to probe");
    bench_cmd->add_option("--max-amplitudes", config.max_amplitudes, "Largest state size to probe");
    bench_cmd->add_option("--out", csv_path, "Write CSV here instead of stdout");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        CLI::App *shown = &app;
        for (auto *sub : app.get_subcommands()) {
            shown = sub;
        }
        err << shown->help();
        return 1;
    }

    try {
        if (diagram->parsed()) {
            out << render_diagram(parse_circuit(read_file(file)).circuit);
        } else if (simulate_cmd->parsed()) {
            Circuit circuit = parse_circuit(read_file(file)).circuit;
            std::optional<StateVector> start;
            if (initial) {
                start = basis_state(circuit.profile(), parse_digits(*initial));
            }
            std::optional<uint64_t> used = seed;
            if (circuit.has_measurements()) {
                used = seed_or_entropy(seed, err);
            }
            auto result = simulate(circuit, std::move(start), used.value_or(0));
            out << format_state(result.final_state, {}, threshold);
        } else if (run_cmd->parsed()) {
            Circuit circuit = parse_circuit(read_file(file)).circuit;
            RunOptions options;
            options.threads = threads;
            auto result = run(circuit, reps, seed_or_entropy(seed, err), options);
            out << format_run(result);
        } else if (bench_cmd->parsed()) {
            config.seed = seed_or_entropy(seed, err);
            auto rows = scaling_sweep(config, &err);
            std::string csv = bench_csv(rows);
            if (csv_path.empty()) {
                out << csv;
            } else {
                std::ofstream f(csv_path, std::ios::binary);
                if (!f) {
                    throw Error(ErrorCode::InvalidArgument, "cannot write '" + csv_path + "'");
                }
                f << csv;
                out << "dimension,max_completed_n\n";
                for (const auto &[d, n] : frontier(rows)) {
                    out << d << "," << n << "\n";
                }
            }
            if (!frontier_non_increasing(rows)) {
                err << "warning: completed-qudit frontier grows with dimension on this machine\n";
            }
        }
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace quditsim
