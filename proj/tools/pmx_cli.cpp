// Copyright 2026 The pmx Authors
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

// pmx command-line front end. Exit codes: 0 success, 1 domain failure,
// 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "pmx/bound_optimizer.hpp"
#include "pmx/io.hpp"
#include "pmx/werner_scan.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kDomainFailure = 1;
constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MakeArgs {
    std::string preset;
    std::optional<double> eta1;
    std::optional<double> eta2;
    int sign = 1;
    std::string out;
};

struct PlayArgs {
    std::string process;
    std::string strategy;
};

struct OptimizeArgs {
    std::string process;
    int restarts = 64;
    int max_iterations = 2000;
    std::uint64_t seed = 42;
    bool general_tensors = false;
};

struct DistanceArgs {
    double eta1 = 0;
    double eta2 = 0;
};

struct ScanArgs {
    int grid = 201;
    std::string out;
};

void emit(const pmx::Json &doc) { std::cout << doc.dump(2) << '\n'; }

// Loads and validates a process file; prints the report to stderr when the
// process is rejected.
std::optional<pmx::ProcessMatrix> load_valid_process(const std::string &path) {
    pmx::ProcessMatrix w = pmx::process_from_json(pmx::read_json_file(path));
    const pmx::ValidityReport report = pmx::validate_process(w);
    if (!report.valid()) {
        std::cerr << "invalid process: " << path << '\n' << pmx::report_to_json(report).dump(2) << '\n';
        return std::nullopt;
    }
    return w;
}

int run_make(const MakeArgs &args) {
    std::optional<pmx::ProcessMatrix> w;
    if (args.preset == "ocb") {
        w = pmx::make_ocb();
    } else if (args.preset == "noise") {
        w = pmx::make_noise();
    } else if (args.preset == "werner") {
        if (!args.eta1 || !args.eta2) throw UsageError("--preset werner needs --eta1 and --eta2");
        w = pmx::make_werner({*args.eta1, *args.eta2});
    } else if (args.preset == "causal-ab") {
        w = pmx::make_causal_channel(pmx::SignalDirection::AToB, args.sign);
    } else {
        w = pmx::make_causal_channel(pmx::SignalDirection::BToA, args.sign);
    }
    const pmx::Json doc = pmx::process_to_json(*w);
    if (args.out.empty()) {
        emit(doc);
    } else {
        pmx::write_json_file(args.out, doc);
    }
    return kOk;
}

int run_validate(const std::string &path) {
    const pmx::ProcessMatrix w = pmx::process_from_json(pmx::read_json_file(path));
    const pmx::ValidityReport report = pmx::validate_process(w);
    emit(pmx::report_to_json(report));
    return report.valid() ? kOk : kDomainFailure;
}

int run_play(const PlayArgs &args) {
    const auto w = load_valid_process(args.process);
    if (!w) return kDomainFailure;
    const pmx::StrategyPair s = pmx::strategy_from_json(pmx::read_json_file(args.strategy));
    pmx::validate_strategy(s);
    emit(pmx::distribution_to_json(pmx::joint_distribution(*w, s)));
    return kOk;
}

int run_optimize(const OptimizeArgs &args) {
    const auto w = load_valid_process(args.process);
    if (!w) return kDomainFailure;
    pmx::OptimizerConfig cfg;
    cfg.restarts = args.restarts;
    cfg.max_iterations = args.max_iterations;
    cfg.seed = args.seed;
    cfg.general_tensors = args.general_tensors;
    emit(pmx::optimization_to_json(pmx::maximize_success(*w, cfg)));
    return kOk;
}

int run_distance(const DistanceArgs &args) {
    const pmx::WernerParams p{args.eta1, args.eta2};
    pmx::require_valid_werner(p);
    const bool separable = pmx::is_causally_separable_werner(p);
    pmx::Json doc;
    doc["eta1"] = p.eta1;
    doc["eta2"] = p.eta2;
    doc["distance"] = pmx::geometric_distance_werner(p);
    doc["separable"] = separable;
    doc["verdict"] = separable ? "separable" : "non-separable";
    emit(doc);
    return kOk;
}

int run_scan(const ScanArgs &args) {
    const auto rows = pmx::scan_werner(args.grid);
    if (args.out.empty()) {
        pmx::write_scan_csv(std::cout, rows);
        return kOk;
    }
    std::ofstream out(args.out);
    if (!out) throw std::runtime_error("cannot write " + args.out);
    pmx::write_scan_csv(out, rows);
    if (!out) throw std::runtime_error("write failed: " + args.out);
    return kOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Process-matrix toolkit: build, validate and play bipartite processes"};
    app.require_subcommand(1, 1);

    MakeArgs make;
    auto *make_cmd = app.add_subcommand("make", "Write a preset process as JSON");
    make_cmd->add_option("--preset", make.preset, "ocb, noise, werner, causal-ab or causal-ba")
        ->required()
        ->check(CLI::IsMember({"ocb", "noise", "werner", "causal-ab", "causal-ba"}));
    make_cmd->add_option("--eta1", make.eta1, "Werner weight of Z(A2) Z(B1)");
    make_cmd->add_option("--eta2", make.eta2, "Werner weight of Z(A1) X(B1) Z(B2)");
    make_cmd->add_option("--sign", make.sign, "Sign of the signalling term for causal presets")
        ->check(CLI::IsMember({-1, 1}));
    make_cmd->add_option("--out", make.out, "Output path (stdout if omitted)");

    std::string validate_path;
    auto *validate_cmd = app.add_subcommand("validate", "Check a process file; exit 1 if invalid");
    validate_cmd->add_option("path", validate_path, "Process JSON")->required()->check(CLI::ExistingFile);

    PlayArgs play;
    auto *play_cmd = app.add_subcommand("play", "Joint distribution and success probability");
    play_cmd->add_option("--w", play.process, "Process JSON")->required()->check(CLI::ExistingFile);
    play_cmd->add_option("--strategy", play.strategy, "Strategy JSON")->required()->check(CLI::ExistingFile);

    OptimizeArgs optimize;
    auto *optimize_cmd = app.add_subcommand("optimize", "Maximise the success probability over strategies");
    optimize_cmd->add_option("--w", optimize.process, "Process JSON")->required()->check(CLI::ExistingFile);
    optimize_cmd->add_option("--restarts", optimize.restarts, "Random starts per (F, G) pair")
        ->check(CLI::PositiveNumber);
    optimize_cmd->add_option("--max-iterations", optimize.max_iterations, "Nelder-Mead iterations per start")
        ->check(CLI::PositiveNumber);
    optimize_cmd->add_option("--seed", optimize.seed, "Random seed");
    optimize_cmd->add_flag("--general-tensors", optimize.general_tensors,
                           "Free 3x3 correlation tensors with rejection");

    DistanceArgs distance;
    auto *distance_cmd = app.add_subcommand("distance", "Werner-family distance to the separable set");
    distance_cmd->add_option("--eta1", distance.eta1)->required();
    distance_cmd->add_option("--eta2", distance.eta2)->required();

    ScanArgs scan;
    auto *scan_cmd = app.add_subcommand("scan-werner", "CSV scan of the Werner plane");
    scan_cmd->add_option("--grid", scan.grid, "Points per axis")->check(CLI::Range(2, 100000));
    scan_cmd->add_option("--out", scan.out, "CSV path (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        if (*make_cmd) return run_make(make);
        if (*validate_cmd) return run_validate(validate_path);
        if (*play_cmd) return run_play(play);
        if (*optimize_cmd) return run_optimize(optimize);
        if (*distance_cmd) return run_distance(distance);
        if (*scan_cmd) return run_scan(scan);
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDomainFailure;
    }
    return kUsageError;
}
