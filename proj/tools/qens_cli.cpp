// Copyright 2026 The qens Authors
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

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qens/cli/commands.hpp"

namespace {

std::string echo_command(int argc, char** argv) {
    std::ostringstream os;
    for (int i = 1; i < argc; ++i) os << (i > 1 ? " " : "") << argv[i];
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    using namespace qens::cli;

    CLI::App app{"Quantumness of quantum ensembles via commutator norms"};
    app.require_subcommand(1);

    std::string compute_path;
    std::string compute_norm = "trace";
    auto* compute = app.add_subcommand("compute", "Print the quantumness of an ensemble file");
    compute->add_option("file", compute_path, "Ensemble JSON file")->required();
    compute->add_option("--norm", compute_norm,
                        "trace | frobenius | spectral | schatten:<p> | kyfan:<k>");

    SweepOptions sweep_opt;
    auto* sweep = app.add_subcommand("sweep", "Tabulate closed form against the matrix pipeline");
    sweep->add_option("example", sweep_opt.example, "bloch-angle | phase-damping | overlap")->required();
    sweep->add_option("--alpha", sweep_opt.alpha, "Angle between Bloch vectors (radians), start:stop:step");
    sweep->add_option("--lambda", sweep_opt.lambda, "Phase damping strength grid");
    sweep->add_option("--theta", sweep_opt.theta,
                      "Polar angle (phase-damping, default pi/4) or overlap phase (overlap, default 0)");
    sweep->add_option("--phi", sweep_opt.phi, "Azimuthal angle grid (phase-damping)");
    sweep->add_option("--c", sweep_opt.c, "Overlap modulus grid (overlap)");
    sweep->add_option("--p1", sweep_opt.p1, "Probability of the first member");
    sweep->add_option("--r1", sweep_opt.r1, "Length of the first Bloch vector (bloch-angle)");
    sweep->add_option("--r2", sweep_opt.r2, "Length of the second Bloch vector (bloch-angle)");
    sweep->add_option("--dim", sweep_opt.dim, "Hilbert space dimension (overlap)");
    sweep->add_option("--out", sweep_opt.out_path, "CSV output path (default stdout)");

    PropertyConfig prop;
    std::string prop_norm = "trace";
    std::optional<std::size_t> only_trial;
    auto* check = app.add_subcommand("check-properties", "Randomized check of the measure's properties");
    check->add_option("--dim", prop.dim, "State dimension (>= 2)");
    check->add_option("--members", prop.members, "Members per ensemble (>= 2)");
    check->add_option("--trials", prop.trials, "Number of trials (>= 1)");
    check->add_option("--seed", prop.seed, "Base seed");
    check->add_option("--norm", prop_norm, "trace | frobenius | spectral | schatten:<p> | kyfan:<k>");
    check->add_option("--only-trial", only_trial, "Replay a single trial index");

    std::string examples_dir;
    std::uint64_t examples_seed = 1;
    auto* examples = app.add_subcommand("examples", "Write the six worked-example artifacts");
    examples->add_option("--out", examples_dir, "Output directory")->required();
    examples->add_option("--seed", examples_seed, "Seed for the randomized rows");

    RandomOptions rand_opt;
    auto* random = app.add_subcommand("random", "Write a reproducible random ensemble file");
    random->add_option("--dim", rand_opt.dim, "State dimension");
    random->add_option("--members", rand_opt.members, "Number of members");
    random->add_option("--rank", rand_opt.rank, "Rank of every member (default: dim)");
    random->add_option("--seed", rand_opt.seed, "Seed");
    random->add_option("--out", rand_opt.out_path, "Output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (*compute) return cmd_compute(compute_path, compute_norm, std::cout, std::cerr);
    if (*sweep) return cmd_sweep(sweep_opt, std::cout, std::cerr);
    if (*check) {
        try {
            prop.norm = parse_norm_spec(prop_norm);
        } catch (const qens::Error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitUsage;
        }
        prop.only_trial = only_trial;
        return cmd_check_properties(prop, "check-properties " + echo_command(argc - 1, argv + 1),
                                    std::cout, std::cerr);
    }
    if (*examples) return cmd_examples(examples_dir, examples_seed, std::cout, std::cerr);
    if (*random) return cmd_random(rand_opt, std::cout, std::cerr);
    return kExitUsage;
}
