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

#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qens/cli/examples.hpp"
#include "qens/cli/io.hpp"
#include "qens/cli/properties.hpp"
#include "qens/cli/sweep.hpp"
#include "qens/ensemble.hpp"
#include "qens/error.hpp"

namespace qens::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Prints M of the ensemble file under the given norm with 12 decimals.
inline int cmd_compute(const std::string& path, const std::string& norm_text, std::ostream& out,
                       std::ostream& err) {
    try {
        const NormSpec spec = parse_norm_spec(norm_text);
        const Ensemble ensemble = load_ensemble_file(path);
        out << format_measure(quantumness(ensemble, spec)) << "\n";
        return kExitOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

struct SweepOptions {
    std::string example;  ///< bloch-angle | phase-damping | overlap
    std::string alpha = "0:3.141592653589793:0.15707963267948966";
    std::string lambda = "0:1:0.01";
    std::string theta;  ///< defaults per example
    std::string phi = "0";
    std::string c = "0:1:0.01";
    std::string p1 = "0.5";
    std::string r1 = "1";
    std::string r2 = "1";
    std::size_t dim = 2;
    std::string out_path;  ///< empty: write to stdout
};

/// Writes the sweep CSV. Exits 1 if any row's formula and matrix columns differ
/// by more than 1e-9.
inline int cmd_sweep(const SweepOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        SweepResult result = [&] {
            if (opt.example == "bloch-angle") {
                return sweep_bloch_angle(parse_grid(opt.alpha), parse_grid(opt.p1),
                                         parse_grid(opt.r1), parse_grid(opt.r2));
            }
            if (opt.example == "phase-damping") {
                return sweep_phase_damping(parse_grid(opt.lambda),
                                           parse_grid(opt.theta.empty() ? "0.7853981633974483" : opt.theta),
                                           parse_grid(opt.phi), parse_grid(opt.p1));
            }
            if (opt.example == "overlap") {
                return sweep_overlap(parse_grid(opt.c), parse_grid(opt.p1),
                                     parse_grid(opt.theta.empty() ? "0" : opt.theta), opt.dim);
            }
            throw Error(ErrorKind::parse_error, "unknown sweep '" + opt.example +
                                                    "' (expected bloch-angle, phase-damping or overlap)");
        }();
        if (opt.out_path.empty()) {
            out << result.table.str();
        } else {
            result.table.write(opt.out_path);
        }
        const double worst = result.max_abs_diff();
        if (worst > kAgreementTolerance) {
            err << "formula and matrix columns disagree by " << format_double(worst) << "\n";
            return kExitViolation;
        }
        return kExitOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

/// Runs the randomized property suite and prints the report.
inline int cmd_check_properties(const PropertyConfig& config, const std::string& command,
                                std::ostream& out, std::ostream& err) {
    PropertyReport report;
    try {
        report = check_properties(config);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    out << format_report(report, command);
    return report.all_passed() ? kExitOk : kExitViolation;
}

/// Writes the six example artifacts to `dir`; exits 1 if any row fails.
inline int cmd_examples(const std::string& dir, std::uint64_t seed, std::ostream& out,
                        std::ostream& err) {
    try {
        const std::vector<ExampleArtifact> artifacts = build_examples(seed);
        write_examples(artifacts, dir);
        bool all = true;
        for (const auto& art : artifacts) {
            out << art.filename << ": " << (art.passed ? "PASS" : "FAIL") << " ("
                << art.table.rows().size() << " rows)\n";
            all = all && art.passed;
        }
        return all ? kExitOk : kExitViolation;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

struct RandomOptions {
    std::size_t dim = 2;
    std::size_t members = 2;
    std::optional<std::size_t> rank;  ///< defaults to dim (full rank)
    std::uint64_t seed = 0;
    std::string out_path;  ///< empty: write to stdout
};

/// Draws a reproducible random ensemble and writes it as an ensemble file.
inline int cmd_random(const RandomOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        if (opt.dim < 1 || opt.members < 1) {
            throw Error(ErrorKind::param_out_of_range, "need dim >= 1 and members >= 1");
        }
        const std::size_t rank = opt.rank.value_or(opt.dim);
        Rng rng(opt.seed);
        const std::vector<double> probs = detail::random_simplex(opt.members, rng);
        std::vector<Member> members;
        for (std::size_t i = 0; i < opt.members; ++i)
            members.push_back({probs[i], random_density_matrix(opt.dim, rank, rng)});
        const std::string text = ensemble_to_json(Ensemble(std::move(members)));
        if (opt.out_path.empty()) {
            out << text;
        } else {
            std::ofstream file(opt.out_path, std::ios::binary);
            if (!file) throw Error(ErrorKind::io_error, "cannot open '" + opt.out_path + "' for writing");
            file << text;
            if (!file) throw Error(ErrorKind::io_error, "failed writing '" + opt.out_path + "'");
        }
        return kExitOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace qens::cli
