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

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <numbers>
#include <string>
#include <vector>

#include "qens/cli/io.hpp"
#include "qens/cli/sweep.hpp"
#include "qens/derived.hpp"
#include "qens/ensemble.hpp"
#include "qens/rng.hpp"
#include "qens/states.hpp"

namespace qens::cli {

/// One reproduced worked example: a CSV table whose last column is PASS/FAIL.
struct ExampleArtifact {
    std::string filename;
    CsvTable table;
    bool passed = true;
};

namespace detail {

inline std::string status(double expected, double actual) {
    return std::abs(expected - actual) <= kAgreementTolerance ? "PASS" : "FAIL";
}

inline void add_checked_row(ExampleArtifact& art, std::vector<std::string> row, double expected,
                            double actual) {
    const std::string s = status(expected, actual);
    if (s != "PASS") art.passed = false;
    row.push_back(format_double(expected));
    row.push_back(format_double(actual));
    row.push_back(s);
    art.table.add_row(std::move(row));
}

inline BlochVector random_bloch(Rng& rng) {
    while (true) {
        const double x = rng.uniform(-1.0, 1.0);
        const double y = rng.uniform(-1.0, 1.0);
        const double z = rng.uniform(-1.0, 1.0);
        if (x * x + y * y + z * z <= 1.0) return BlochVector(x, y, z);
    }
}

inline double angle_between(const BlochVector& a, const BlochVector& b) {
    const double cx = a.y() * b.z() - a.z() * b.y();
    const double cy = a.z() * b.x() - a.x() * b.z();
    const double cz = a.x() * b.y() - a.y() * b.x();
    const double cross = std::sqrt(cx * cx + cy * cy + cz * cz);
    const double dot = a.x() * b.x() + a.y() * b.y() + a.z() * b.z();
    return std::atan2(cross, dot);
}

inline ExampleArtifact example_bloch_pair(Rng& rng) {
    ExampleArtifact art{"example1_bloch_pair.csv",
                        CsvTable({"p1", "r1x", "r1y", "r1z", "r2x", "r2y", "r2z", "alpha",
                                  "M_formula", "M_matrix", "status"})};
    std::vector<std::pair<BlochVector, BlochVector>> cases = {
        {BlochVector(1, 0, 0), BlochVector(0, 0, 1)},
        {BlochVector(0, 0, 1), BlochVector(0, 0, 0.5)},
        {BlochVector(0.6, 0, 0), BlochVector(0, 0.8, 0)},
    };
    std::vector<double> p1s = {0.5, 0.3, 0.9};
    for (int k = 0; k < 20; ++k) {
        cases.emplace_back(random_bloch(rng), random_bloch(rng));
        p1s.push_back(rng.uniform());
    }
    for (std::size_t k = 0; k < cases.size(); ++k) {
        const auto& [r1, r2] = cases[k];
        const double p1 = p1s[k];
        const double alpha = angle_between(r1, r2);
        const Ensemble e({{p1, density_from_bloch(r1)}, {1.0 - p1, density_from_bloch(r2)}});
        add_checked_row(art,
                        {format_double(p1), format_double(r1.x()), format_double(r1.y()),
                         format_double(r1.z()), format_double(r2.x()), format_double(r2.y()),
                         format_double(r2.z()), format_double(alpha)},
                        bloch_pair_quantumness(p1, 1.0 - p1, r1.length(), r2.length(), alpha),
                        quantumness(e, NormSpec::frobenius()));
    }
    return art;
}

inline ExampleArtifact example_phase_damping() {
    ExampleArtifact art{"example2_phase_damping.csv",
                        CsvTable({"p1", "theta", "phi", "lambda", "M_formula", "M_matrix",
                                  "nondecreasing", "status"})};
    const SweepResult sweep = sweep_phase_damping(parse_grid("0:1:0.05"), {std::numbers::pi / 4.0},
                                                  {0.3}, {0.5});
    for (std::size_t i = 0; i < sweep.formula.size(); ++i) {
        const bool monotone = i == 0 || sweep.matrix[i] >= sweep.matrix[i - 1] - kAgreementTolerance;
        std::vector<std::string> row = sweep.table.rows()[i];
        const bool agree = std::abs(sweep.formula[i] - sweep.matrix[i]) <= kAgreementTolerance;
        row.push_back(monotone ? "true" : "false");
        row.push_back(agree && monotone ? "PASS" : "FAIL");
        if (!(agree && monotone)) art.passed = false;
        art.table.add_row(std::move(row));
    }
    return art;
}

inline ExampleArtifact example_overlap() {
    ExampleArtifact art{"example3_overlap.csv",
                        CsvTable({"p1", "theta", "c", "M_formula", "M_matrix", "status"})};
    std::vector<double> cs = parse_grid("0:1:0.05");
    cs.push_back(std::numbers::sqrt2 / 2.0);
    const SweepResult sweep = sweep_overlap(cs, {0.5, 0.2}, {0.0, 1.1}, 3);
    for (std::size_t i = 0; i < sweep.formula.size(); ++i) {
        std::vector<std::string> row = sweep.table.rows()[i];
        row.pop_back();
        row.pop_back();
        add_checked_row(art, std::move(row), sweep.formula[i], sweep.matrix[i]);
    }
    return art;
}

inline ExampleArtifact example_coherence() {
    ExampleArtifact art{"example4_coherence.csv",
                        CsvTable({"alpha", "beta", "C_l1", "M_formula", "M_matrix", "status"})};
    const double h = std::numbers::sqrt2 / 2.0;
    const std::vector<std::pair<double, double>> cases = {
        {1.0, 0.0}, {h, h}, {0.8, 0.6}, {0.6, 0.8}, {0.8, -0.6}, {0.28, 0.96}, {0.0, 1.0},
    };
    for (const auto& [a, b] : cases) {
        const QuantumnessRelation rel = quantumness_coherence_relation(PureState({a, b}));
        add_checked_row(art,
                        {format_double(a), format_double(b), format_double(rel.resource)},
                        std::sqrt(std::max(0.0, 1.0 - rel.resource * rel.resource)),
                        rel.quantumness);
    }
    return art;
}

inline ExampleArtifact example_concurrence() {
    ExampleArtifact art{"example5_concurrence.csv",
                        CsvTable({"alpha", "beta", "C", "M_formula", "M_matrix", "status"})};
    const double h = std::numbers::sqrt2 / 2.0;
    const std::vector<std::pair<double, double>> cases = {
        {1.0, 0.0}, {h, h}, {0.8, 0.6}, {0.6, 0.8}, {0.96, 0.28}, {0.0, 1.0},
    };
    for (const auto& [a, b] : cases) {
        const QuantumnessRelation rel = quantumness_concurrence_relation(PureState({a, 0.0, 0.0, b}));
        add_checked_row(art,
                        {format_double(a), format_double(b), format_double(rel.resource)},
                        std::sqrt(std::max(0.0, 1.0 - rel.resource * rel.resource)),
                        rel.quantumness);
    }
    return art;
}

inline ExampleArtifact example_classical_quantum(Rng& rng) {
    ExampleArtifact art{"example6_classical_quantum.csv",
                        CsvTable({"case", "D_expected", "D_matrix", "status"})};
    const NormSpec trace = NormSpec::trace();
    const double h = std::numbers::sqrt2 / 2.0;
    const DensityMatrix zero = projector(PureState::basis(2, 0));
    const DensityMatrix plus = projector(PureState({h, h}));

    const ClassicalQuantumState cc({0.3, 0.7},
                                   {DensityMatrix(ComplexMatrix::diagonal({0.2, 0.8})),
                                    DensityMatrix(ComplexMatrix::diagonal({0.9, 0.1}))});
    add_checked_row(art, {"classical_classical"}, 0.0, cq_quantumness(cc, trace));

    const ClassicalQuantumState single({1.0}, {plus});
    add_checked_row(art, {"single_block"}, 0.0, cq_quantumness(single, trace));

    const ClassicalQuantumState pair({0.5, 0.5}, {zero, plus});
    const double d_pair = cq_quantumness(pair, trace);
    add_checked_row(art, {"zero_plus_blocks"}, pure_pair_quantumness(0.5, 0.5, h), d_pair);

    const ClassicalQuantumState mixed({0.2, 0.5, 0.3}, {random_density_matrix(2, 2, rng),
                                                        random_density_matrix(2, 1, rng),
                                                        random_density_matrix(2, 2, rng)});
    const double d_mixed = cq_quantumness(mixed, trace);
    add_checked_row(art, {"local_unitary"}, d_mixed,
                    cq_quantumness(cq_local_unitary(mixed, random_unitary(2, rng)), trace));
    add_checked_row(art, {"pure_ancilla"}, d_mixed,
                    cq_quantumness(cq_append_ancilla(mixed, zero), trace));
    add_checked_row(art, {"maximally_mixed_ancilla"}, 0.5 * d_mixed,
                    cq_quantumness(cq_append_ancilla(mixed, DensityMatrix::maximally_mixed(2)), trace));
    return art;
}

}  // namespace detail

/// Reproduces all six worked examples; random cases are drawn from `seed`.
inline std::vector<ExampleArtifact> build_examples(std::uint64_t seed) {
    Rng rng(seed);
    std::vector<ExampleArtifact> out;
    out.push_back(detail::example_bloch_pair(rng));
    out.push_back(detail::example_phase_damping());
    out.push_back(detail::example_overlap());
    out.push_back(detail::example_coherence());
    out.push_back(detail::example_concurrence());
    out.push_back(detail::example_classical_quantum(rng));
    return out;
}

inline void write_examples(const std::vector<ExampleArtifact>& artifacts,
                           const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw Error(ErrorKind::io_error, "cannot create '" + dir.string() + "': " + ec.message());
    for (const auto& art : artifacts) art.table.write((dir / art.filename).string());
}

}  // namespace qens::cli
