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

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qens/ensemble.hpp"
#include "qens/matrix.hpp"
#include "qens/norms.hpp"
#include "qens/rng.hpp"
#include "qens/states.hpp"

namespace qens::cli {

enum class Property {
    positivity,
    unitary_invariance,
    union_concavity,
    decomposition_convexity,
    fine_graining,
    coarse_graining,
};

inline constexpr std::array<Property, 6> kAllProperties = {
    Property::positivity,       Property::unitary_invariance, Property::union_concavity,
    Property::decomposition_convexity, Property::fine_graining, Property::coarse_graining,
};

constexpr const char* to_string(Property p) {
    switch (p) {
        case Property::positivity: return "positivity";
        case Property::unitary_invariance: return "unitary_invariance";
        case Property::union_concavity: return "union_concavity";
        case Property::decomposition_convexity: return "decomposition_convexity";
        case Property::fine_graining: return "fine_graining";
        case Property::coarse_graining: return "coarse_graining";
    }
    return "?";
}

struct PropertyConfig {
    std::size_t dim = 2;
    std::size_t members = 3;
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    NormSpec norm = NormSpec::trace();
    /// Additive slack allowed on every inequality.
    double tolerance = 1e-9;
    /// Runs only this trial index (replay of a reported failure).
    std::optional<std::size_t> only_trial;
};

/// Per-property slack of one trial: by how much the inequality was missed.
/// Nonpositive means satisfied outright; a violation exceeds the tolerance.
using TrialSlacks = std::array<double, kAllProperties.size()>;

struct PropertyTally {
    std::size_t passed = 0;
    std::size_t failed = 0;
    double worst_slack = -std::numeric_limits<double>::infinity();
};

struct Violation {
    Property property;
    std::size_t trial;
    std::uint64_t subseed;
    double slack;
};

struct PropertyReport {
    PropertyConfig config;
    std::array<PropertyTally, kAllProperties.size()> tallies{};
    std::vector<Violation> violations;

    bool all_passed() const { return violations.empty(); }

    double worst_slack() const {
        double worst = -std::numeric_limits<double>::infinity();
        for (const auto& t : tallies) worst = std::max(worst, t.worst_slack);
        return worst;
    }
};

namespace detail {

inline constexpr double kInfiniteSlack = std::numeric_limits<double>::infinity();

// Dirichlet(1, ..., 1) sample.
inline std::vector<double> random_simplex(std::size_t n, Rng& rng) {
    std::vector<double> w(n);
    double total = 0.0;
    for (auto& x : w) {
        double u = rng.uniform();
        while (u <= 0.0) u = rng.uniform();
        x = -std::log(u);
        total += x;
    }
    for (auto& x : w) x /= total;
    return w;
}

inline Ensemble random_ensemble(std::size_t dim, std::size_t members, Rng& rng) {
    const std::vector<double> probs = random_simplex(members, rng);
    std::vector<Member> out;
    out.reserve(members);
    for (std::size_t i = 0; i < members; ++i) {
        const std::size_t rank = 1 + rng.index(dim);
        out.push_back({probs[i], random_density_matrix(dim, rank, rng)});
    }
    return Ensemble(std::move(out));
}

// States diagonal in a common random basis.
inline Ensemble random_classical_ensemble(std::size_t dim, std::size_t members, Rng& rng) {
    const ComplexMatrix u = random_unitary(dim, rng);
    const std::vector<double> probs = random_simplex(members, rng);
    std::vector<Member> out;
    for (std::size_t i = 0; i < members; ++i) {
        const std::vector<double> spectrum = random_simplex(dim, rng);
        out.push_back({probs[i], DensityMatrix(conjugate_by(u, ComplexMatrix::diagonal(spectrum)))});
    }
    return Ensemble(std::move(out));
}

inline std::vector<Member> random_decomposition(const DensityMatrix& rho, Rng& rng) {
    if (rng.uniform() < 0.5) return spectral_decomposition(rho);
    return random_pure_decomposition(rho, rho.dim() + rng.index(rho.dim()), rng);
}

}  // namespace detail

/// Evaluates all six properties on freshly drawn ensembles for one trial.
inline TrialSlacks run_property_trial(const PropertyConfig& config, std::size_t trial) {
    Rng rng(derive_seed(config.seed, trial));
    const NormSpec& spec = config.norm;
    const std::size_t dim = config.dim;
    const std::size_t m = config.members;
    TrialSlacks slacks{};

    const Ensemble e = detail::random_ensemble(dim, m, rng);
    const double base = quantumness(e, spec);

    {
        const Ensemble classical = detail::random_classical_ensemble(dim, m, rng);
        const double classical_m = quantumness(classical, spec);
        const Ensemble single({{1.0, e[0].rho}});
        const double single_m = quantumness(single, spec);
        double slack = std::max({-base, classical_m, single_m});
        const bool consistent = is_classical(classical, config.tolerance) &&
                                (is_classical(e, config.tolerance) == (base <= config.tolerance));
        if (!consistent) slack = detail::kInfiniteSlack;
        slacks[static_cast<std::size_t>(Property::positivity)] = slack;
    }
    {
        const Ensemble rotated = unitary_conjugate(e, random_unitary(dim, rng));
        slacks[static_cast<std::size_t>(Property::unitary_invariance)] =
            std::abs(quantumness(rotated, spec) - base);
    }
    {
        const std::size_t count = 2 + rng.index(2);
        std::vector<Ensemble> parts;
        for (std::size_t k = 0; k < count; ++k)
            parts.push_back(detail::random_ensemble(dim, 1 + rng.index(m), rng));
        const std::vector<double> weights = detail::random_simplex(count, rng);
        double mixed = 0.0;
        for (std::size_t k = 0; k < count; ++k) mixed += weights[k] * quantumness(parts[k], spec);
        slacks[static_cast<std::size_t>(Property::union_concavity)] =
            mixed - quantumness(probabilistic_union(parts, weights), spec);
    }
    {
        const std::size_t c = rng.index(m);
        const std::vector<Member> parts = detail::random_decomposition(e[c].rho, rng);
        const std::vector<Ensemble> split = decompose_member(e, c, parts);
        double averaged = 0.0;
        for (std::size_t k = 0; k < parts.size(); ++k) averaged += parts[k].p * quantumness(split[k], spec);
        slacks[static_cast<std::size_t>(Property::decomposition_convexity)] = base - averaged;
    }
    {
        std::vector<std::vector<Member>> decompositions;
        for (const auto& member : e.members())
            decompositions.push_back(detail::random_decomposition(member.rho, rng));
        slacks[static_cast<std::size_t>(Property::fine_graining)] =
            base - quantumness(fine_grain(e, decompositions), spec);
    }
    {
        const std::size_t labels = 1 + rng.index(m);
        std::vector<std::vector<std::size_t>> blocks(labels);
        for (std::size_t i = 0; i < m; ++i) blocks[rng.index(labels)].push_back(i);
        std::erase_if(blocks, [](const auto& b) { return b.empty(); });
        const Ensemble coarse = coarse_grain(e, Partition(std::move(blocks), m));
        slacks[static_cast<std::size_t>(Property::coarse_graining)] = quantumness(coarse, spec) - base;
    }
    return slacks;
}

/// Runs every trial (or the single replay trial) and tallies the results in
/// trial order.
inline PropertyReport check_properties(const PropertyConfig& config) {
    if (config.dim < 2 || config.members < 2 || config.trials < 1) {
        throw Error(ErrorKind::param_out_of_range, "need dim >= 2, members >= 2, trials >= 1");
    }
    if (config.norm.kind() == NormSpec::Kind::kyfan && config.norm.k() > config.dim) {
        throw Error(ErrorKind::invalid_spec, "Ky Fan order exceeds dimension");
    }
    PropertyReport report{config, {}, {}};
    std::size_t first = 0;
    std::size_t last = config.trials;
    if (config.only_trial) {
        first = *config.only_trial;
        last = first + 1;
    }
    for (std::size_t trial = first; trial < last; ++trial) {
        const TrialSlacks slacks = run_property_trial(config, trial);
        for (std::size_t k = 0; k < kAllProperties.size(); ++k) {
            PropertyTally& tally = report.tallies[k];
            const double s = std::isnan(slacks[k]) ? detail::kInfiniteSlack : slacks[k];
            tally.worst_slack = std::max(tally.worst_slack, s);
            if (s <= config.tolerance) {
                ++tally.passed;
            } else {
                ++tally.failed;
                report.violations.push_back(
                    {kAllProperties[k], trial, derive_seed(config.seed, trial), s});
            }
        }
    }
    return report;
}

/// Plain-text run report.
inline std::string format_report(const PropertyReport& report, const std::string& command) {
    std::ostringstream os;
    const auto fmt = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3e", v);
        return std::string(buf);
    };
    os << "command: " << command << "\n";
    os << "seed: " << report.config.seed << "\n";
    os << "norm: " << report.config.norm.to_string() << "\n";
    os << "dim: " << report.config.dim << "\n";
    os << "members: " << report.config.members << "\n";
    os << "trials: " << report.config.trials << "\n";
    if (report.config.only_trial) os << "replayed trial: " << *report.config.only_trial << "\n";
    os << "tolerance: " << fmt(report.config.tolerance) << "\n";
    char line[160];
    std::snprintf(line, sizeof line, "%-26s %8s %8s %12s\n", "property", "passed", "failed",
                  "worst_slack");
    os << line;
    for (std::size_t k = 0; k < kAllProperties.size(); ++k) {
        const PropertyTally& t = report.tallies[k];
        std::snprintf(line, sizeof line, "%-26s %8zu %8zu %12s\n", to_string(kAllProperties[k]),
                      t.passed, t.failed, fmt(t.worst_slack).c_str());
        os << line;
    }
    os << "worst slack: " << fmt(report.worst_slack()) << "\n";
    constexpr std::size_t kMaxListed = 20;
    for (std::size_t i = 0; i < report.violations.size() && i < kMaxListed; ++i) {
        const Violation& v = report.violations[i];
        os << "violation: property=" << to_string(v.property) << " trial=" << v.trial
           << " subseed=" << v.subseed << " slack=" << fmt(v.slack)
           << " (replay with --seed " << report.config.seed << " --only-trial " << v.trial << ")\n";
    }
    if (report.violations.size() > kMaxListed)
        os << "... " << report.violations.size() - kMaxListed << " more violations\n";
    os << "result: " << (report.all_passed() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

}  // namespace qens::cli
