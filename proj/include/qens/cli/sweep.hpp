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
#include <cmath>
#include <string>
#include <vector>

#include "qens/cli/io.hpp"
#include "qens/derived.hpp"
#include "qens/ensemble.hpp"
#include "qens/norms.hpp"
#include "qens/states.hpp"

namespace qens::cli {

/// Row-wise agreement required between the closed-form and matrix columns.
inline constexpr double kAgreementTolerance = 1e-9;

/// A sweep table with columns ..., M_formula, M_matrix.
struct SweepResult {
    CsvTable table;
    std::vector<double> formula;
    std::vector<double> matrix;

    double max_abs_diff() const {
        double worst = 0.0;
        for (std::size_t i = 0; i < formula.size(); ++i)
            worst = std::max(worst, std::abs(formula[i] - matrix[i]));
        return worst;
    }
};

namespace detail {

inline void require_unit_interval(const std::vector<double>& grid, const char* name) {
    for (double v : grid)
        if (!(v >= 0.0 && v <= 1.0)) {
            throw Error(ErrorKind::param_out_of_range,
                        std::string(name) + " values must lie in [0, 1], got " + format_double(v));
        }
}

inline void push_row(SweepResult& out, std::vector<double> params, double formula, double matrix) {
    std::vector<std::string> row;
    for (double v : params) row.push_back(format_double(v));
    row.push_back(format_double(formula));
    row.push_back(format_double(matrix));
    out.table.add_row(std::move(row));
    out.formula.push_back(formula);
    out.matrix.push_back(matrix);
}

}  // namespace detail

/// Two qubit states with Bloch vectors r1 (1,0,0) and r2 (cos a, sin a, 0),
/// Frobenius norm. Cartesian product of the grids, alpha varying fastest.
inline SweepResult sweep_bloch_angle(const std::vector<double>& alphas, const std::vector<double>& p1s,
                                     const std::vector<double>& r1s, const std::vector<double>& r2s) {
    detail::require_unit_interval(p1s, "p1");
    detail::require_unit_interval(r1s, "r1");
    detail::require_unit_interval(r2s, "r2");
    SweepResult out{CsvTable({"p1", "r1", "r2", "alpha", "M_formula", "M_matrix"}), {}, {}};
    const NormSpec spec = NormSpec::frobenius();
    for (double p1 : p1s)
        for (double r1 : r1s)
            for (double r2 : r2s)
                for (double alpha : alphas) {
                    const double p2 = 1.0 - p1;
                    const Ensemble e({{p1, density_from_bloch(BlochVector(r1, 0.0, 0.0))},
                                      {p2, density_from_bloch(BlochVector(r2 * std::cos(alpha),
                                                                         r2 * std::sin(alpha), 0.0))}});
                    detail::push_row(out, {p1, r1, r2, alpha},
                                     bloch_pair_quantumness(p1, p2, r1, r2, alpha),
                                     quantumness(e, spec));
                }
    return out;
}

/// {(p1, rho), (p2, Phi_lambda(rho))} for the pure state at (theta, phi),
/// Frobenius norm. lambda varies fastest.
inline SweepResult sweep_phase_damping(const std::vector<double>& lambdas,
                                       const std::vector<double>& thetas,
                                       const std::vector<double>& phis,
                                       const std::vector<double>& p1s) {
    detail::require_unit_interval(lambdas, "lambda");
    detail::require_unit_interval(p1s, "p1");
    SweepResult out{CsvTable({"p1", "theta", "phi", "lambda", "M_formula", "M_matrix"}), {}, {}};
    const NormSpec spec = NormSpec::frobenius();
    for (double p1 : p1s)
        for (double theta : thetas)
            for (double phi : phis) {
                const double st = std::sin(theta);
                const BlochVector r(st * std::cos(phi), st * std::sin(phi), std::cos(theta));
                const DensityMatrix rho = density_from_bloch(r);
                for (double lambda : lambdas) {
                    const double p2 = 1.0 - p1;
                    const Ensemble e({{p1, rho}, {p2, apply_channel(phase_damping(lambda), rho)}});
                    detail::push_row(out, {p1, theta, phi, lambda},
                                     phase_damping_quantumness(p1, p2, lambda, theta),
                                     quantumness(e, spec));
                }
            }
    return out;
}

/// Pure states |0> and c e^{i theta}|0> + sqrt(1 - c^2)|1> embedded in C^dim,
/// trace norm. c varies fastest.
inline SweepResult sweep_overlap(const std::vector<double>& cs, const std::vector<double>& p1s,
                                 const std::vector<double>& thetas, std::size_t dim) {
    detail::require_unit_interval(cs, "c");
    detail::require_unit_interval(p1s, "p1");
    if (dim < 2) throw Error(ErrorKind::param_out_of_range, "overlap sweep needs dim >= 2");
    SweepResult out{CsvTable({"p1", "theta", "c", "M_formula", "M_matrix"}), {}, {}};
    const NormSpec spec = NormSpec::trace();
    const PureState psi = PureState::basis(dim, 0);
    for (double p1 : p1s)
        for (double theta : thetas)
            for (double c : cs) {
                std::vector<cplx> amps(dim);
                amps[0] = std::polar(c, theta);
                amps[1] = std::sqrt(std::max(0.0, 1.0 - c * c));
                const PureState phi(std::move(amps));
                const double p2 = 1.0 - p1;
                const Ensemble e({{p1, projector(psi)}, {p2, projector(phi)}});
                detail::push_row(out, {p1, theta, c}, pure_pair_quantumness(p1, p2, c),
                                 quantumness(e, spec));
            }
    return out;
}

}  // namespace qens::cli
