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
#include <cstddef>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "qens/ensemble.hpp"
#include "qens/error.hpp"
#include "qens/matrix.hpp"
#include "qens/norms.hpp"
#include "qens/states.hpp"

namespace qens {

/// Closed form for two pure states with |<psi|phi>| = c under the trace norm:
/// 4 c sqrt(p1 p2) sqrt(1 - c^2).
inline double pure_pair_quantumness(double p1, double p2, double c) {
    if (!(p1 >= 0.0 && p2 >= 0.0) || !(std::abs(p1 + p2 - 1.0) <= kProbabilityTolerance)) {
        throw Error(ErrorKind::param_out_of_range, "probabilities must be nonnegative and sum to 1");
    }
    if (!(c >= 0.0 && c <= 1.0)) {
        throw Error(ErrorKind::param_out_of_range, "overlap modulus must lie in [0, 1]");
    }
    return 4.0 * c * std::sqrt(p1 * p2) * std::sqrt(1.0 - c * c);
}

/// Two qubit states with Bloch vectors of lengths r1, r2 at angle alpha, under
/// the Frobenius norm: sqrt(2 p1 p2) r1 r2 |sin alpha|.
inline double bloch_pair_quantumness(double p1, double p2, double r1, double r2, double alpha) {
    if (!(p1 >= 0.0 && p2 >= 0.0)) {
        throw Error(ErrorKind::param_out_of_range, "probabilities must be nonnegative");
    }
    return std::sqrt(2.0 * p1 * p2) * r1 * r2 * std::abs(std::sin(alpha));
}

/// Pure qubit state at polar angle theta paired with its phase-damped image,
/// under the Frobenius norm: sqrt(2 p1 p2) (1 - sqrt(1 - lambda)) |sin theta cos theta|.
inline double phase_damping_quantumness(double p1, double p2, double lambda, double theta) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw Error(ErrorKind::param_out_of_range, "phase damping strength must lie in [0, 1]");
    }
    if (!(p1 >= 0.0 && p2 >= 0.0)) {
        throw Error(ErrorKind::param_out_of_range, "probabilities must be nonnegative");
    }
    return std::sqrt(2.0 * p1 * p2) * (1.0 - std::sqrt(1.0 - lambda)) *
           std::abs(std::sin(theta) * std::cos(theta));
}

namespace detail {

inline void require_real_amplitudes(const PureState& psi) {
    for (std::size_t i = 0; i < psi.dim(); ++i) {
        if (std::abs(psi[i].imag()) > kStateTolerance) {
            throw Error(ErrorKind::non_real_amplitudes,
                        "amplitude " + std::to_string(i) + " has imaginary part " +
                            std::to_string(psi[i].imag()));
        }
    }
}

inline PureState plus_state() {
    const double h = std::numbers::sqrt2 / 2.0;
    return PureState({h, h});
}

inline PureState phi_plus_state() {
    const double h = std::numbers::sqrt2 / 2.0;
    return PureState({h, 0.0, 0.0, h});
}

}  // namespace detail

/// l1-norm coherence 2|alpha beta| of a real-amplitude qubit state.
inline double coherence_l1_pure_qubit(const PureState& psi) {
    if (psi.dim() != 2) {
        throw Error(ErrorKind::dimension_mismatch, "l1 coherence expects a qubit state");
    }
    detail::require_real_amplitudes(psi);
    return 2.0 * std::abs(psi[0].real() * psi[1].real());
}

/// Pure two-qubit concurrence 2 alpha beta from the Schmidt coefficients.
inline double concurrence_pure_two_qubit(const PureState& psi) {
    const SchmidtCoefficients s = schmidt_coefficients(psi);
    return 2.0 * s.alpha * s.beta;
}

/// A quantumness value alongside the resource quantity it is compared with.
struct QuantumnessRelation {
    double quantumness;
    double resource;
};

/// M of {(1/2, psi), (1/2, |+>)} under the trace norm, paired with C_l1(psi).
inline QuantumnessRelation quantumness_coherence_relation(const PureState& psi) {
    const double coherence = coherence_l1_pure_qubit(psi);
    const Ensemble e({{0.5, projector(psi)}, {0.5, projector(detail::plus_state())}});
    return {quantumness(e, NormSpec::trace()), coherence};
}

/// M of {(1/2, psi), (1/2, |phi+>)} under the trace norm, paired with the
/// concurrence of psi. psi must be alpha|00> + beta|11> with real alpha, beta.
inline QuantumnessRelation quantumness_concurrence_relation(const PureState& psi) {
    if (psi.dim() != 4) {
        throw Error(ErrorKind::dimension_mismatch, "expected a two-qubit state");
    }
    if (std::abs(psi[1]) > kStateTolerance || std::abs(psi[2]) > kStateTolerance) {
        throw Error(ErrorKind::not_schmidt_form, "state has |01> or |10> components");
    }
    detail::require_real_amplitudes(psi);
    const double concurrence = concurrence_pure_two_qubit(psi);
    const Ensemble e({{0.5, projector(psi)}, {0.5, projector(detail::phi_plus_state())}});
    return {quantumness(e, NormSpec::trace()), concurrence};
}

/// sum_i p_i |i><i| (x) rho_i, kept as its flag distribution and blocks.
class ClassicalQuantumState {
public:
    ClassicalQuantumState(std::vector<double> probs, std::vector<DensityMatrix> blocks)
        : probs_(std::move(probs)), blocks_(std::move(blocks)) {
        if (blocks_.empty() || probs_.size() != blocks_.size()) {
            throw Error(ErrorKind::invalid_ensemble,
                        "need one probability per block (" + std::to_string(probs_.size()) +
                            " probabilities, " + std::to_string(blocks_.size()) + " blocks)");
        }
        // Reuses the ensemble invariants for validation.
        (void)ensemble();
    }

    /// Splits a block-diagonal state with `flag_dim` equal diagonal blocks.
    /// Zero-weight blocks become maximally mixed placeholders with p = 0.
    static ClassicalQuantumState from_block_diagonal(const DensityMatrix& rho, std::size_t flag_dim) {
        if (flag_dim == 0 || rho.dim() % flag_dim != 0) {
            throw Error(ErrorKind::dimension_mismatch,
                        "dimension " + std::to_string(rho.dim()) + " is not a multiple of " +
                            std::to_string(flag_dim));
        }
        const std::size_t d = rho.dim() / flag_dim;
        const ComplexMatrix& m = rho.matrix();
        for (std::size_t i = 0; i < rho.dim(); ++i)
            for (std::size_t j = 0; j < rho.dim(); ++j)
                if (i / d != j / d && std::abs(m(i, j)) > kStateTolerance) {
                    throw Error(ErrorKind::not_density_matrix,
                                "state is not block diagonal in the flag basis");
                }
        std::vector<double> probs;
        std::vector<DensityMatrix> blocks;
        for (std::size_t b = 0; b < flag_dim; ++b) {
            ComplexMatrix block(d);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) block(i, j) = m(b * d + i, b * d + j);
            const double p = trace(block).real();
            if (p > kStateTolerance) {
                probs.push_back(p);
                blocks.emplace_back(block * cplx(1.0 / p));
            } else {
                probs.push_back(0.0);
                blocks.push_back(DensityMatrix::maximally_mixed(d));
            }
        }
        double total = 0.0;
        for (double p : probs) total += p;
        for (double& p : probs) p /= total;
        return ClassicalQuantumState(std::move(probs), std::move(blocks));
    }

    std::size_t flag_dim() const noexcept { return blocks_.size(); }
    std::size_t block_dim() const noexcept { return blocks_.front().dim(); }
    const std::vector<double>& probs() const noexcept { return probs_; }
    const std::vector<DensityMatrix>& blocks() const noexcept { return blocks_; }

    /// The induced ensemble {(p_i, rho_i)}.
    Ensemble ensemble() const {
        std::vector<Member> members;
        members.reserve(blocks_.size());
        for (std::size_t i = 0; i < blocks_.size(); ++i) members.push_back({probs_[i], blocks_[i]});
        return Ensemble(std::move(members));
    }

    /// The (k d) x (k d) block-diagonal density matrix.
    DensityMatrix matrix() const {
        const std::size_t d = block_dim();
        ComplexMatrix out(flag_dim() * d);
        for (std::size_t b = 0; b < flag_dim(); ++b)
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j)
                    out(b * d + i, b * d + j) = probs_[b] * blocks_[b].matrix()(i, j);
        return DensityMatrix(out);
    }

private:
    std::vector<double> probs_;
    std::vector<DensityMatrix> blocks_;
};

/// D(rho^ab) = M of the induced ensemble.
inline double cq_quantumness(const ClassicalQuantumState& s, const NormSpec& spec) {
    return quantumness(s.ensemble(), spec);
}

/// (I (x) U_b) rho^ab (I (x) U_b)^dagger: every block conjugated by U_b.
inline ClassicalQuantumState cq_local_unitary(const ClassicalQuantumState& s,
                                              const ComplexMatrix& u) {
    if (u.dim() != s.block_dim()) {
        throw Error(ErrorKind::dimension_mismatch, "local unitary has dimension " +
                                                       std::to_string(u.dim()) + ", blocks have " +
                                                       std::to_string(s.block_dim()));
    }
    const double dev = unitarity_deviation(u);
    if (!(dev <= kStateTolerance)) {
        throw Error(ErrorKind::not_unitary, "U^dagger U deviates from I by " + std::to_string(dev));
    }
    const ComplexMatrix u_dag = adjoint(u);
    std::vector<DensityMatrix> blocks;
    blocks.reserve(s.flag_dim());
    for (const auto& b : s.blocks()) blocks.emplace_back(u * b.matrix() * u_dag);
    return ClassicalQuantumState(s.probs(), std::move(blocks));
}

/// Attaches an ancilla to the quantum side: blocks become rho_i (x) sigma.
inline ClassicalQuantumState cq_append_ancilla(const ClassicalQuantumState& s,
                                               const DensityMatrix& ancilla) {
    std::vector<DensityMatrix> blocks;
    blocks.reserve(s.flag_dim());
    for (const auto& b : s.blocks()) blocks.emplace_back(kron(b.matrix(), ancilla.matrix()));
    return ClassicalQuantumState(s.probs(), std::move(blocks));
}

}  // namespace qens
