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
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qens/eigen.hpp"
#include "qens/error.hpp"
#include "qens/matrix.hpp"
#include "qens/norms.hpp"
#include "qens/rng.hpp"
#include "qens/states.hpp"

namespace qens {

inline constexpr double kProbabilityTolerance = 1e-10;

/// One weighted state of an ensemble (also used for the parts of a decomposition).
struct Member {
    double p;
    DensityMatrix rho;
};

/// Indexed multiset {(p_i, rho_i)} with probabilities summing to one.
///
/// Members are never merged: two equal states at different indices stay
/// distinct. Zero-probability members are allowed.
class Ensemble {
public:
    explicit Ensemble(std::vector<Member> members) : members_(std::move(members)) {
        if (members_.empty()) throw Error(ErrorKind::invalid_ensemble, "ensemble has no members");
        const std::size_t d = members_.front().rho.dim();
        double sum = 0.0;
        for (std::size_t i = 0; i < members_.size(); ++i) {
            const Member& m = members_[i];
            if (!(m.p >= 0.0) || !std::isfinite(m.p)) {
                throw Error(ErrorKind::invalid_ensemble,
                            "member " + std::to_string(i) + " has invalid probability " +
                                std::to_string(m.p));
            }
            if (m.rho.dim() != d) {
                throw Error(ErrorKind::dimension_mismatch,
                            "member " + std::to_string(i) + " has dimension " +
                                std::to_string(m.rho.dim()) + ", expected " + std::to_string(d));
            }
            sum += m.p;
        }
        if (!(std::abs(sum - 1.0) <= kProbabilityTolerance)) {
            throw Error(ErrorKind::invalid_ensemble,
                        "probabilities sum to " + std::to_string(sum) + ", expected 1");
        }
    }

    std::size_t size() const noexcept { return members_.size(); }
    std::size_t dim() const noexcept { return members_.front().rho.dim(); }
    const std::vector<Member>& members() const noexcept { return members_; }
    const Member& operator[](std::size_t i) const { return members_[i]; }

    /// The induced density operator sum_i p_i rho_i.
    ComplexMatrix average() const {
        ComplexMatrix out(dim());
        for (const auto& m : members_) out += m.rho.matrix() * cplx(m.p);
        return out;
    }

private:
    std::vector<Member> members_;
};

/// Disjoint, nonempty index blocks covering 0..n-1.
class Partition {
public:
    Partition(std::vector<std::vector<std::size_t>> blocks, std::size_t n)
        : blocks_(std::move(blocks)), n_(n) {
        std::vector<bool> seen(n, false);
        std::size_t count = 0;
        for (std::size_t b = 0; b < blocks_.size(); ++b) {
            if (blocks_[b].empty()) {
                throw Error(ErrorKind::invalid_partition, "block " + std::to_string(b) + " is empty");
            }
            for (std::size_t idx : blocks_[b]) {
                if (idx >= n) {
                    throw Error(ErrorKind::invalid_partition,
                                "index " + std::to_string(idx) + " out of range for " +
                                    std::to_string(n) + " members");
                }
                if (seen[idx]) {
                    throw Error(ErrorKind::invalid_partition,
                                "index " + std::to_string(idx) + " appears in two blocks");
                }
                seen[idx] = true;
                ++count;
            }
        }
        if (count != n) {
            throw Error(ErrorKind::invalid_partition, "blocks cover " + std::to_string(count) +
                                                          " of " + std::to_string(n) + " indices");
        }
    }

    static Partition singletons(std::size_t n) {
        std::vector<std::vector<std::size_t>> blocks(n);
        for (std::size_t i = 0; i < n; ++i) blocks[i] = {i};
        return Partition(std::move(blocks), n);
    }

    const std::vector<std::vector<std::size_t>>& blocks() const noexcept { return blocks_; }
    std::size_t size() const noexcept { return n_; }

private:
    std::vector<std::vector<std::size_t>> blocks_;
    std::size_t n_;
};

namespace detail {

// Neumaier-compensated running sum.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            carry_ += (sum_ - t) + x;
        else
            carry_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

inline void check_mixture(const std::vector<Member>& parts, const DensityMatrix& target,
                          const std::string& where) {
    if (parts.empty()) throw Error(ErrorKind::decomposition_mismatch, where + ": no parts");
    double weight = 0.0;
    ComplexMatrix mix(target.dim());
    for (const auto& part : parts) {
        if (!(part.p >= 0.0)) {
            throw Error(ErrorKind::decomposition_mismatch, where + ": negative weight");
        }
        if (part.rho.dim() != target.dim()) {
            throw Error(ErrorKind::dimension_mismatch, where + ": part dimension " +
                                                           std::to_string(part.rho.dim()) +
                                                           " vs " + std::to_string(target.dim()));
        }
        weight += part.p;
        mix += part.rho.matrix() * cplx(part.p);
    }
    if (!(std::abs(weight - 1.0) <= kProbabilityTolerance)) {
        throw Error(ErrorKind::decomposition_mismatch,
                    where + ": weights sum to " + std::to_string(weight));
    }
    const double dev = max_abs_diff(mix, target.matrix());
    if (!(dev <= kProbabilityTolerance)) {
        throw Error(ErrorKind::decomposition_mismatch,
                    where + ": mixture misses the state by " + std::to_string(dev));
    }
}

}  // namespace detail

/// M(E) = sum_{ij} sqrt(p_i p_j) ||[rho_i, rho_j]||.
///
/// Evaluated as 2 sum_{i<j} in lexicographic pair order with compensated
/// summation; pairs involving a zero-probability member are skipped.
inline double quantumness(const Ensemble& ensemble, const NormSpec& spec) {
    if (spec.kind() == NormSpec::Kind::kyfan && spec.k() > ensemble.dim()) {
        throw Error(ErrorKind::invalid_spec, "Ky Fan order " + std::to_string(spec.k()) +
                                                 " exceeds dimension " +
                                                 std::to_string(ensemble.dim()));
    }
    const auto& members = ensemble.members();
    detail::CompensatedSum sum;
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (members[i].p == 0.0) continue;
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            if (members[j].p == 0.0) continue;
            const double weight = std::sqrt(members[i].p * members[j].p);
            sum.add(weight * norm(commutator(members[i].rho.matrix(), members[j].rho.matrix()), spec));
        }
    }
    return 2.0 * sum.value();
}

/// True iff every pair of members with positive probability commutes:
/// max ||[rho_i, rho_j]||_F <= tol.
inline bool is_classical(const Ensemble& ensemble, double tol) {
    const auto& members = ensemble.members();
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (members[i].p == 0.0) continue;
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            if (members[j].p == 0.0) continue;
            const ComplexMatrix c = commutator(members[i].rho.matrix(), members[j].rho.matrix());
            if (detail::frobenius_entrywise(c) > tol) return false;
        }
    }
    return true;
}

/// {(p_i, U rho_i U^dagger)}.
inline Ensemble unitary_conjugate(const Ensemble& ensemble, const ComplexMatrix& u) {
    if (u.dim() != ensemble.dim()) {
        throw Error(ErrorKind::dimension_mismatch, "unitary has dimension " + std::to_string(u.dim()) +
                                                       ", ensemble has " +
                                                       std::to_string(ensemble.dim()));
    }
    const double dev = unitarity_deviation(u);
    if (!(dev <= kStateTolerance)) {
        throw Error(ErrorKind::not_unitary, "U^dagger U deviates from I by " + std::to_string(dev));
    }
    const ComplexMatrix u_dag = adjoint(u);
    std::vector<Member> out;
    out.reserve(ensemble.size());
    for (const auto& m : ensemble.members())
        out.push_back({m.p, DensityMatrix(u * m.rho.matrix() * u_dag)});
    return Ensemble(std::move(out));
}

/// {(lambda_mu p_{mu i}, rho_{mu i})}, concatenated in (mu, i) order.
inline Ensemble probabilistic_union(const std::vector<Ensemble>& ensembles,
                                    const std::vector<double>& weights) {
    if (ensembles.empty() || ensembles.size() != weights.size()) {
        throw Error(ErrorKind::weight_sum_invalid,
                    "need one weight per ensemble (" + std::to_string(ensembles.size()) +
                        " ensembles, " + std::to_string(weights.size()) + " weights)");
    }
    double total = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0)) throw Error(ErrorKind::weight_sum_invalid, "negative union weight");
        total += w;
    }
    if (!(std::abs(total - 1.0) <= kProbabilityTolerance)) {
        throw Error(ErrorKind::weight_sum_invalid,
                    "union weights sum to " + std::to_string(total));
    }
    const std::size_t d = ensembles.front().dim();
    std::vector<Member> out;
    for (std::size_t mu = 0; mu < ensembles.size(); ++mu) {
        if (ensembles[mu].dim() != d) {
            throw Error(ErrorKind::dimension_mismatch,
                        "ensemble " + std::to_string(mu) + " has dimension " +
                            std::to_string(ensembles[mu].dim()) + ", expected " +
                            std::to_string(d));
        }
        for (const auto& m : ensembles[mu].members()) out.push_back({weights[mu] * m.p, m.rho});
    }
    return Ensemble(std::move(out));
}

/// For rho_c = sum_mu lambda_mu rho_{c mu}, returns one ensemble per part with
/// member c's state replaced by rho_{c mu} (probability p_c unchanged).
inline std::vector<Ensemble> decompose_member(const Ensemble& ensemble, std::size_t c,
                                              const std::vector<Member>& parts) {
    if (c >= ensemble.size()) {
        throw Error(ErrorKind::param_out_of_range, "member index " + std::to_string(c) +
                                                       " out of range for " +
                                                       std::to_string(ensemble.size()) + " members");
    }
    detail::check_mixture(parts, ensemble[c].rho, "member " + std::to_string(c));
    std::vector<Ensemble> out;
    out.reserve(parts.size());
    for (const auto& part : parts) {
        std::vector<Member> members = ensemble.members();
        members[c].rho = part.rho;
        out.emplace_back(std::move(members));
    }
    return out;
}

/// {(p_i lambda_{i mu}, rho_{i mu})}, flattened in (i, mu) order.
inline Ensemble fine_grain(const Ensemble& ensemble,
                           const std::vector<std::vector<Member>>& decompositions) {
    if (decompositions.size() != ensemble.size()) {
        throw Error(ErrorKind::decomposition_mismatch,
                    "expected " + std::to_string(ensemble.size()) + " decompositions, got " +
                        std::to_string(decompositions.size()));
    }
    std::vector<Member> out;
    for (std::size_t i = 0; i < ensemble.size(); ++i) {
        detail::check_mixture(decompositions[i], ensemble[i].rho, "member " + std::to_string(i));
        for (const auto& part : decompositions[i]) out.push_back({ensemble[i].p * part.p, part.rho});
    }
    return Ensemble(std::move(out));
}

/// One member per block: (sum p_i, sum p_i rho_i / sum p_i).
inline Ensemble coarse_grain(const Ensemble& ensemble, const Partition& partition) {
    if (partition.size() != ensemble.size()) {
        throw Error(ErrorKind::invalid_partition,
                    "partition covers " + std::to_string(partition.size()) +
                        " indices, ensemble has " + std::to_string(ensemble.size()));
    }
    std::vector<Member> out;
    for (std::size_t b = 0; b < partition.blocks().size(); ++b) {
        const auto& block = partition.blocks()[b];
        double p = 0.0;
        ComplexMatrix sum(ensemble.dim());
        for (std::size_t idx : block) {
            p += ensemble[idx].p;
            sum += ensemble[idx].rho.matrix() * cplx(ensemble[idx].p);
        }
        if (!(p > 0.0)) {
            throw Error(ErrorKind::zero_block_probability,
                        "block " + std::to_string(b) + " has zero total probability");
        }
        if (block.size() == 1) {
            out.push_back({p, ensemble[block.front()].rho});
        } else {
            out.push_back({p, DensityMatrix(sum * cplx(1.0 / p))});
        }
    }
    return Ensemble(std::move(out));
}

/// rho = sum_k lambda_k |v_k><v_k| over the nonzero eigenvalues.
inline std::vector<Member> spectral_decomposition(const DensityMatrix& rho) {
    const HermitianEigen eig = hermitian_eigen(rho.matrix(), 0.0);
    const std::size_t n = rho.dim();
    std::vector<double> weights;
    std::vector<std::size_t> cols;
    double total = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        if (eig.values[k] <= 0.0) continue;
        weights.push_back(eig.values[k]);
        cols.push_back(k);
        total += eig.values[k];
    }
    std::vector<Member> parts;
    for (std::size_t idx = 0; idx < cols.size(); ++idx) {
        std::vector<cplx> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = eig.vectors(i, cols[idx]);
        parts.push_back({weights[idx] / total, projector(PureState::normalized(std::move(v)))});
    }
    return parts;
}

/// Random pure-state decomposition of rho into `count` parts.
///
/// Mixes the weighted eigenvectors sqrt(lambda_k)|v_k> with the first columns
/// of a random unitary: |w_mu> = sum_k W_{mu k} sqrt(lambda_k)|v_k>, which
/// satisfies sum_mu |w_mu><w_mu| = rho for any isometry W.
inline std::vector<Member> random_pure_decomposition(const DensityMatrix& rho, std::size_t count,
                                                     Rng& rng) {
    const HermitianEigen eig = hermitian_eigen(rho.matrix(), 0.0);
    const std::size_t n = rho.dim();
    std::size_t rank = 0;
    for (double v : eig.values)
        if (v > 0.0) ++rank;
    count = std::max(count, rank);
    const ComplexMatrix w = random_unitary(count, rng);
    std::vector<Member> parts;
    for (std::size_t mu = 0; mu < count; ++mu) {
        std::vector<cplx> vec(n);
        for (std::size_t k = 0; k < rank; ++k) {
            const cplx coeff = w(mu, k) * std::sqrt(eig.values[k]);
            for (std::size_t i = 0; i < n; ++i) vec[i] += coeff * eig.vectors(i, k);
        }
        double weight = 0.0;
        for (const auto& a : vec) weight += std::norm(a);
        if (weight <= 0.0) continue;
        parts.push_back({weight, projector(PureState::normalized(std::move(vec)))});
    }
    double total = 0.0;
    for (const auto& part : parts) total += part.p;
    for (auto& part : parts) part.p /= total;
    return parts;
}

}  // namespace qens
