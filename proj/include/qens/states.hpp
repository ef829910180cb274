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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qens/eigen.hpp"
#include "qens/error.hpp"
#include "qens/matrix.hpp"
#include "qens/norms.hpp"
#include "qens/rng.hpp"

namespace qens {

inline constexpr double kStateTolerance = 1e-10;

/// Trace-one positive-semidefinite Hermitian matrix.
///
/// Construction validates Hermiticity, unit trace and PSD within 1e-10. The
/// stored matrix is exactly Hermitian; eigenvalues in [-1e-10, 0) are clamped to
/// zero and the trace renormalized.
class DensityMatrix {
public:
    explicit DensityMatrix(const ComplexMatrix& m) : matrix_(m) {
        const double herm = hermitian_deviation(m);
        if (!(herm <= kStateTolerance)) {
            throw Error(ErrorKind::not_density_matrix,
                        "not Hermitian (deviation " + std::to_string(herm) + ")");
        }
        matrix_ = hermitian_part(m);
        const double tr = trace(matrix_).real();
        if (!(std::abs(tr - 1.0) <= kStateTolerance)) {
            throw Error(ErrorKind::not_density_matrix,
                        "trace " + std::to_string(tr) + " differs from 1");
        }
        HermitianEigen eig = hermitian_eigen(matrix_, 0.0);
        const double min_eig = eig.values.back();
        if (!(min_eig >= -kStateTolerance)) {
            throw Error(ErrorKind::not_density_matrix,
                        "negative eigenvalue " + std::to_string(min_eig));
        }
        if (min_eig < 0.0) {
            double sum = 0.0;
            for (auto& v : eig.values) {
                v = std::max(v, 0.0);
                sum += v;
            }
            for (auto& v : eig.values) v /= sum;
            matrix_ = hermitian_part(reconstruct(eig));
        }
    }

    std::size_t dim() const noexcept { return matrix_.dim(); }
    const ComplexMatrix& matrix() const noexcept { return matrix_; }

    /// tr(rho^2).
    double purity() const {
        double sum = 0.0;
        for (const auto& e : matrix_.entries()) sum += std::norm(e);
        return sum;
    }

    static DensityMatrix maximally_mixed(std::size_t dim) {
        return DensityMatrix(ComplexMatrix::identity(dim) * cplx(1.0 / static_cast<double>(dim)));
    }

private:
    ComplexMatrix matrix_;
};

/// Unit vector in C^dim.
class PureState {
public:
    explicit PureState(std::vector<cplx> amplitudes) : amplitudes_(std::move(amplitudes)) {
        if (amplitudes_.empty()) throw Error(ErrorKind::not_normalized, "empty state vector");
        double sum = 0.0;
        for (const auto& a : amplitudes_) sum += std::norm(a);
        if (!(std::abs(sum - 1.0) <= kStateTolerance)) {
            throw Error(ErrorKind::not_normalized,
                        "squared norm " + std::to_string(sum) + " differs from 1");
        }
    }

    /// Rescales an arbitrary nonzero vector to unit norm.
    static PureState normalized(std::vector<cplx> v) {
        double sum = 0.0;
        for (const auto& a : v) sum += std::norm(a);
        if (!(sum > 0.0)) throw Error(ErrorKind::not_normalized, "zero vector");
        const double inv = 1.0 / std::sqrt(sum);
        for (auto& a : v) a *= inv;
        return PureState(std::move(v));
    }

    /// Computational basis vector |k>.
    static PureState basis(std::size_t dim, std::size_t k) {
        if (k >= dim) throw Error(ErrorKind::param_out_of_range, "basis index out of range");
        std::vector<cplx> v(dim);
        v[k] = 1.0;
        return PureState(std::move(v));
    }

    std::size_t dim() const noexcept { return amplitudes_.size(); }
    std::span<const cplx> amplitudes() const noexcept { return amplitudes_; }
    const cplx& operator[](std::size_t i) const { return amplitudes_[i]; }

private:
    std::vector<cplx> amplitudes_;
};

/// Real 3-vector in the closed unit ball (within 1e-10).
class BlochVector {
public:
    BlochVector(double x, double y, double z) : x_(x), y_(y), z_(z) {
        const double len = length();
        if (!(len <= 1.0 + kStateTolerance)) {
            throw Error(ErrorKind::bloch_out_of_ball,
                        "Bloch vector length " + std::to_string(len) + " exceeds 1");
        }
    }

    double x() const noexcept { return x_; }
    double y() const noexcept { return y_; }
    double z() const noexcept { return z_; }
    double length() const noexcept { return std::sqrt(x_ * x_ + y_ * y_ + z_ * z_); }

private:
    double x_, y_, z_;
};

/// Channel given by Kraus operators with sum E_i^dagger E_i = I (within 1e-10).
class QuantumChannel {
public:
    explicit QuantumChannel(std::vector<ComplexMatrix> kraus) : kraus_(std::move(kraus)) {
        if (kraus_.empty()) throw Error(ErrorKind::incomplete_channel, "no Kraus operators");
        const std::size_t n = kraus_.front().dim();
        ComplexMatrix sum(n);
        for (const auto& e : kraus_) {
            require_same_dim(kraus_.front(), e, "Kraus operators");
            sum += adjoint(e) * e;
        }
        const double dev = max_abs_diff(sum, ComplexMatrix::identity(n));
        if (!(dev <= kStateTolerance)) {
            throw Error(ErrorKind::incomplete_channel,
                        "sum of E^dagger E deviates from identity by " + std::to_string(dev));
        }
    }

    std::size_t dim() const noexcept { return kraus_.front().dim(); }
    std::span<const ComplexMatrix> kraus() const noexcept { return kraus_; }

    static QuantumChannel identity(std::size_t dim) {
        return QuantumChannel({ComplexMatrix::identity(dim)});
    }

private:
    std::vector<ComplexMatrix> kraus_;
};

/// (I + r.sigma) / 2.
inline DensityMatrix density_from_bloch(const BlochVector& r) {
    const cplx i(0.0, 1.0);
    return DensityMatrix(ComplexMatrix::from_rows({
        {0.5 * (1.0 + r.z()), 0.5 * (r.x() - i * r.y())},
        {0.5 * (r.x() + i * r.y()), 0.5 * (1.0 - r.z())},
    }));
}

/// r_a = tr(rho sigma_a).
inline BlochVector bloch_from_density(const DensityMatrix& rho) {
    if (rho.dim() != 2) {
        throw Error(ErrorKind::dimension_mismatch,
                    "Bloch vector needs a qubit state, got dimension " + std::to_string(rho.dim()));
    }
    const ComplexMatrix& m = rho.matrix();
    const double x = 2.0 * m(0, 1).real();
    const double y = -2.0 * m(0, 1).imag();
    const double z = (m(0, 0) - m(1, 1)).real();
    return BlochVector(x, y, z);
}

/// |psi><psi|.
inline DensityMatrix projector(const PureState& psi) {
    const std::size_t n = psi.dim();
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = psi[i] * std::conj(psi[j]);
    return DensityMatrix(m);
}

/// <psi|phi>, conjugating the first argument.
inline cplx overlap(const PureState& psi, const PureState& phi) {
    if (psi.dim() != phi.dim()) {
        throw Error(ErrorKind::dimension_mismatch, "overlap of states with dimensions " +
                                                       std::to_string(psi.dim()) + " and " +
                                                       std::to_string(phi.dim()));
    }
    cplx sum{};
    for (std::size_t i = 0; i < psi.dim(); ++i) sum += std::conj(psi[i]) * phi[i];
    return sum;
}

/// sum_i E_i rho E_i^dagger.
inline DensityMatrix apply_channel(const QuantumChannel& channel, const DensityMatrix& rho) {
    if (channel.dim() != rho.dim()) {
        throw Error(ErrorKind::dimension_mismatch, "channel acts on dimension " +
                                                       std::to_string(channel.dim()) +
                                                       ", state has " + std::to_string(rho.dim()));
    }
    ComplexMatrix out(rho.dim());
    for (const auto& e : channel.kraus()) out += e * rho.matrix() * adjoint(e);
    return DensityMatrix(out);
}

/// E_0 = |0><0| + sqrt(1 - lambda)|1><1|, E_1 = sqrt(lambda)|1><1|.
inline QuantumChannel phase_damping(double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw Error(ErrorKind::param_out_of_range,
                    "phase damping strength must lie in [0, 1], got " + std::to_string(lambda));
    }
    return QuantumChannel({ComplexMatrix::diagonal({1.0, std::sqrt(1.0 - lambda)}),
                           ComplexMatrix::diagonal({0.0, std::sqrt(lambda)})});
}

/// Schmidt coefficients of a two-qubit pure state.
struct SchmidtCoefficients {
    double alpha;  ///< larger coefficient
    double beta;
};

/// Singular values of the 2x2 amplitude matrix psi_{ab} = psi[2a + b].
///
/// Uses alpha^2 + beta^2 = 1 and alpha * beta = |det| rather than an iterative
/// SVD so that nearly-product states keep full relative accuracy in beta.
inline SchmidtCoefficients schmidt_coefficients(const PureState& psi) {
    if (psi.dim() != 4) {
        throw Error(ErrorKind::dimension_mismatch,
                    "Schmidt decomposition needs a two-qubit state, got dimension " +
                        std::to_string(psi.dim()));
    }
    double frob = 0.0;
    for (const auto& a : psi.amplitudes()) frob += std::norm(a);
    const double det = std::abs(psi[0] * psi[3] - psi[1] * psi[2]);
    const double disc = std::sqrt(std::max(0.0, frob * frob - 4.0 * det * det));
    const double alpha = std::sqrt(0.5 * (frob + disc));
    const double beta = alpha > 0.0 ? det / alpha : 0.0;
    return {alpha, beta};
}

/// Haar-random pure state from a normalized complex Gaussian vector.
inline PureState random_pure_state(std::size_t dim, Rng& rng) {
    if (dim < 1) throw Error(ErrorKind::param_out_of_range, "dimension must be >= 1");
    std::vector<cplx> v(dim);
    for (auto& a : v) {
        const double re = rng.normal();
        const double im = rng.normal();
        a = cplx(re, im);
    }
    return PureState::normalized(std::move(v));
}

/// Ginibre-distributed mixed state GG^dagger / tr(GG^dagger) with G of shape dim x rank.
inline DensityMatrix random_density_matrix(std::size_t dim, std::size_t rank, Rng& rng) {
    if (dim < 1) throw Error(ErrorKind::param_out_of_range, "dimension must be >= 1");
    if (rank < 1 || rank > dim) {
        throw Error(ErrorKind::param_out_of_range,
                    "rank must lie in [1, " + std::to_string(dim) + "], got " +
                        std::to_string(rank));
    }
    std::vector<cplx> g(dim * rank);
    for (auto& a : g) {
        const double re = rng.normal();
        const double im = rng.normal();
        a = cplx(re, im);
    }
    ComplexMatrix m(dim);
    double tr = 0.0;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            cplx sum{};
            for (std::size_t k = 0; k < rank; ++k) sum += g[i * rank + k] * std::conj(g[j * rank + k]);
            m(i, j) = sum;
        }
    for (std::size_t i = 0; i < dim; ++i) tr += m(i, i).real();
    m *= cplx(1.0 / tr);
    return DensityMatrix(m);
}

/// Haar-random unitary: Gram-Schmidt QR of a complex Gaussian matrix.
///
/// Gram-Schmidt yields a positive real diagonal in R, which is the phase fix
/// that makes Q Haar-distributed. Each column is orthogonalized twice.
inline ComplexMatrix random_unitary(std::size_t dim, Rng& rng) {
    if (dim < 1) throw Error(ErrorKind::param_out_of_range, "dimension must be >= 1");
    std::vector<std::vector<cplx>> cols(dim, std::vector<cplx>(dim));
    for (auto& col : cols)
        for (auto& a : col) {
            const double re = rng.normal();
            const double im = rng.normal();
            a = cplx(re, im);
        }
    for (std::size_t j = 0; j < dim; ++j) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < j; ++k) {
                cplx proj{};
                for (std::size_t i = 0; i < dim; ++i) proj += std::conj(cols[k][i]) * cols[j][i];
                for (std::size_t i = 0; i < dim; ++i) cols[j][i] -= proj * cols[k][i];
            }
        }
        double nrm = 0.0;
        for (const auto& a : cols[j]) nrm += std::norm(a);
        nrm = std::sqrt(nrm);
        for (auto& a : cols[j]) a /= nrm;
    }
    ComplexMatrix u(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) u(i, j) = cols[j][i];
    return u;
}

}  // namespace qens
