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
#include <numeric>
#include <string>
#include <vector>

#include "qens/error.hpp"
#include "qens/matrix.hpp"

namespace qens {

/// Eigenvalues sorted nonincreasing, with matching eigenvectors stored as columns.
struct HermitianEigen {
    std::vector<double> values;
    ComplexMatrix vectors;
};

namespace detail {

inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kJacobiRelativeThreshold = 1e-14;

inline double off_diagonal_norm(const ComplexMatrix& a) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (i != j) sum += std::norm(a(i, j));
    return std::sqrt(sum);
}

inline double frobenius_entrywise(const ComplexMatrix& a) {
    double sum = 0.0;
    for (const auto& e : a.entries()) sum += std::norm(e);
    return std::sqrt(sum);
}

// One complex Jacobi rotation zeroing a(p, q). The rotation is J = D R with
// D = diag(1, e^{-i phi}) on (p, q) making the pivot real, and R the real
// symmetric Jacobi rotation. A <- J^dagger A J, V <- V J.
inline void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const cplx apq = a(p, q);
    const double g = std::abs(apq);
    if (g == 0.0) return;
    const cplx phase = apq / g;  // e^{i phi}
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();

    const double tau = (aqq - app) / (2.0 * g);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const cplx jpp = c;
    const cplx jpq = s;
    const cplx jqp = -s * std::conj(phase);
    const cplx jqq = c * std::conj(phase);

    const std::size_t n = a.dim();
    for (std::size_t k = 0; k < n; ++k) {
        const cplx akp = a(k, p);
        const cplx akq = a(k, q);
        a(k, p) = akp * jpp + akq * jqp;
        a(k, q) = akp * jpq + akq * jqq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const cplx apk = a(p, k);
        const cplx aqk = a(q, k);
        a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
        a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();

    for (std::size_t k = 0; k < n; ++k) {
        const cplx vkp = v(k, p);
        const cplx vkq = v(k, q);
        v(k, p) = vkp * jpp + vkq * jqp;
        v(k, q) = vkp * jpq + vkq * jqq;
    }
}

}  // namespace detail

/// Cyclic Jacobi eigendecomposition of a Hermitian matrix.
///
/// The input must be Hermitian within `tol` (max entrywise |A - A^dagger|); it is
/// symmetrized before iterating. Throws NotHermitian or NoConvergence.
inline HermitianEigen hermitian_eigen(const ComplexMatrix& input, double tol = 1e-10) {
    const double deviation = hermitian_deviation(input);
    if (!(deviation <= tol)) {
        throw Error(ErrorKind::not_hermitian,
                    "max |A - A^dagger| = " + std::to_string(deviation) + " exceeds " +
                        std::to_string(tol));
    }
    ComplexMatrix a = hermitian_part(input);
    const std::size_t n = a.dim();
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double threshold = detail::kJacobiRelativeThreshold * detail::frobenius_entrywise(a);
    bool converged = false;
    for (int sweep = 0; sweep < detail::kJacobiMaxSweeps; ++sweep) {
        if (detail::off_diagonal_norm(a) <= threshold) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) detail::jacobi_rotate(a, v, p, q);
    }
    if (!converged && detail::off_diagonal_norm(a) > threshold) {
        throw Error(ErrorKind::no_convergence,
                    "Jacobi sweep budget of " + std::to_string(detail::kJacobiMaxSweeps) +
                        " exhausted");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a(i, i).real() > a(j, j).real();
    });

    HermitianEigen result{std::vector<double>(n), ComplexMatrix(n)};
    for (std::size_t col = 0; col < n; ++col) {
        result.values[col] = a(order[col], order[col]).real();
        for (std::size_t row = 0; row < n; ++row) result.vectors(row, col) = v(row, order[col]);
    }
    return result;
}

/// All eigenvalues of a Hermitian matrix, nonincreasing.
inline std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a, double tol = 1e-10) {
    return hermitian_eigen(a, tol).values;
}

/// V diag(values) V^dagger.
inline ComplexMatrix reconstruct(const HermitianEigen& eig) {
    const std::size_t n = eig.vectors.dim();
    ComplexMatrix out(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double lambda = eig.values[k];
        if (lambda == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i) {
            const cplx vik = lambda * eig.vectors(i, k);
            for (std::size_t j = 0; j < n; ++j) out(i, j) += vik * std::conj(eig.vectors(j, k));
        }
    }
    return out;
}

}  // namespace qens
