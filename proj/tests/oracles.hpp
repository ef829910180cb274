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

// Independent reference computations used only by the tests. Nothing here
// calls into the eigensolver or the norm layer.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "qens/matrix.hpp"
#include "qens/rng.hpp"

namespace qens::oracle {

/// Eigenvalues of a 2x2 Hermitian matrix from the characteristic polynomial.
inline std::pair<double, double> eig2_hermitian(const ComplexMatrix& a) {
    const double mean = 0.5 * (a(0, 0).real() + a(1, 1).real());
    const double half_gap = 0.5 * (a(0, 0).real() - a(1, 1).real());
    const double r = std::sqrt(half_gap * half_gap + std::norm(a(0, 1)));
    return {mean + r, mean - r};
}

/// Singular values of a 2x2 matrix: s1^2 + s2^2 = ||A||_F^2, s1 s2 = |det A|.
inline std::pair<double, double> singular2(const ComplexMatrix& a) {
    double f2 = 0.0;
    for (const auto& e : a.entries()) f2 += std::norm(e);
    const double det = std::abs(a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0));
    const double disc = std::sqrt(std::max(0.0, f2 * f2 - 4.0 * det * det));
    const double s1 = std::sqrt(0.5 * (f2 + disc));
    const double s2 = s1 > 0.0 ? det / s1 : 0.0;
    return {s1, s2};
}

/// (sum |a_ij|^2)^(1/2).
inline double frobenius(const ComplexMatrix& a) {
    double sum = 0.0;
    for (const auto& e : a.entries()) sum += std::norm(e);
    return std::sqrt(sum);
}

/// Largest singular value by power iteration on A^dagger A.
inline double spectral_norm_power(const ComplexMatrix& a, int iterations = 2000) {
    const std::size_t n = a.dim();
    std::vector<cplx> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = cplx(1.0 + 0.1 * static_cast<double>(i), 0.3);
    double sigma = 0.0;
    for (int it = 0; it < iterations; ++it) {
        std::vector<cplx> w(n), u(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) w[i] += a(i, j) * v[j];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) u[i] += std::conj(a(j, i)) * w[j];
        double nu = 0.0, nw = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            nu += std::norm(u[i]);
            nw += std::norm(w[i]);
        }
        nu = std::sqrt(nu);
        sigma = std::sqrt(nw);
        if (nu == 0.0) return 0.0;
        for (std::size_t i = 0; i < n; ++i) v[i] = u[i] / nu;
    }
    return sigma;
}

/// Random matrix with independent standard complex Gaussian entries.
inline ComplexMatrix gaussian_matrix(std::size_t n, Rng& rng) {
    ComplexMatrix m(n);
    for (auto& e : m.entries()) {
        const double re = rng.normal();
        const double im = rng.normal();
        e = cplx(re, im);
    }
    return m;
}

/// Cross product of 3-vectors.
inline std::vector<double> cross(const std::vector<double>& a, const std::vector<double>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline double length(const std::vector<double>& a) {
    return std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
}

}  // namespace qens::oracle
