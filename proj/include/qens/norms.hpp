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
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "qens/eigen.hpp"
#include "qens/error.hpp"
#include "qens/matrix.hpp"

namespace qens {

/// Selects one of the unitary-similarity-invariant norms: Schatten p (p >= 1 or
/// infinity) or Ky Fan k.
class NormSpec {
public:
    enum class Kind { schatten, spectral, kyfan };

    static NormSpec schatten(double p) {
        if (std::isinf(p) && p > 0) return spectral();
        if (!(p >= 1.0)) {
            throw Error(ErrorKind::invalid_spec,
                        "Schatten exponent must be >= 1, got " + std::to_string(p));
        }
        return NormSpec(Kind::schatten, p, 0);
    }
    static NormSpec spectral() { return NormSpec(Kind::spectral, 0.0, 0); }
    static NormSpec trace() { return schatten(1.0); }
    static NormSpec frobenius() { return schatten(2.0); }
    static NormSpec kyfan(std::size_t k) {
        if (k < 1) throw Error(ErrorKind::invalid_spec, "Ky Fan order must be >= 1");
        return NormSpec(Kind::kyfan, 0.0, k);
    }

    Kind kind() const noexcept { return kind_; }
    /// Schatten exponent; meaningful only for Kind::schatten.
    double p() const noexcept { return p_; }
    /// Ky Fan order; meaningful only for Kind::kyfan.
    std::size_t k() const noexcept { return k_; }

    /// Canonical textual form: trace, frobenius, spectral, schatten:<p> or kyfan:<k>.
    std::string to_string() const {
        switch (kind_) {
            case Kind::spectral: return "spectral";
            case Kind::kyfan: return "kyfan:" + std::to_string(k_);
            case Kind::schatten:
                if (p_ == 1.0) return "trace";
                if (p_ == 2.0) return "frobenius";
                {
                    std::ostringstream os;
                    os.precision(17);
                    os << "schatten:" << p_;
                    return os.str();
                }
        }
        return "?";
    }

    friend bool operator==(const NormSpec&, const NormSpec&) = default;

private:
    NormSpec(Kind kind, double p, std::size_t k) : kind_(kind), p_(p), k_(k) {}

    Kind kind_;
    double p_;
    std::size_t k_;
};

namespace detail {

inline std::vector<double> sorted_abs(std::vector<double> values) {
    for (auto& v : values) v = std::abs(v);
    std::stable_sort(values.begin(), values.end(), std::greater<>());
    return values;
}

// Relative deviation below which a matrix is routed through a structured path.
inline constexpr double kStructureTolerance = 1e-13;

}  // namespace detail

/// Singular values via the eigenvalues of A^dagger A, clamped at zero before the root.
inline std::vector<double> singular_values_via_gram(const ComplexMatrix& a) {
    std::vector<double> eig = hermitian_eigenvalues(hermitian_part(adjoint(a) * a), 0.0);
    for (auto& e : eig) e = std::sqrt(std::max(e, 0.0));
    return eig;
}

/// Singular values, nonincreasing.
///
/// Normal matrices that are Hermitian or anti-Hermitian (commutators of density
/// matrices) are handled through |eigenvalues| of A or iA directly; all other
/// inputs go through the Gram matrix.
inline std::vector<double> singular_values(const ComplexMatrix& a) {
    const double scale = std::max(1.0, max_abs_entry(a));
    const double tol = detail::kStructureTolerance * scale;
    if (anti_hermitian_deviation(a) <= tol) {
        ComplexMatrix ia = a * cplx(0.0, 1.0);
        return detail::sorted_abs(hermitian_eigenvalues(hermitian_part(ia), tol));
    }
    if (hermitian_deviation(a) <= tol) {
        return detail::sorted_abs(hermitian_eigenvalues(hermitian_part(a), tol));
    }
    return singular_values_via_gram(a);
}

/// Evaluates the selected norm from a nonincreasing list of singular values.
inline double norm_from_singular_values(const std::vector<double>& s, const NormSpec& spec) {
    switch (spec.kind()) {
        case NormSpec::Kind::spectral: return s.empty() ? 0.0 : s.front();
        case NormSpec::Kind::kyfan: {
            if (spec.k() > s.size()) {
                throw Error(ErrorKind::invalid_spec, "Ky Fan order " + std::to_string(spec.k()) +
                                                         " exceeds dimension " +
                                                         std::to_string(s.size()));
            }
            double sum = 0.0;
            for (std::size_t j = 0; j < spec.k(); ++j) sum += s[j];
            return sum;
        }
        case NormSpec::Kind::schatten: {
            const double p = spec.p();
            if (p == 1.0) {
                double sum = 0.0;
                for (double v : s) sum += v;
                return sum;
            }
            const double top = s.empty() ? 0.0 : s.front();
            if (top == 0.0) return 0.0;
            if (p == 2.0) {
                double sum = 0.0;
                for (double v : s) sum += (v / top) * (v / top);
                return top * std::sqrt(sum);
            }
            double sum = 0.0;
            for (double v : s) sum += std::pow(v / top, p);
            return top * std::pow(sum, 1.0 / p);
        }
    }
    return 0.0;
}

inline double norm(const ComplexMatrix& a, const NormSpec& spec) {
    if (spec.kind() == NormSpec::Kind::kyfan && spec.k() > a.dim()) {
        throw Error(ErrorKind::invalid_spec, "Ky Fan order " + std::to_string(spec.k()) +
                                                 " exceeds dimension " + std::to_string(a.dim()));
    }
    return norm_from_singular_values(singular_values(a), spec);
}

}  // namespace qens
