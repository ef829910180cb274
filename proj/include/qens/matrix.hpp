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
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qens/error.hpp"

namespace qens {

using cplx = std::complex<double>;

/// Dense square complex matrix stored row-major.
class ComplexMatrix {
public:
    /// Zero matrix of the given dimension.
    explicit ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
        if (dim == 0) throw Error(ErrorKind::malformed_matrix, "dimension must be positive");
    }

    ComplexMatrix(std::size_t dim, std::vector<cplx> entries)
        : dim_(dim), entries_(std::move(entries)) {
        if (dim == 0) throw Error(ErrorKind::malformed_matrix, "dimension must be positive");
        if (entries_.size() != dim * dim) {
            throw Error(ErrorKind::malformed_matrix,
                        "expected " + std::to_string(dim * dim) + " entries, got " +
                            std::to_string(entries_.size()));
        }
    }

    /// Builds from nested rows; every row must have as many entries as there are rows.
    static ComplexMatrix from_rows(const std::vector<std::vector<cplx>>& rows) {
        const std::size_t n = rows.size();
        std::vector<cplx> entries;
        entries.reserve(n * n);
        for (std::size_t i = 0; i < n; ++i) {
            if (rows[i].size() != n) {
                throw Error(ErrorKind::malformed_matrix,
                            "row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                                " entries, expected " + std::to_string(n));
            }
            entries.insert(entries.end(), rows[i].begin(), rows[i].end());
        }
        return ComplexMatrix(n, std::move(entries));
    }

    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
        std::vector<std::vector<cplx>> nested;
        nested.reserve(rows.size());
        for (const auto& row : rows) nested.emplace_back(row);
        return from_rows(nested);
    }

    static ComplexMatrix identity(std::size_t dim) {
        ComplexMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }

    static ComplexMatrix diagonal(std::span<const double> values) {
        ComplexMatrix m(values.size());
        for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
        return m;
    }

    static ComplexMatrix diagonal(std::initializer_list<double> values) {
        return diagonal(std::span<const double>(values.begin(), values.size()));
    }

    std::size_t dim() const noexcept { return dim_; }

    cplx& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
    const cplx& operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }

    std::span<const cplx> entries() const noexcept { return entries_; }
    std::span<cplx> entries() noexcept { return entries_; }

    ComplexMatrix& operator+=(const ComplexMatrix& other) {
        require_same_dim(other, "add");
        for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
        return *this;
    }

    ComplexMatrix& operator-=(const ComplexMatrix& other) {
        require_same_dim(other, "subtract");
        for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
        return *this;
    }

    ComplexMatrix& operator*=(cplx scalar) {
        for (auto& e : entries_) e *= scalar;
        return *this;
    }

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
    friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
        a.require_same_dim(b, "multiply");
        const std::size_t n = a.dim_;
        ComplexMatrix out(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                const cplx aik = a(i, k);
                if (aik == cplx{}) continue;
                for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
            }
        }
        return out;
    }

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    void require_same_dim(const ComplexMatrix& other, const char* op) const {
        if (other.dim_ != dim_) {
            throw Error(ErrorKind::dimension_mismatch,
                        std::string(op) + ": " + std::to_string(dim_) + "x" + std::to_string(dim_) +
                            " vs " + std::to_string(other.dim_) + "x" + std::to_string(other.dim_));
        }
    }

    std::size_t dim_;
    std::vector<cplx> entries_;
};

inline void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorKind::dimension_mismatch, std::string(what) + ": dimensions " +
                                                       std::to_string(a.dim()) + " and " +
                                                       std::to_string(b.dim()));
    }
}

/// Conjugate transpose.
inline ComplexMatrix adjoint(const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(j, i) = std::conj(a(i, j));
    return out;
}

inline cplx trace(const ComplexMatrix& a) {
    cplx sum{};
    for (std::size_t i = 0; i < a.dim(); ++i) sum += a(i, i);
    return sum;
}

inline double max_abs_entry(const ComplexMatrix& a) {
    double m = 0.0;
    for (const auto& e : a.entries()) m = std::max(m, std::abs(e));
    return m;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "max_abs_diff");
    double m = 0.0;
    for (std::size_t k = 0; k < a.entries().size(); ++k)
        m = std::max(m, std::abs(a.entries()[k] - b.entries()[k]));
    return m;
}

/// Largest entrywise deviation |a_ij - conj(a_ji)|.
inline double hermitian_deviation(const ComplexMatrix& a) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i; j < a.dim(); ++j)
            m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
    return m;
}

/// Largest entrywise deviation |a_ij + conj(a_ji)|.
inline double anti_hermitian_deviation(const ComplexMatrix& a) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i; j < a.dim(); ++j)
            m = std::max(m, std::abs(a(i, j) + std::conj(a(j, i))));
    return m;
}

inline bool is_hermitian(const ComplexMatrix& a, double tol) {
    return hermitian_deviation(a) <= tol;
}

/// (A + A^dagger) / 2; exactly Hermitian in floating point.
inline ComplexMatrix hermitian_part(const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out(i, i) = a(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx v = 0.5 * (a(i, j) + std::conj(a(j, i)));
            out(i, j) = v;
            out(j, i) = std::conj(v);
        }
    }
    return out;
}

/// Largest entrywise deviation of U^dagger U from the identity.
inline double unitarity_deviation(const ComplexMatrix& u) {
    return max_abs_diff(adjoint(u) * u, ComplexMatrix::identity(u.dim()));
}

inline bool is_unitary(const ComplexMatrix& u, double tol) { return unitarity_deviation(u) <= tol; }

/// AB - BA.
inline ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "commutator");
    return a * b - b * a;
}

/// Kronecker product; the first factor indexes the slow (outer) block.
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t na = a.dim();
    const std::size_t nb = b.dim();
    ComplexMatrix out(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx{}) continue;
            for (std::size_t k = 0; k < nb; ++k)
                for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = aij * b(k, l);
        }
    return out;
}

/// UAU^dagger.
inline ComplexMatrix conjugate_by(const ComplexMatrix& u, const ComplexMatrix& a) {
    require_same_dim(u, a, "conjugate_by");
    return u * a * adjoint(u);
}

namespace pauli {

inline ComplexMatrix x() { return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}); }
inline ComplexMatrix y() {
    return ComplexMatrix::from_rows({{0.0, cplx(0.0, -1.0)}, {cplx(0.0, 1.0), 0.0}});
}
inline ComplexMatrix z() { return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}}); }

}  // namespace pauli

}  // namespace qens
