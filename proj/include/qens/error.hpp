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

#include <stdexcept>
#include <string>
#include <string_view>

namespace qens {

enum class ErrorKind {
    malformed_matrix,
    dimension_mismatch,
    not_hermitian,
    no_convergence,
    invalid_spec,
    not_density_matrix,
    not_normalized,
    bloch_out_of_ball,
    incomplete_channel,
    param_out_of_range,
    not_unitary,
    invalid_ensemble,
    weight_sum_invalid,
    decomposition_mismatch,
    invalid_partition,
    zero_block_probability,
    non_real_amplitudes,
    not_schmidt_form,
    parse_error,
    io_error,
};

constexpr std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::malformed_matrix: return "MalformedMatrix";
        case ErrorKind::dimension_mismatch: return "DimensionMismatch";
        case ErrorKind::not_hermitian: return "NotHermitian";
        case ErrorKind::no_convergence: return "NoConvergence";
        case ErrorKind::invalid_spec: return "InvalidSpec";
        case ErrorKind::not_density_matrix: return "NotDensityMatrix";
        case ErrorKind::not_normalized: return "NotNormalized";
        case ErrorKind::bloch_out_of_ball: return "BlochOutOfBall";
        case ErrorKind::incomplete_channel: return "IncompleteChannel";
        case ErrorKind::param_out_of_range: return "ParamOutOfRange";
        case ErrorKind::not_unitary: return "NotUnitary";
        case ErrorKind::invalid_ensemble: return "InvalidEnsemble";
        case ErrorKind::weight_sum_invalid: return "WeightSumInvalid";
        case ErrorKind::decomposition_mismatch: return "DecompositionMismatch";
        case ErrorKind::invalid_partition: return "InvalidPartition";
        case ErrorKind::zero_block_probability: return "ZeroBlockProbability";
        case ErrorKind::non_real_amplitudes: return "NonRealAmplitudes";
        case ErrorKind::not_schmidt_form: return "NotSchmidtForm";
        case ErrorKind::parse_error: return "ParseError";
        case ErrorKind::io_error: return "IoError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message),
          kind_(kind),
          detail_(message) {}

    ErrorKind kind() const noexcept { return kind_; }
    /// The message without the kind prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

}  // namespace qens
