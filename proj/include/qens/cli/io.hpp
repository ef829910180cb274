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

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "json.hpp"
#include "qens/ensemble.hpp"
#include "qens/error.hpp"
#include "qens/norms.hpp"
#include "qens/states.hpp"

namespace qens::cli {

namespace detail {

inline double parse_double(std::string_view text, const std::string& what) {
    std::string s(text);
    if (s == "inf" || s == "infinity") return std::numeric_limits<double>::infinity();
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(s, &used);
    } catch (const std::exception&) {
        throw Error(ErrorKind::parse_error, what + ": '" + s + "' is not a number");
    }
    if (used != s.size()) throw Error(ErrorKind::parse_error, what + ": '" + s + "' is not a number");
    return value;
}

inline std::size_t parse_size(std::string_view text, const std::string& what) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw Error(ErrorKind::parse_error,
                    what + ": '" + std::string(text) + "' is not a nonnegative integer");
    }
    return value;
}

}  // namespace detail

/// Parses `trace | frobenius | spectral | schatten:<p> | kyfan:<k>`.
inline NormSpec parse_norm_spec(std::string_view text) {
    if (text == "trace") return NormSpec::trace();
    if (text == "frobenius") return NormSpec::frobenius();
    if (text == "spectral") return NormSpec::spectral();
    const auto colon = text.find(':');
    if (colon != std::string_view::npos) {
        const std::string_view family = text.substr(0, colon);
        const std::string_view arg = text.substr(colon + 1);
        if (family == "schatten") return NormSpec::schatten(detail::parse_double(arg, "schatten exponent"));
        if (family == "kyfan") return NormSpec::kyfan(detail::parse_size(arg, "Ky Fan order"));
    }
    throw Error(ErrorKind::invalid_spec,
                "unknown norm '" + std::string(text) +
                    "' (expected trace, frobenius, spectral, schatten:<p> or kyfan:<k>)");
}

/// Parses `start:stop:step` (inclusive of stop up to rounding) or a single value.
inline std::vector<double> parse_grid(std::string_view text) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const auto colon = text.find(':', start);
        fields.emplace_back(text.substr(start, colon == std::string_view::npos ? text.npos : colon - start));
        if (colon == std::string_view::npos) break;
        start = colon + 1;
    }
    if (fields.size() == 1) {
        const double v = detail::parse_double(fields[0], "grid value");
        if (!std::isfinite(v)) throw Error(ErrorKind::parse_error, "grid value must be finite");
        return {v};
    }
    if (fields.size() != 3) {
        throw Error(ErrorKind::parse_error,
                    "grid '" + std::string(text) + "' must be <value> or <start>:<stop>:<step>");
    }
    const double lo = detail::parse_double(fields[0], "grid start");
    const double hi = detail::parse_double(fields[1], "grid stop");
    const double step = detail::parse_double(fields[2], "grid step");
    if (!std::isfinite(lo) || !std::isfinite(hi) || !std::isfinite(step)) {
        throw Error(ErrorKind::parse_error, "grid bounds must be finite");
    }
    if (!(step > 0.0)) throw Error(ErrorKind::parse_error, "grid step must be positive");
    if (hi < lo) throw Error(ErrorKind::parse_error, "grid stop is below start");
    const double span = (hi - lo) / step;
    if (span > 1e7) throw Error(ErrorKind::parse_error, "grid has too many points");
    const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
    std::vector<double> values(count);
    for (std::size_t k = 0; k < count; ++k) values[k] = lo + static_cast<double>(k) * step;
    // The last point snaps to `stop` when the grid lands on it up to rounding.
    if (std::abs(values.back() - hi) <= 1e-9 * std::max(1.0, std::abs(step))) values.back() = hi;
    return values;
}

/// Shortest decimal text that round-trips the double.
inline std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

/// Fixed 12-decimal rendering used for reported measure values.
inline std::string format_measure(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", v);
    return buf;
}

/// CSV writer: comma separated, LF line endings, header first.
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

    void add_row(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    const std::vector<std::string>& header() const noexcept { return header_; }
    const std::vector<std::vector<std::string>>& rows() const noexcept { return rows_; }

    std::string str() const {
        std::string out;
        append_line(out, header_);
        for (const auto& row : rows_) append_line(out, row);
        return out;
    }

    void write(const std::string& path) const {
        std::ofstream file(path, std::ios::binary);
        if (!file) throw Error(ErrorKind::io_error, "cannot open '" + path + "' for writing");
        file << str();
        if (!file) throw Error(ErrorKind::io_error, "failed writing '" + path + "'");
    }

private:
    static void append_line(std::string& out, const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) out += ',';
            out += fields[i];
        }
        out += '\n';
    }

    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

namespace detail {

inline cplx parse_complex(const nlohmann::json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw Error(ErrorKind::parse_error, where + ": complex numbers are [re, im] pairs");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace detail

/// Reads an ensemble from its JSON text.
///
/// Schema: {"dim": n, "members": [{"p": x, "rho" | "psi" | "bloch": ...}, ...]}
/// with complex entries written as [re, im]. Diagnostics name the member index.
inline Ensemble parse_ensemble_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::parse_error, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw Error(ErrorKind::parse_error, "top level must be an object");
    if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 1) {
        throw Error(ErrorKind::parse_error, "field 'dim' must be a positive integer");
    }
    const auto dim = static_cast<std::size_t>(doc["dim"].get<long long>());
    if (!doc.contains("members") || !doc["members"].is_array() || doc["members"].empty()) {
        throw Error(ErrorKind::parse_error, "field 'members' must be a nonempty array");
    }

    std::vector<Member> members;
    const auto& list = doc["members"];
    for (std::size_t idx = 0; idx < list.size(); ++idx) {
        const std::string where = "member " + std::to_string(idx);
        const auto& rec = list[idx];
        try {
            if (!rec.is_object()) throw Error(ErrorKind::parse_error, "must be an object");
            if (!rec.contains("p") || !rec["p"].is_number()) {
                throw Error(ErrorKind::parse_error, "field 'p' must be a number");
            }
            const double p = rec["p"].get<double>();
            const int kinds = static_cast<int>(rec.contains("rho")) +
                              static_cast<int>(rec.contains("psi")) +
                              static_cast<int>(rec.contains("bloch"));
            if (kinds != 1) {
                throw Error(ErrorKind::parse_error, "needs exactly one of 'rho', 'psi', 'bloch'");
            }
            if (rec.contains("rho")) {
                const auto& rows = rec["rho"];
                if (!rows.is_array() || rows.size() != dim) {
                    throw Error(ErrorKind::parse_error,
                                "field 'rho' must have " + std::to_string(dim) + " rows");
                }
                ComplexMatrix m(dim);
                for (std::size_t i = 0; i < dim; ++i) {
                    if (!rows[i].is_array() || rows[i].size() != dim) {
                        throw Error(ErrorKind::parse_error, "field 'rho' row " + std::to_string(i) +
                                                                " must have " + std::to_string(dim) +
                                                                " entries");
                    }
                    for (std::size_t j = 0; j < dim; ++j)
                        m(i, j) = detail::parse_complex(rows[i][j], "field 'rho'");
                }
                members.push_back({p, DensityMatrix(m)});
            } else if (rec.contains("psi")) {
                const auto& amps = rec["psi"];
                if (!amps.is_array() || amps.size() != dim) {
                    throw Error(ErrorKind::parse_error,
                                "field 'psi' must have " + std::to_string(dim) + " amplitudes");
                }
                std::vector<cplx> v(dim);
                for (std::size_t i = 0; i < dim; ++i) v[i] = detail::parse_complex(amps[i], "field 'psi'");
                members.push_back({p, projector(PureState(std::move(v)))});
            } else {
                if (dim != 2) throw Error(ErrorKind::parse_error, "field 'bloch' requires dim 2");
                const auto& r = rec["bloch"];
                if (!r.is_array() || r.size() != 3 || !r[0].is_number() || !r[1].is_number() ||
                    !r[2].is_number()) {
                    throw Error(ErrorKind::parse_error, "field 'bloch' must be [x, y, z]");
                }
                members.push_back(
                    {p, density_from_bloch(BlochVector(r[0].get<double>(), r[1].get<double>(),
                                                       r[2].get<double>()))});
            }
        } catch (const Error& e) {
            throw Error(e.kind(), where + ": " + e.detail());
        }
    }
    return Ensemble(std::move(members));
}

inline Ensemble load_ensemble_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Error(ErrorKind::io_error, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    return parse_ensemble_json(buf.str());
}

/// Serializes every member in the `rho` form. Output is byte-stable.
inline std::string ensemble_to_json(const Ensemble& ensemble) {
    nlohmann::json doc;
    doc["dim"] = ensemble.dim();
    nlohmann::json members = nlohmann::json::array();
    for (const auto& m : ensemble.members()) {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t i = 0; i < ensemble.dim(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t j = 0; j < ensemble.dim(); ++j) {
                const cplx v = m.rho.matrix()(i, j);
                row.push_back({v.real(), v.imag()});
            }
            rows.push_back(std::move(row));
        }
        members.push_back({{"p", m.p}, {"rho", std::move(rows)}});
    }
    doc["members"] = std::move(members);
    return doc.dump(1) + "\n";
}

}  // namespace qens::cli
