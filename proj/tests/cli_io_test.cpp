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

#include "qens/cli/io.hpp"

#include <cmath>
#include <filesystem>
#include <numbers>

#include "gtest/gtest.h"

using namespace qens;
using namespace qens::cli;

namespace {

ErrorKind kind_of(const auto& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no exception";
    return ErrorKind::io_error;
}

std::string message_of(const auto& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.what();
    }
    ADD_FAILURE() << "no exception";
    return {};
}

}  // namespace

TEST(norm_spec_text, named_and_parametric) {
    EXPECT_EQ(parse_norm_spec("trace"), NormSpec::trace());
    EXPECT_EQ(parse_norm_spec("frobenius"), NormSpec::frobenius());
    EXPECT_EQ(parse_norm_spec("spectral"), NormSpec::spectral());
    EXPECT_EQ(parse_norm_spec("schatten:1"), NormSpec::trace());
    EXPECT_EQ(parse_norm_spec("schatten:3"), NormSpec::schatten(3));
    EXPECT_EQ(parse_norm_spec("schatten:inf"), NormSpec::spectral());
    EXPECT_EQ(parse_norm_spec("kyfan:2"), NormSpec::kyfan(2));
    for (const char* s : {"trace", "frobenius", "spectral", "schatten:3", "kyfan:2"})
        EXPECT_EQ(parse_norm_spec(s).to_string(), s);
}

TEST(norm_spec_text, rejects_bad_input) {
    for (const char* s : {"", "nuclear", "schatten:", "schatten:0.5", "schatten:x", "kyfan:0", "kyfan:1.5",
                          "kyfan:-1"}) {
        EXPECT_THROW(parse_norm_spec(s), Error) << s;
    }
}

TEST(grid_text, inclusive_endpoints) {
    const auto g = parse_grid("0:1:0.01");
    ASSERT_EQ(g.size(), 101u);
    EXPECT_EQ(g.front(), 0.0);
    EXPECT_EQ(g.back(), 1.0);
    EXPECT_NEAR(g[50], 0.5, 1e-15);
    const auto fine = parse_grid("0:1:0.001");
    EXPECT_EQ(fine.size(), 1001u);
    EXPECT_EQ(fine.back(), 1.0);
    const auto coarse = parse_grid("0:1:0.3");
    ASSERT_EQ(coarse.size(), 4u);
    EXPECT_NEAR(coarse.back(), 0.9, 1e-15);
    EXPECT_EQ(parse_grid("0.25"), std::vector<double>{0.25});
    EXPECT_EQ(parse_grid("2:2:1").size(), 1u);
}

TEST(grid_text, rejects_bad_input) {
    for (const char* s : {"", "a", "0:1", "0:1:0", "0:1:-0.1", "1:0:0.1", "0:1:x", "0:1:0.1:2", "inf"})
        EXPECT_EQ(kind_of([&] { parse_grid(s); }), ErrorKind::parse_error) << s;
}

TEST(format, measure_and_round_trip) {
    EXPECT_EQ(format_measure(0.0), "0.000000000000");
    EXPECT_EQ(format_measure(1.0), "1.000000000000");
    EXPECT_EQ(format_measure(std::numbers::sqrt2 / 2.0), "0.707106781187");
    const double v = 0.1 + 0.2;
    EXPECT_EQ(std::stod(format_double(v)), v);
    EXPECT_EQ(format_double(0.5), "0.5");
}

TEST(csv, layout) {
    CsvTable t({"a", "b"});
    t.add_row({"1", "2"});
    t.add_row({"3", "4"});
    EXPECT_EQ(t.str(), "a,b\n1,2\n3,4\n");
    EXPECT_EQ(kind_of([&] { t.write("/nonexistent-dir/x.csv"); }), ErrorKind::io_error);
}

TEST(ensemble_json, three_member_forms) {
    const Ensemble e = parse_ensemble_json(R"({
        "dim": 2,
        "members": [
            {"p": 0.25, "rho": [[[1, 0], [0, 0]], [[0, 0], [0, 0]]]},
            {"p": 0.25, "psi": [[0.7071067811865476, 0], [0, 0.7071067811865476]]},
            {"p": 0.5, "bloch": [0, 0, -0.5]}
        ]})");
    ASSERT_EQ(e.size(), 3u);
    EXPECT_EQ(e.dim(), 2u);
    EXPECT_EQ(e[0].rho.matrix()(0, 0), cplx(1.0));
    EXPECT_NEAR(e[1].rho.matrix()(1, 0).imag(), 0.5, 1e-15);
    EXPECT_NEAR(e[2].rho.matrix()(1, 1).real(), 0.75, 1e-15);
}

TEST(ensemble_json, diagnostics_name_member) {
    const std::string bad_trace = R"({"dim": 2, "members": [
        {"p": 0.5, "bloch": [0, 0, 1]},
        {"p": 0.5, "rho": [[[1, 0], [0, 0]], [[0, 0], [1, 0]]]}]})";
    const std::string msg = message_of([&] { parse_ensemble_json(bad_trace); });
    EXPECT_NE(msg.find("member 1"), std::string::npos) << msg;
    EXPECT_EQ(kind_of([&] { parse_ensemble_json(bad_trace); }), ErrorKind::not_density_matrix);

    const std::string bad_psi = R"({"dim": 2, "members": [{"p": 1, "psi": [[1, 0], [1, 0]]}]})";
    EXPECT_NE(message_of([&] { parse_ensemble_json(bad_psi); }).find("member 0"), std::string::npos);
    EXPECT_EQ(kind_of([&] { parse_ensemble_json(bad_psi); }), ErrorKind::not_normalized);

    const std::string outside = R"({"dim": 2, "members": [{"p": 1, "bloch": [1, 1, 0]}]})";
    EXPECT_EQ(kind_of([&] { parse_ensemble_json(outside); }), ErrorKind::bloch_out_of_ball);

    const std::string two_kinds = R"({"dim": 2, "members": [{"p": 1, "bloch": [0, 0, 1], "psi": []}]})";
    EXPECT_EQ(kind_of([&] { parse_ensemble_json(two_kinds); }), ErrorKind::parse_error);

    const std::string wrong_rows = R"({"dim": 3, "members": [{"p": 1, "rho": [[[1, 0]]]}]})";
    EXPECT_NE(message_of([&] { parse_ensemble_json(wrong_rows); }).find("member 0"), std::string::npos);
}

TEST(ensemble_json, document_level_errors) {
    EXPECT_EQ(kind_of([] { parse_ensemble_json("{"); }), ErrorKind::parse_error);
    EXPECT_EQ(kind_of([] { parse_ensemble_json("[]"); }), ErrorKind::parse_error);
    EXPECT_EQ(kind_of([] { parse_ensemble_json(R"({"members": []})"); }), ErrorKind::parse_error);
    EXPECT_EQ(kind_of([] { parse_ensemble_json(R"({"dim": 2, "members": []})"); }), ErrorKind::parse_error);
    EXPECT_EQ(kind_of([] {
                  parse_ensemble_json(R"({"dim": 2, "members": [{"p": 0.6, "bloch": [0, 0, 1]}]})");
              }),
              ErrorKind::invalid_ensemble);
    EXPECT_EQ(kind_of([] { load_ensemble_file("/nonexistent/file.json"); }), ErrorKind::io_error);
}

TEST(ensemble_json, round_trip_preserves_entries) {
    Rng rng(503);
    for (std::size_t dim : {2u, 3u, 4u}) {
        std::vector<Member> members;
        members.push_back({0.3, random_density_matrix(dim, dim, rng)});
        members.push_back({0.7, random_density_matrix(dim, 1, rng)});
        const Ensemble e(std::move(members));
        const std::string text = ensemble_to_json(e);
        const Ensemble back = parse_ensemble_json(text);
        ASSERT_EQ(back.size(), e.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            EXPECT_EQ(back[i].p, e[i].p);
            // Rank-deficient members pass through the eigenvalue clamp on reload.
            EXPECT_LE(max_abs_diff(back[i].rho.matrix(), e[i].rho.matrix()), 1e-15);
        }
        EXPECT_NEAR(quantumness(back, NormSpec::trace()), quantumness(e, NormSpec::trace()), 1e-14);
    }
}
