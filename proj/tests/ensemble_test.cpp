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

#include "qens/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "qens/cli/properties.hpp"

using namespace qens;

namespace {

constexpr double kHalfRoot2 = std::numbers::sqrt2 / 2.0;

DensityMatrix ket0() { return projector(PureState::basis(2, 0)); }
DensityMatrix ket1() { return projector(PureState::basis(2, 1)); }
DensityMatrix plus() { return projector(PureState({kHalfRoot2, kHalfRoot2})); }

std::vector<NormSpec> specs_for(std::size_t dim) {
    std::vector<NormSpec> out = {NormSpec::trace(), NormSpec::frobenius(), NormSpec::spectral(),
                                 NormSpec::schatten(3.0)};
    if (dim >= 2) out.push_back(NormSpec::kyfan(2));
    return out;
}

// Sum over all ordered pairs, diagonal included.
double ordered_pair_sum(const Ensemble& e, const NormSpec& spec) {
    double sum = 0.0;
    for (const auto& a : e.members())
        for (const auto& b : e.members())
            sum += std::sqrt(a.p * b.p) * norm(commutator(a.rho.matrix(), b.rho.matrix()), spec);
    return sum;
}

Ensemble random_ensemble(std::size_t dim, std::size_t m, Rng& rng) {
    return cli::detail::random_ensemble(dim, m, rng);
}

}  // namespace

TEST(ensemble, validation) {
    EXPECT_THROW(Ensemble({}), Error);
    EXPECT_THROW(Ensemble({{0.5, ket0()}, {0.4, ket1()}}), Error);
    EXPECT_THROW(Ensemble({{1.2, ket0()}, {-0.2, ket1()}}), Error);
    try {
        Ensemble({{0.5, ket0()}, {0.5, DensityMatrix::maximally_mixed(3)}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::dimension_mismatch);
    }
    EXPECT_NO_THROW(Ensemble({{1.0, ket0()}, {0.0, ket1()}}));
}

TEST(quantumness, single_state_vanishes) {
    EXPECT_EQ(quantumness(Ensemble({{1.0, plus()}}), NormSpec::trace()), 0.0);
}

TEST(quantumness, commuting_states_vanish) {
    const Ensemble e({{0.2, DensityMatrix(ComplexMatrix::diagonal({0.1, 0.9, 0.0}))},
                      {0.5, DensityMatrix(ComplexMatrix::diagonal({0.3, 0.3, 0.4}))},
                      {0.3, DensityMatrix(ComplexMatrix::diagonal({1.0, 0.0, 0.0}))}});
    for (const NormSpec& spec : specs_for(3)) EXPECT_EQ(quantumness(e, spec), 0.0);
}

TEST(quantumness, pure_pair_at_45_degrees_is_one) {
    const Ensemble e({{0.5, ket0()}, {0.5, plus()}});
    EXPECT_NEAR(quantumness(e, NormSpec::trace()), 1.0, 1e-14);
}

TEST(quantumness, qubit_pair_matches_cross_product_oracle) {
    // [rho1, rho2] = (i/2)(r1 x r2).sigma, whose Frobenius norm is |r1 x r2| / sqrt 2.
    Rng rng(211);
    for (int k = 0; k < 200; ++k) {
        std::vector<double> r1(3), r2(3);
        for (auto* r : {&r1, &r2}) {
            do {
                for (auto& x : *r) x = rng.uniform(-1, 1);
            } while (oracle::length(*r) > 1.0);
        }
        const double p1 = rng.uniform();
        const Ensemble e({{p1, density_from_bloch(BlochVector(r1[0], r1[1], r1[2]))},
                          {1.0 - p1, density_from_bloch(BlochVector(r2[0], r2[1], r2[2]))}});
        const double expected =
            2.0 * std::sqrt(p1 * (1.0 - p1)) * oracle::length(oracle::cross(r1, r2)) / std::numbers::sqrt2;
        EXPECT_NEAR(quantumness(e, NormSpec::frobenius()), expected, 1e-12);
    }
}

TEST(quantumness, matches_ordered_pair_definition) {
    Rng rng(223);
    for (int k = 0; k < 30; ++k) {
        const Ensemble e = random_ensemble(3, 4, rng);
        for (const NormSpec& spec : specs_for(3))
            EXPECT_NEAR(quantumness(e, spec), ordered_pair_sum(e, spec), 1e-12);
    }
}

TEST(quantumness, zero_probability_member_contributes_nothing) {
    const Ensemble with({{0.5, ket0()}, {0.5, plus()}, {0.0, ket1()}});
    const Ensemble without({{0.5, ket0()}, {0.5, plus()}});
    EXPECT_EQ(quantumness(with, NormSpec::trace()), quantumness(without, NormSpec::trace()));
}

TEST(quantumness, permutation_invariant_and_deterministic) {
    Rng rng(227);
    const Ensemble e = random_ensemble(3, 5, rng);
    std::vector<Member> reversed = e.members();
    std::reverse(reversed.begin(), reversed.end());
    const double a = quantumness(e, NormSpec::trace());
    EXPECT_EQ(a, quantumness(e, NormSpec::trace()));
    EXPECT_NEAR(a, quantumness(Ensemble(reversed), NormSpec::trace()), 1e-13);
}

TEST(quantumness, kyfan_order_checked_against_dimension) {
    try {
        quantumness(Ensemble({{1.0, ket0()}}), NormSpec::kyfan(3));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::invalid_spec);
    }
}

TEST(unitary_conjugate, examples) {
    Rng rng(229);
    const Ensemble e = random_ensemble(2, 3, rng);
    const Ensemble same = unitary_conjugate(e, ComplexMatrix::identity(2));
    for (std::size_t i = 0; i < e.size(); ++i) {
        EXPECT_EQ(same[i].p, e[i].p);
        EXPECT_LE(max_abs_diff(same[i].rho.matrix(), e[i].rho.matrix()), 1e-15);
    }
    const Ensemble flipped = unitary_conjugate(Ensemble({{1.0, ket0()}}), pauli::x());
    EXPECT_LE(max_abs_diff(flipped[0].rho.matrix(), ket1().matrix()), 0.0);
}

TEST(unitary_conjugate, errors) {
    const Ensemble e({{1.0, ket0()}});
    try {
        unitary_conjugate(e, ComplexMatrix::diagonal({1.0, 2.0}));
        FAIL();
    } catch (const Error& err) {
        EXPECT_EQ(err.kind(), ErrorKind::not_unitary);
    }
    EXPECT_THROW(unitary_conjugate(e, ComplexMatrix::identity(3)), Error);
}

TEST(unitary_conjugate, preserves_quantumness) {
    Rng rng(233);
    for (std::size_t dim = 2; dim <= 4; ++dim)
        for (int k = 0; k < 30; ++k) {
            const Ensemble e = random_ensemble(dim, 3, rng);
            const Ensemble r = unitary_conjugate(e, random_unitary(dim, rng));
            for (const NormSpec& spec : specs_for(dim))
                EXPECT_NEAR(quantumness(r, spec), quantumness(e, spec), 1e-9);
        }
}

TEST(probabilistic_union, examples) {
    Rng rng(239);
    const Ensemble e = random_ensemble(2, 3, rng);
    const Ensemble one = probabilistic_union({e}, {1.0});
    ASSERT_EQ(one.size(), e.size());
    for (std::size_t i = 0; i < e.size(); ++i) EXPECT_EQ(one[i].p, e[i].p);

    const Ensemble two = probabilistic_union({Ensemble({{1.0, ket0()}}), Ensemble({{1.0, plus()}})}, {0.5, 0.5});
    ASSERT_EQ(two.size(), 2u);
    EXPECT_EQ(two[0].p, 0.5);
    EXPECT_EQ(two[1].p, 0.5);
    EXPECT_EQ(two[1].rho.matrix(), plus().matrix());

    // Identical states stay separate members.
    const Ensemble dup = probabilistic_union({Ensemble({{1.0, ket0()}}), Ensemble({{1.0, ket0()}})}, {0.5, 0.5});
    EXPECT_EQ(dup.size(), 2u);
}

TEST(probabilistic_union, errors) {
    const Ensemble a({{1.0, ket0()}});
    try {
        probabilistic_union({a, a}, {0.5, 0.6});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::weight_sum_invalid);
    }
    EXPECT_THROW(probabilistic_union({a, a}, {1.0}), Error);
    try {
        probabilistic_union({a, Ensemble({{1.0, DensityMatrix::maximally_mixed(3)}})}, {0.5, 0.5});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::dimension_mismatch);
    }
}

TEST(probabilistic_union, concavity) {
    Rng rng(241);
    for (std::size_t dim = 2; dim <= 3; ++dim)
        for (int k = 0; k < 40; ++k) {
            const Ensemble a = random_ensemble(dim, 2, rng);
            const Ensemble b = random_ensemble(dim, 3, rng);
            const double w = rng.uniform();
            const Ensemble u = probabilistic_union({a, b}, {w, 1.0 - w});
            for (const NormSpec& spec : specs_for(dim))
                EXPECT_GE(quantumness(u, spec), w * quantumness(a, spec) + (1 - w) * quantumness(b, spec) - 1e-9);
        }
}

TEST(decompose_member, trivial_decomposition) {
    Rng rng(251);
    const Ensemble e = random_ensemble(2, 3, rng);
    const auto out = decompose_member(e, 1, {{1.0, e[1].rho}});
    ASSERT_EQ(out.size(), 1u);
    EXPECT_EQ(quantumness(out[0], NormSpec::trace()), quantumness(e, NormSpec::trace()));
}

TEST(decompose_member, maximally_mixed_into_basis_states) {
    const Ensemble e({{0.5, DensityMatrix::maximally_mixed(2)}, {0.5, plus()}});
    const auto out = decompose_member(e, 0, {{0.5, ket0()}, {0.5, ket1()}});
    ASSERT_EQ(out.size(), 2u);
    EXPECT_EQ(out[0][0].rho.matrix(), ket0().matrix());
    EXPECT_EQ(out[1][0].rho.matrix(), ket1().matrix());
    EXPECT_EQ(out[1][0].p, 0.5);
    EXPECT_EQ(out[1][1].rho.matrix(), plus().matrix());
}

TEST(decompose_member, mismatch_rejected) {
    const Ensemble e({{0.5, DensityMatrix::maximally_mixed(2)}, {0.5, plus()}});
    try {
        decompose_member(e, 0, {{0.7, ket0()}, {0.3, ket1()}});
        FAIL();
    } catch (const Error& err) {
        EXPECT_EQ(err.kind(), ErrorKind::decomposition_mismatch);
    }
    EXPECT_THROW(decompose_member(e, 5, {{1.0, plus()}}), Error);
}

TEST(decompose_member, convexity) {
    Rng rng(257);
    for (std::size_t dim = 2; dim <= 3; ++dim)
        for (int k = 0; k < 40; ++k) {
            const Ensemble e = random_ensemble(dim, 3, rng);
            const std::size_t c = rng.index(3);
            const auto parts = k % 2 ? spectral_decomposition(e[c].rho)
                                     : random_pure_decomposition(e[c].rho, dim + 1, rng);
            const auto split = decompose_member(e, c, parts);
            for (const NormSpec& spec : specs_for(dim)) {
                double avg = 0.0;
                for (std::size_t mu = 0; mu < parts.size(); ++mu) avg += parts[mu].p * quantumness(split[mu], spec);
                EXPECT_LE(quantumness(e, spec), avg + 1e-9);
            }
        }
}

TEST(decompositions, reproduce_the_state) {
    Rng rng(263);
    for (int k = 0; k < 50; ++k) {
        const DensityMatrix rho = random_density_matrix(4, 1 + rng.index(4), rng);
        for (const auto& parts : {spectral_decomposition(rho), random_pure_decomposition(rho, 5, rng)}) {
            ComplexMatrix mix(4);
            double w = 0.0;
            for (const auto& part : parts) {
                mix += part.rho.matrix() * cplx(part.p);
                w += part.p;
                EXPECT_NEAR(part.rho.purity(), 1.0, 1e-10);
            }
            EXPECT_NEAR(w, 1.0, 1e-12);
            EXPECT_LE(max_abs_diff(mix, rho.matrix()), 1e-12);
        }
    }
}

TEST(fine_grain, trivial_decompositions) {
    Rng rng(269);
    const Ensemble e = random_ensemble(3, 3, rng);
    std::vector<std::vector<Member>> d;
    for (const auto& m : e.members()) d.push_back({{1.0, m.rho}});
    const Ensemble f = fine_grain(e, d);
    ASSERT_EQ(f.size(), e.size());
    EXPECT_EQ(quantumness(f, NormSpec::trace()), quantumness(e, NormSpec::trace()));
}

TEST(fine_grain, spectral_qutrit) {
    Rng rng(271);
    const Ensemble e = random_ensemble(3, 3, rng);
    std::vector<std::vector<Member>> d;
    for (const auto& m : e.members()) d.push_back(spectral_decomposition(m.rho));
    const Ensemble f = fine_grain(e, d);
    double total = 0.0;
    for (const auto& m : f.members()) total += m.p;
    EXPECT_NEAR(total, 1.0, 1e-12);
    EXPECT_GE(f.size(), e.size());
    EXPECT_THROW(fine_grain(e, {d[0]}), Error);
}

TEST(fine_grain, monotone) {
    Rng rng(277);
    for (std::size_t dim = 2; dim <= 3; ++dim)
        for (int k = 0; k < 40; ++k) {
            const Ensemble e = random_ensemble(dim, 3, rng);
            std::vector<std::vector<Member>> d;
            for (const auto& m : e.members()) d.push_back(random_pure_decomposition(m.rho, dim + 1, rng));
            const Ensemble f = fine_grain(e, d);
            for (const NormSpec& spec : specs_for(dim)) EXPECT_LE(quantumness(e, spec), quantumness(f, spec) + 1e-9);
        }
}

TEST(coarse_grain, singletons_and_single_block) {
    Rng rng(281);
    const Ensemble e = random_ensemble(2, 4, rng);
    const Ensemble same = coarse_grain(e, Partition::singletons(4));
    EXPECT_EQ(quantumness(same, NormSpec::trace()), quantumness(e, NormSpec::trace()));

    const Ensemble one = coarse_grain(e, Partition({{0, 1, 2, 3}}, 4));
    ASSERT_EQ(one.size(), 1u);
    EXPECT_NEAR(one[0].p, 1.0, 1e-15);
    EXPECT_LE(max_abs_diff(one[0].rho.matrix(), e.average()), 1e-15);
    EXPECT_EQ(quantumness(one, NormSpec::trace()), 0.0);
}

TEST(coarse_grain, invalid_partitions) {
    const Ensemble e({{0.5, ket0()}, {0.5, plus()}, {0.0, ket1()}});
    for (const auto& blocks : std::vector<std::vector<std::vector<std::size_t>>>{
             {{0, 1}}, {{0, 1}, {1, 2}}, {{0, 1, 2}, {}}, {{0, 1, 3}, {2}}}) {
        try {
            coarse_grain(e, Partition(blocks, 3));
            FAIL();
        } catch (const Error& err) {
            EXPECT_EQ(err.kind(), ErrorKind::invalid_partition);
        }
    }
    try {
        coarse_grain(e, Partition({{0, 1}, {2}}, 3));
        FAIL();
    } catch (const Error& err) {
        EXPECT_EQ(err.kind(), ErrorKind::zero_block_probability);
    }
    EXPECT_THROW(coarse_grain(e, Partition::singletons(2)), Error);
}

TEST(coarse_grain, monotone) {
    Rng rng(283);
    for (std::size_t dim = 2; dim <= 3; ++dim)
        for (int k = 0; k < 40; ++k) {
            const Ensemble e = random_ensemble(dim, 4, rng);
            const Ensemble c = coarse_grain(e, Partition({{0, 2}, {1, 3}}, 4));
            for (const NormSpec& spec : specs_for(dim)) EXPECT_LE(quantumness(c, spec), quantumness(e, spec) + 1e-9);
        }
}

TEST(is_classical, examples) {
    const Ensemble diag({{0.4, DensityMatrix(ComplexMatrix::diagonal({0.3, 0.7}))},
                         {0.6, DensityMatrix(ComplexMatrix::diagonal({1.0, 0.0}))}});
    EXPECT_TRUE(is_classical(diag, 1e-9));
    EXPECT_FALSE(is_classical(Ensemble({{0.5, ket0()}, {0.5, plus()}}), 1e-9));
    // A zero-probability member does not count.
    EXPECT_TRUE(is_classical(Ensemble({{1.0, ket0()}, {0.0, plus()}}), 1e-9));
}

TEST(is_classical, common_eigenbasis_family) {
    Rng rng(293);
    for (std::size_t dim = 2; dim <= 4; ++dim)
        for (int k = 0; k < 20; ++k) {
            const Ensemble e = cli::detail::random_classical_ensemble(dim, 4, rng);
            EXPECT_TRUE(is_classical(e, 1e-9));
            for (const NormSpec& spec : specs_for(dim)) EXPECT_LE(quantumness(e, spec), 1e-9);
        }
}

TEST(is_classical, agrees_with_vanishing_quantumness) {
    Rng rng(307);
    for (std::size_t dim = 2; dim <= 4; ++dim)
        for (int k = 0; k < 50; ++k) {
            const Ensemble e = random_ensemble(dim, 3, rng);
            const double m = quantumness(e, NormSpec::trace());
            EXPECT_GE(m, 0.0);
            EXPECT_EQ(is_classical(e, 1e-9), m <= 1e-9);
        }
}
