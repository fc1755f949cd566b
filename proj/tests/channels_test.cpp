// Copyright 2026 The qec5 Authors
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
#include "qec5/channels.hpp"

#include <algorithm>
#include <random>

#include "gtest/gtest.h"
#include "qec5/code.hpp"
#include "qec5/eigen.hpp"
#include "test_util.h"

using namespace qec5;

namespace {

ComplexMatrix apply_single(const ComplexMatrix &rho, const KrausChannel &channel) {
    return apply_to_qubit(rho, channel, 1);
}

/// Materializes every five-fold tensor product of Kraus operators.
ComplexMatrix brute_force_independent(const ComplexMatrix &rho, const KrausChannel &channel) {
    const auto ops = channel.operators();
    ComplexMatrix out(32, 32);
    std::size_t tuples = 1;
    for (int i = 0; i < 5; ++i) {
        tuples *= ops.size();
    }
    for (std::size_t t = 0; t < tuples; ++t) {
        ComplexMatrix k = ComplexMatrix::identity(1);
        std::size_t rest = t;
        for (int q = 0; q < 5; ++q) {
            k = kron(k, ops[rest % ops.size()]);
            rest /= ops.size();
        }
        out += k * rho * k.adjoint();
    }
    return out;
}

}  // namespace

TEST(channels, completeness_over_delta_samples) {
    for (int i = 0; i < 100; ++i) {
        const double delta = i / 99.0;
        for (auto kind : kAllChannels) {
            const auto ch = make_channel(kind, delta);
            ComplexMatrix sum(2, 2);
            for (const auto &k : ch.operators()) {
                sum += k.adjoint() * k;
            }
            EXPECT_TRUE(sum.approx_equal(ComplexMatrix::identity(2), 1e-12)) << channel_name(kind) << " " << delta;
        }
    }
}

TEST(channels, operator_counts_and_values) {
    const auto pd = phase_damping(0.36);
    ASSERT_EQ(pd.operators().size(), 2u);
    EXPECT_TRUE(pd.operators()[0].approx_equal(ComplexMatrix{{1.0, 0.0}, {0.0, 0.8}}, 1e-15));
    EXPECT_TRUE(pd.operators()[1].approx_equal(ComplexMatrix{{0.0, 0.0}, {0.0, 0.6}}, 1e-15));

    const auto ad = amplitude_damping(0.36);
    EXPECT_TRUE(ad.operators()[1].approx_equal(ComplexMatrix{{0.0, 0.6}, {0.0, 0.0}}, 1e-15));

    const auto dp = depolarizing(1.0);
    ASSERT_EQ(dp.operators().size(), 4u);
    EXPECT_TRUE(dp.operators()[0].approx_equal(ComplexMatrix::identity(2) * Complex(0.5), 1e-15));
    EXPECT_TRUE(dp.operators()[1].approx_equal(pauli::X * Complex(0.5), 1e-15));
}

TEST(channels, strength_out_of_range) {
    for (double bad : {-0.01, 1.01, std::nan("")}) {
        EXPECT_THROW(phase_damping(bad), std::domain_error);
        EXPECT_THROW(amplitude_damping(bad), std::domain_error);
        EXPECT_THROW(depolarizing(bad), std::domain_error);
    }
}

TEST(channels, zero_strength_is_identity) {
    std::mt19937_64 rng(31);
    const auto rho = qec5::testing::random_density(2, rng);
    for (auto kind : kAllChannels) {
        EXPECT_TRUE(apply_single(rho.matrix(), make_channel(kind, 0.0)).approx_equal(rho.matrix(), 1e-15));
    }
}

TEST(channels, full_dephasing_kills_coherence) {
    const ComplexMatrix plus{{0.5, 0.5}, {0.5, 0.5}};
    EXPECT_TRUE(apply_single(plus, phase_damping(1.0)).approx_equal(ComplexMatrix{{0.5, 0.0}, {0.0, 0.5}}, 1e-15));
}

TEST(channels, full_amplitude_damping_reaches_ground) {
    const ComplexMatrix ground{{1.0, 0.0}, {0.0, 0.0}};
    const ComplexMatrix excited{{0.0, 0.0}, {0.0, 1.0}};
    EXPECT_TRUE(apply_single(excited, amplitude_damping(1.0)).approx_equal(ground, 1e-15));
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 10; ++trial) {
        const auto rho = qec5::testing::random_density(2, rng);
        EXPECT_TRUE(apply_single(rho.matrix(), amplitude_damping(1.0)).approx_equal(ground, 1e-14));
    }
}

TEST(channels, full_depolarizing_is_maximally_mixed) {
    std::mt19937_64 rng(33);
    const ComplexMatrix half = ComplexMatrix::identity(2) * Complex(0.5);
    for (int trial = 0; trial < 10; ++trial) {
        const auto rho = qec5::testing::random_density(2, rng);
        EXPECT_TRUE(apply_single(rho.matrix(), depolarizing(1.0)).approx_equal(half, 1e-15));
    }
    const auto rho5 = qec5::testing::random_density(32, rng);
    EXPECT_TRUE(apply_independent(rho5, depolarizing(1.0))
                    .matrix()
                    .approx_equal(ComplexMatrix::identity(32) * Complex(1.0 / 32), 1e-15));
}

TEST(channels, independent_identity_channel) {
    std::mt19937_64 rng(34);
    const auto rho = qec5::testing::random_density(32, rng);
    for (auto kind : kAllChannels) {
        EXPECT_TRUE(apply_independent(rho, make_channel(kind, 0.0)).matrix().approx_equal(rho.matrix(), 1e-12));
    }
}

TEST(channels, full_dephasing_of_logical_zero) {
    const auto tables = build_code_tables();
    const auto rho = DensityMatrix::from_pure(tables.zero_logical);
    const auto out = apply_independent(rho, phase_damping(1.0));
    // Brute-force expansion: dephasing every qubit keeps exactly the diagonal of |0_L><0_L|.
    std::vector<std::size_t> support;
    for (const auto &term : kPerfectCodewords.zero) {
        support.push_back(basis_index(term.bits));
    }
    ComplexMatrix expected(32, 32);
    for (auto i : support) {
        expected(i, i) = 1.0 / 8;
    }
    EXPECT_TRUE(out.matrix().approx_equal(expected, 1e-15));
    EXPECT_TRUE(out.matrix().approx_equal(brute_force_independent(rho.matrix(), phase_damping(1.0)), 1e-15));
}

TEST(channels, sequential_matches_tensor_power) {
    std::mt19937_64 rng(35);
    const auto rho = qec5::testing::random_density(32, rng);
    for (auto kind : kAllChannels) {
        const auto ch = make_channel(kind, 0.37);
        EXPECT_TRUE(apply_independent(rho, ch).matrix().approx_equal(brute_force_independent(rho.matrix(), ch), 1e-13))
            << channel_name(kind);
    }
}

TEST(channels, output_is_valid_density_matrix) {
    std::mt19937_64 rng(36);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        const auto rho = qec5::testing::random_density(32, rng);
        for (auto kind : kAllChannels) {
            const auto out = apply_independent(rho, make_channel(kind, unit(rng)));
            EXPECT_TRUE(out.matrix().is_hermitian(1e-10));
            EXPECT_NEAR(out.matrix().trace().real(), 1.0, 1e-10);
            EXPECT_GE(hermitian_eigenvalues(out.matrix()).front(), -1e-9);
            EXPECT_NO_THROW(DensityMatrix::from_matrix(out.matrix()));
        }
    }
}

TEST(channels, qubit_order_does_not_matter) {
    std::mt19937_64 rng(37);
    const auto rho = qec5::testing::random_density(32, rng);
    std::vector<int> order{1, 2, 3, 4, 5};
    for (auto kind : kAllChannels) {
        const auto ch = make_channel(kind, 0.61);
        const auto reference = apply_independent(rho, ch);
        for (int shuffle = 0; shuffle < 5; ++shuffle) {
            std::shuffle(order.begin(), order.end(), rng);
            EXPECT_TRUE(apply_on_qubits(rho, ch, order).matrix().approx_equal(reference.matrix(), 1e-10));
        }
    }
}

TEST(channels, phase_damping_composes) {
    std::mt19937_64 rng(38);
    const auto rho = qec5::testing::random_density(32, rng);
    for (auto [d1, d2] : {std::pair{0.2, 0.5}, {0.7, 0.1}, {0.0, 0.9}, {1.0, 0.3}}) {
        const auto twice = apply_independent(apply_independent(rho, phase_damping(d1)), phase_damping(d2));
        const auto once = apply_independent(rho, phase_damping(1 - (1 - d1) * (1 - d2)));
        EXPECT_TRUE(twice.matrix().approx_equal(once.matrix(), 1e-10));
    }
}

TEST(channels, independent_requires_five_qubits) {
    EXPECT_THROW(apply_independent(DensityMatrix::maximally_mixed(16), phase_damping(0.1)), std::invalid_argument);
    EXPECT_THROW(apply_to_qubit(ComplexMatrix::identity(4), phase_damping(0.1), 3), std::out_of_range);
}

TEST(channels, delta_from_time) {
    EXPECT_EQ(delta_from_time(3.0, 0.0), 0.0);
    EXPECT_EQ(delta_from_time(0.0, 5.0), 0.0);
    EXPECT_NEAR(delta_from_time(1.0, 1.0), 1 - std::exp(-1.0), 1e-15);
    EXPECT_GT(delta_from_time(1.0, 40.0), 1 - 1e-15);
    EXPECT_LE(delta_from_time(1.0, 1e6), 1.0);
    EXPECT_THROW(delta_from_time(-1.0, 1.0), std::domain_error);
    EXPECT_THROW(delta_from_time(1.0, -1.0), std::domain_error);
}

TEST(channels, names_round_trip) {
    for (auto kind : kAllChannels) {
        EXPECT_EQ(parse_channel(channel_name(kind)), kind);
    }
    EXPECT_FALSE(parse_channel("bitflip").has_value());
}
