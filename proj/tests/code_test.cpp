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
#include "qec5/code.hpp"

#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "gtest/gtest.h"
#include "qec5/channels.hpp"
#include "qec5/io.hpp"
#include "qec5/metrics.hpp"
#include "test_util.h"

using namespace qec5;

namespace {

const CodeTables &tables() {
    static const CodeTables t = build_code_tables();
    return t;
}

DensityMatrix logical_density(const StateParams &p) { return DensityMatrix::from_pure(encode(p, tables())); }

DensityMatrix with_error(const ComplexMatrix &e, const StateParams &p) {
    const auto psi = encode(p, tables());
    return DensityMatrix::from_pure(PureState(e * psi.amplitudes()));
}

double squared_norm(const ComplexVector &v) {
    const double n = vector_norm(v);
    return n * n;
}

}  // namespace

TEST(code, codeword_amplitudes) {
    const auto [zero, one] = logical_codewords();
    const double a = 1 / std::sqrt(8.0);
    EXPECT_NEAR(std::abs(zero[basis_index("00000")] - a), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(zero[basis_index("01111")] + a), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(one[basis_index("11111")] + a), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(one[basis_index("10000")] - a), 0.0, 1e-15);
    EXPECT_EQ(inner_product(zero.amplitudes(), one.amplitudes()), Complex(0.0));

    int nonzero = 0;
    for (std::size_t i = 0; i < 32; ++i) {
        nonzero += (zero[i] != Complex(0.0)) + (one[i] != Complex(0.0));
        EXPECT_TRUE(zero[i] == Complex(0.0) || one[i] == Complex(0.0));
    }
    EXPECT_EQ(nonzero, 16);
}

TEST(code, degenerate_sign_pattern_is_rejected) {
    const auto [zero, one] = logical_codewords(kDegenerateCodewords);
    const auto x1 = embed_single_qubit_op(pauli::X, 1, 5);
    const auto flipped = x1 * zero.amplitudes();
    EXPECT_NEAR(std::abs(inner_product(flipped, one.amplitudes())), 1.0, 1e-12);
    try {
        build_code_tables(kDegenerateCodewords);
        FAIL() << "expected build_code_tables to reject the degenerate code words";
    } catch (const std::runtime_error &e) {
        EXPECT_NE(std::string(e.what()).find("not orthonormal"), std::string::npos);
    }
}

TEST(code, encode_limits_and_normalization) {
    const auto &t = tables();
    const auto zero = encode({0.0, 1.3}, t);
    const auto one = encode({std::numbers::pi / 2, 0.0}, t);
    for (std::size_t i = 0; i < 32; ++i) {
        EXPECT_NEAR(std::abs(zero[i] - t.zero_logical[i]), 0.0, 1e-15);
        EXPECT_NEAR(std::abs(one[i] - t.one_logical[i]), 0.0, 1e-15);
    }
    for (int i = 0; i < 10; ++i) {
        for (int j = 0; j < 10; ++j) {
            const auto psi = encode({i * std::numbers::pi / 18, j * std::numbers::pi / 5}, t);
            EXPECT_NEAR(vector_norm(psi.amplitudes()), 1.0, 1e-12);
        }
    }
    EXPECT_THROW(encode({-0.1, 0.0}, t), std::domain_error);
    EXPECT_THROW(encode({0.1, 2 * std::numbers::pi}, t), std::domain_error);
}

TEST(code, error_basis_is_orthonormal) {
    const auto &t = tables();
    ASSERT_EQ(t.error_basis.size(), 32u);
    // Brute-force inner products straight from the error operators.
    for (std::size_t a = 0; a < 16; ++a) {
        for (std::size_t b = 0; b < 16; ++b) {
            for (int i = 0; i < 2; ++i) {
                for (int j = 0; j < 2; ++j) {
                    const auto &ci = i == 0 ? t.zero_logical : t.one_logical;
                    const auto &cj = j == 0 ? t.zero_logical : t.one_logical;
                    const auto va = t.errors[a].op * ci.amplitudes();
                    const auto vb = t.errors[b].op * cj.amplitudes();
                    const double expected = (a == b && i == j) ? 1.0 : 0.0;
                    EXPECT_NEAR(std::abs(inner_product(va, vb) - expected), 0.0, 1e-10)
                        << t.errors[a].label << "|" << i << "> vs " << t.errors[b].label << "|" << j << ">";
                }
            }
        }
    }
}

TEST(code, decoder_is_trace_preserving) {
    const auto &t = tables();
    ASSERT_EQ(t.decoder_kraus.size(), 16u);
    ComplexMatrix sum(32, 32);
    for (const auto &k : t.decoder_kraus) {
        EXPECT_EQ(k.rows(), 2u);
        EXPECT_EQ(k.cols(), 32u);
        sum += k.adjoint() * k;
        EXPECT_TRUE((k * k.adjoint()).approx_equal(ComplexMatrix::identity(2), 1e-12));
    }
    EXPECT_TRUE(sum.approx_equal(ComplexMatrix::identity(32), 1e-10));
}

TEST(code, syndrome_table_matches_frozen_fixture) {
    const auto &t = tables();
    // Which decoder branch captures E_a|i_L> with unit weight.
    std::ostringstream derived;
    derived << "# error syndrome recovery\n";
    for (std::size_t a = 0; a < 16; ++a) {
        std::optional<std::size_t> found;
        for (std::size_t s = 0; s < 16; ++s) {
            const double w0 = squared_norm(t.decoder_kraus[s] * (t.errors[a].op * t.zero_logical.amplitudes()));
            const double w1 = squared_norm(t.decoder_kraus[s] * (t.errors[a].op * t.one_logical.amplitudes()));
            EXPECT_NEAR(w0, w1, 1e-12);
            if (std::abs(w0 - 1.0) < 1e-10) {
                EXPECT_FALSE(found.has_value());
                found = s;
            } else {
                EXPECT_NEAR(w0, 0.0, 1e-10);
            }
        }
        ASSERT_TRUE(found.has_value()) << t.errors[a].label;
        derived << t.errors[a].label << ' ' << *found << ' ' << t.recovery_label(*found) << '\n';
    }

    std::ifstream in(QEC5_FIXTURE_DIR "/syndrome_table.txt", std::ios::binary);
    ASSERT_TRUE(in) << "missing fixture";
    std::stringstream fixture;
    fixture << in.rdbuf();
    EXPECT_EQ(derived.str(), fixture.str());
    EXPECT_EQ(syndrome_table_text(t), fixture.str());
}

TEST(code, noiseless_decoding_round_trip) {
    const auto &t = tables();
    for (int i = 0; i <= 8; ++i) {
        for (int j = 0; j < 9; ++j) {
            const StateParams p{i * std::numbers::pi / 16, j * 2 * std::numbers::pi / 9};
            const auto out = decode(logical_density(p), t);
            EXPECT_TRUE(out.matrix().approx_equal(unencoded_state(p).projector(), 1e-12));
        }
    }
}

TEST(code, no_error_branch) {
    const auto &t = tables();
    const StateParams p{0.3, 1.1};
    const auto outcomes = decode_per_syndrome(logical_density(p), t);
    ASSERT_EQ(outcomes.size(), 16u);
    EXPECT_NEAR(outcomes[0].probability, 1.0, 1e-12);
    ASSERT_TRUE(outcomes[0].state.has_value());
    EXPECT_TRUE(outcomes[0].state->matrix().approx_equal(unencoded_state(p).projector(), 1e-12));
    for (std::size_t s = 1; s < 16; ++s) {
        EXPECT_NEAR(outcomes[s].probability, 0.0, 1e-12);
        EXPECT_FALSE(outcomes[s].state.has_value());
    }
    const auto psi = encode(p, t);
    const auto readout = t.decoder_kraus[0] * psi.amplitudes();
    const auto u = unencoded_state(p);
    EXPECT_NEAR(std::abs(readout[0] - u[0]), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(readout[1] - u[1]), 0.0, 1e-12);
}

TEST(code, single_bit_flip_lands_in_one_branch) {
    const auto &t = tables();
    const StateParams p{0.9, 0.4};
    const auto outcomes = decode_per_syndrome(with_error(embed_single_qubit_op(pauli::X, 1, 5), p), t);
    int hits = 0;
    for (const auto &o : outcomes) {
        if (o.probability > 0.5) {
            ++hits;
            EXPECT_NEAR(o.probability, 1.0, 1e-12);
            EXPECT_EQ(t.errors[o.syndrome].label, "X1");
            EXPECT_NEAR(fidelity(*o.state, p), 1.0, 1e-12);
        } else {
            EXPECT_NEAR(o.probability, 0.0, 1e-12);
        }
    }
    EXPECT_EQ(hits, 1);
}

TEST(code, corrects_every_weight_one_error) {
    const auto &t = tables();
    for (std::size_t a = 1; a < 16; ++a) {
        for (int i = 0; i < 9; ++i) {
            for (int j = 0; j < 9; ++j) {
                const StateParams p{i * std::numbers::pi / 16, j * 2 * std::numbers::pi / 9};
                EXPECT_NEAR(fidelity(decode(with_error(t.errors[a].op, p), t), p), 1.0, 1e-10) << t.errors[a].label;
            }
        }
    }
}

TEST(code, some_weight_two_error_is_not_corrected) {
    const auto &t = tables();
    double worst = 1.0;
    const ComplexMatrix *ps[] = {&pauli::X, &pauli::Y, &pauli::Z};
    for (int q1 = 1; q1 <= 5; ++q1) {
        for (int q2 = q1 + 1; q2 <= 5; ++q2) {
            for (auto *a : ps) {
                for (auto *b : ps) {
                    const auto e = embed_single_qubit_op(*a, q1, 5) * embed_single_qubit_op(*b, q2, 5);
                    for (double alpha : {0.0, std::numbers::pi / 4, std::numbers::pi / 2}) {
                        const StateParams p{alpha, 0.0};
                        worst = std::min(worst, fidelity(decode(with_error(e, p), t), p));
                    }
                }
            }
        }
    }
    EXPECT_LT(worst, 1 - 1e-3);
}

TEST(code, decoding_is_linear) {
    const auto &t = tables();
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        const auto r1 = qec5::testing::random_density(32, rng);
        const auto r2 = qec5::testing::random_density(32, rng);
        const double lambda = 0.1 * trial;
        const auto mix = DensityMatrix::unchecked(r1.matrix() * Complex(lambda) + r2.matrix() * Complex(1 - lambda));
        const auto lhs = decode(mix, t).matrix();
        const auto rhs = decode(r1, t).matrix() * Complex(lambda) + decode(r2, t).matrix() * Complex(1 - lambda);
        EXPECT_TRUE(lhs.approx_equal(rhs, 1e-12));
    }
}

TEST(code, maximally_mixed_input) {
    const auto out = decode(DensityMatrix::maximally_mixed(32), tables());
    EXPECT_TRUE(out.matrix().approx_equal(ComplexMatrix::identity(2) * Complex(0.5), 1e-12));
}

TEST(code, probabilities_sum_to_one) {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        const auto rho = trial % 2 ? qec5::testing::random_density(32, rng)
                                   : DensityMatrix::from_pure(qec5::testing::random_pure(32, rng));
        double total = 0.0;
        for (const auto &o : decode_per_syndrome(rho, tables())) {
            total += o.probability;
            if (o.state) {
                EXPECT_NEAR(o.state->matrix().trace().real(), 1.0, 1e-10);
            }
        }
        EXPECT_NEAR(total, 1.0, 1e-10);
    }
}

TEST(code, zero_noise_pipeline_is_identity) {
    const auto &t = tables();
    for (auto kind : kAllChannels) {
        for (double alpha : {0.0, 0.4, std::numbers::pi / 2}) {
            const StateParams p{alpha, 0.7};
            const auto noisy = apply_independent(logical_density(p), make_channel(kind, 0.0));
            EXPECT_TRUE(decode(noisy, t).matrix().approx_equal(unencoded_state(p).projector(), 1e-12));
        }
    }
}

TEST(code, decode_requires_five_qubits) {
    EXPECT_THROW(decode(DensityMatrix::maximally_mixed(16), tables()), std::invalid_argument);
    EXPECT_THROW(decode_per_syndrome(DensityMatrix::maximally_mixed(2), tables()), std::invalid_argument);
}
