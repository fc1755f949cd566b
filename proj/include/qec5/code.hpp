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

#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qec5/linalg.hpp"
#include "qec5/states.hpp"
#include "qec5/tolerances.hpp"

namespace qec5 {

/// Unencoded qubit cos(alpha)|0> + e^{-i beta} sin(alpha)|1>.
struct StateParams {
    double alpha = 0.0;
    double beta = 0.0;

    void validate() const {
        if (!(alpha >= 0.0 && alpha <= std::numbers::pi / 2)) {
            throw std::domain_error("StateParams: alpha " + std::to_string(alpha) + " is outside [0, pi/2]");
        }
        if (!(beta >= 0.0 && beta < 2 * std::numbers::pi)) {
            throw std::domain_error("StateParams: beta " + std::to_string(beta) + " is outside [0, 2 pi)");
        }
    }
};

/// One computational-basis term of a code word: sign and bit string, qubit 1 leftmost.
struct CodewordTerm {
    int sign;
    std::string_view bits;
};

using CodewordTerms = std::array<CodewordTerm, 8>;

struct CodewordSpec {
    CodewordTerms zero;
    CodewordTerms one;
};

/// Code words of the five-qubit perfect code used throughout the library.
inline constexpr CodewordSpec kPerfectCodewords{
    {{{+1, "00000"}, {-1, "01111"}, {-1, "10011"}, {+1, "11100"},
      {+1, "00110"}, {+1, "01001"}, {+1, "10101"}, {+1, "11010"}}},
    {{{-1, "11111"}, {+1, "10000"}, {-1, "01100"}, {+1, "00011"},
      {-1, "11001"}, {-1, "10110"}, {+1, "01010"}, {+1, "00101"}}},
};

/// Same supports, different signs: here |1_L> = X_1 |0_L>, so X_1 is a logical operator and
/// build_code_tables must reject these.
inline constexpr CodewordSpec kDegenerateCodewords{
    {{{+1, "00000"}, {-1, "01111"}, {+1, "10011"}, {+1, "11100"},
      {+1, "00110"}, {+1, "01001"}, {+1, "10101"}, {+1, "11010"}}},
    {{{-1, "11111"}, {+1, "10000"}, {+1, "01100"}, {+1, "00011"},
      {+1, "11001"}, {+1, "10110"}, {+1, "01010"}, {+1, "00101"}}},
};

inline std::size_t basis_index(std::string_view bits) {
    std::size_t index = 0;
    for (char b : bits) {
        if (b != '0' && b != '1') {
            throw std::invalid_argument("basis_index: '" + std::string(bits) + "' is not a bit string");
        }
        index = (index << 1) | static_cast<std::size_t>(b - '0');
    }
    return index;
}

inline PureState codeword_state(const CodewordTerms &terms) {
    ComplexVector amplitudes(32);
    const double weight = 1.0 / std::sqrt(8.0);
    for (const auto &term : terms) {
        if (term.bits.size() != 5) {
            throw std::invalid_argument("codeword_state: expected 5-qubit bit strings");
        }
        amplitudes[basis_index(term.bits)] += weight * term.sign;
    }
    return PureState(std::move(amplitudes));
}

/// Normalized (|0_L>, |1_L>).
inline std::pair<PureState, PureState> logical_codewords(const CodewordSpec &spec = kPerfectCodewords) {
    return {codeword_state(spec.zero), codeword_state(spec.one)};
}

inline PureState unencoded_state(const StateParams &params) {
    params.validate();
    return PureState(ComplexVector{
        std::cos(params.alpha), std::polar(1.0, -params.beta) * std::sin(params.alpha)});
}

/// One of the 16 correctable errors: identity or a single-qubit Pauli.
struct ErrorOp {
    std::string label;
    char pauli;
    int qubit;  // 0 for the identity
    ComplexMatrix op;
};

/// I, X1..X5, Y1..Y5, Z1..Z5. The position in this list is the syndrome index.
inline std::vector<ErrorOp> correctable_errors() {
    std::vector<ErrorOp> errors;
    errors.push_back({"I", 'I', 0, ComplexMatrix::identity(32)});
    const std::array<std::pair<char, const ComplexMatrix *>, 3> paulis{
        {{'X', &pauli::X}, {'Y', &pauli::Y}, {'Z', &pauli::Z}}};
    for (const auto &[name, matrix] : paulis) {
        for (int q = 1; q <= 5; ++q) {
            errors.push_back({std::string(1, name) + std::to_string(q), name, q, embed_single_qubit_op(*matrix, q, 5)});
        }
    }
    return errors;
}

struct CodeTables {
    PureState zero_logical;
    PureState one_logical;
    std::vector<ErrorOp> errors;
    /// error_basis[2 * s + i] = E_s |i_L>.
    std::vector<PureState> error_basis;
    /// K_s = D E_s^dag Pi_s, each 2x32.
    std::vector<ComplexMatrix> decoder_kraus;

    std::size_t syndrome_count() const { return errors.size(); }

    /// Recovery applied on syndrome s; every correctable error is its own inverse.
    const std::string &recovery_label(std::size_t s) const { return errors.at(s).label; }
};

/// Gram matrix G(a, b) = <v_a|v_b>.
inline ComplexMatrix gram_matrix(const std::vector<PureState> &vectors) {
    ComplexMatrix g(vectors.size(), vectors.size());
    for (std::size_t a = 0; a < vectors.size(); ++a) {
        for (std::size_t b = 0; b < vectors.size(); ++b) {
            g(a, b) = inner_product(vectors[a].amplitudes(), vectors[b].amplitudes());
        }
    }
    return g;
}

/// Builds the error basis and the 16 decoder Kraus operators. Throws std::runtime_error when
/// the 32 vectors E_a|i_L> are not orthonormal, i.e. the code words do not form a perfect code.
inline CodeTables build_code_tables(const CodewordSpec &spec = kPerfectCodewords, const Tolerances &tol = kTolerances) {
    auto [zero, one] = logical_codewords(spec);
    auto errors = correctable_errors();

    std::vector<PureState> basis;
    basis.reserve(2 * errors.size());
    for (const auto &e : errors) {
        basis.emplace_back(e.op * zero.amplitudes());
        basis.emplace_back(e.op * one.amplitudes());
    }

    const ComplexMatrix gram = gram_matrix(basis);
    const double defect = gram.max_abs_diff(ComplexMatrix::identity(basis.size()));
    if (defect > tol.equality) {
        std::string worst;
        for (std::size_t a = 0; a < basis.size() && worst.empty(); ++a) {
            for (std::size_t b = a + 1; b < basis.size(); ++b) {
                if (std::abs(gram(a, b)) > tol.equality) {
                    worst = errors[a / 2].label + "|" + std::to_string(a % 2) + "_L> and " + errors[b / 2].label +
                            "|" + std::to_string(b % 2) + "_L>";
                    break;
                }
            }
        }
        throw std::runtime_error(
            "build_code_tables: error basis is not orthonormal (max |G - I| = " + std::to_string(defect) +
            (worst.empty() ? std::string(")") : "; first overlap between " + worst + ")"));
    }

    // D = |0><0_L| + |1><1_L|
    ComplexMatrix readout(2, 32);
    for (std::size_t c = 0; c < 32; ++c) {
        readout(0, c) = std::conj(zero[c]);
        readout(1, c) = std::conj(one[c]);
    }

    std::vector<ComplexMatrix> kraus;
    kraus.reserve(errors.size());
    for (std::size_t s = 0; s < errors.size(); ++s) {
        const auto &v0 = basis[2 * s];
        const auto &v1 = basis[2 * s + 1];
        ComplexMatrix projector = v0.projector() + v1.projector();
        kraus.push_back(readout * errors[s].op.adjoint() * projector);
    }

    return CodeTables{std::move(zero), std::move(one), std::move(errors), std::move(basis), std::move(kraus)};
}

/// cos(alpha)|0_L> + e^{-i beta} sin(alpha)|1_L>.
inline PureState encode(const StateParams &params, const CodeTables &tables) {
    params.validate();
    const Complex c0 = std::cos(params.alpha);
    const Complex c1 = std::polar(1.0, -params.beta) * std::sin(params.alpha);
    ComplexVector amplitudes(32);
    for (std::size_t i = 0; i < 32; ++i) {
        amplitudes[i] = c0 * tables.zero_logical[i] + c1 * tables.one_logical[i];
    }
    return PureState(std::move(amplitudes));
}

namespace detail {

/// K rho K^dag for a 2x32 K.
inline ComplexMatrix sandwich(const ComplexMatrix &k, const ComplexMatrix &rho) {
    const ComplexMatrix kr = k * rho;
    ComplexMatrix out(k.rows(), k.rows());
    for (std::size_t r = 0; r < k.rows(); ++r) {
        for (std::size_t c = 0; c < k.rows(); ++c) {
            Complex s = 0.0;
            for (std::size_t j = 0; j < k.cols(); ++j) {
                s += kr(r, j) * std::conj(k(c, j));
            }
            out(r, c) = s;
        }
    }
    return out;
}

inline void require_five_qubits(const DensityMatrix &rho, const char *who) {
    if (rho.dim() != 32) {
        throw std::invalid_argument(
            std::string(who) + ": expected a 5-qubit (32x32) state, got dimension " + std::to_string(rho.dim()));
    }
}

}  // namespace detail

struct SyndromeOutcome {
    std::size_t syndrome;
    double probability;
    /// Recovered single-qubit state; empty when the branch has (numerically) zero probability.
    std::optional<DensityMatrix> state;
};

inline std::vector<SyndromeOutcome> decode_per_syndrome(
    const DensityMatrix &rho, const CodeTables &tables, const Tolerances &tol = kTolerances) {
    detail::require_five_qubits(rho, "decode_per_syndrome");
    std::vector<SyndromeOutcome> outcomes;
    outcomes.reserve(tables.decoder_kraus.size());
    for (std::size_t s = 0; s < tables.decoder_kraus.size(); ++s) {
        ComplexMatrix branch = detail::sandwich(tables.decoder_kraus[s], rho.matrix());
        const double p = branch.trace().real();
        if (p > tol.zero_probability) {
            branch *= Complex(1.0 / p);
            outcomes.push_back({s, p, DensityMatrix::unchecked(std::move(branch))});
        } else {
            outcomes.push_back({s, p, std::nullopt});
        }
    }
    return outcomes;
}

/// Probability-weighted average of the 16 recovered branches, sum_s K_s rho K_s^dag.
inline DensityMatrix decode(const DensityMatrix &rho, const CodeTables &tables) {
    detail::require_five_qubits(rho, "decode");
    ComplexMatrix out(2, 2);
    for (const auto &k : tables.decoder_kraus) {
        out += detail::sandwich(k, rho.matrix());
    }
    return DensityMatrix::unchecked(std::move(out));
}

}  // namespace qec5
