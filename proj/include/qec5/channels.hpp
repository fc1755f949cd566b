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
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qec5/linalg.hpp"
#include "qec5/states.hpp"
#include "qec5/tolerances.hpp"

namespace qec5 {

enum class ChannelKind { PhaseDamping, AmplitudeDamping, Depolarizing };

inline constexpr std::array kAllChannels{
    ChannelKind::PhaseDamping, ChannelKind::AmplitudeDamping, ChannelKind::Depolarizing};

/// Command-line and CSV spelling.
inline std::string_view channel_name(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::PhaseDamping:
            return "dephasing";
        case ChannelKind::AmplitudeDamping:
            return "amplitude";
        case ChannelKind::Depolarizing:
            return "depolarizing";
    }
    throw std::logic_error("unknown ChannelKind");
}

inline std::optional<ChannelKind> parse_channel(std::string_view name) {
    for (auto kind : kAllChannels) {
        if (channel_name(kind) == name) {
            return kind;
        }
    }
    return std::nullopt;
}

/// A single-qubit noise channel at strength delta, as a list of 2x2 Kraus operators.
class KrausChannel {
   public:
    KrausChannel(ChannelKind kind, double delta, std::vector<ComplexMatrix> operators)
        : kind_(kind), delta_(delta), operators_(std::move(operators)) {
        ComplexMatrix sum(2, 2);
        for (const auto &k : operators_) {
            if (k.rows() != 2 || k.cols() != 2) {
                throw std::invalid_argument("KrausChannel: operators must be 2x2, got " + k.shape_string());
            }
            sum += k.adjoint() * k;
        }
        if (!sum.approx_equal(ComplexMatrix::identity(2), kTolerances.kraus_completeness)) {
            throw std::invalid_argument("KrausChannel: operators do not satisfy sum K^dag K = I");
        }
    }

    ChannelKind kind() const { return kind_; }
    double delta() const { return delta_; }
    std::span<const ComplexMatrix> operators() const { return operators_; }

   private:
    ChannelKind kind_;
    double delta_;
    std::vector<ComplexMatrix> operators_;
};

namespace detail {
inline void require_strength(double delta, const char *who) {
    if (!(delta >= 0.0 && delta <= 1.0)) {
        throw std::domain_error(std::string(who) + ": delta " + std::to_string(delta) + " is outside [0, 1]");
    }
}
}  // namespace detail

inline KrausChannel phase_damping(double delta) {
    detail::require_strength(delta, "phase_damping");
    return KrausChannel(
        ChannelKind::PhaseDamping, delta,
        {ComplexMatrix{{1.0, 0.0}, {0.0, std::sqrt(1.0 - delta)}},
         ComplexMatrix{{0.0, 0.0}, {0.0, std::sqrt(delta)}}});
}

inline KrausChannel amplitude_damping(double delta) {
    detail::require_strength(delta, "amplitude_damping");
    return KrausChannel(
        ChannelKind::AmplitudeDamping, delta,
        {ComplexMatrix{{1.0, 0.0}, {0.0, std::sqrt(1.0 - delta)}},
         ComplexMatrix{{0.0, std::sqrt(delta)}, {0.0, 0.0}}});
}

inline KrausChannel depolarizing(double delta) {
    detail::require_strength(delta, "depolarizing");
    const Complex identity_weight = std::sqrt(1.0 - 0.75 * delta);
    const Complex pauli_weight = std::sqrt(delta) / 2.0;
    return KrausChannel(
        ChannelKind::Depolarizing, delta,
        {identity_weight * pauli::I, pauli_weight * pauli::X, pauli_weight * pauli::Y, pauli_weight * pauli::Z});
}

inline KrausChannel make_channel(ChannelKind kind, double delta) {
    switch (kind) {
        case ChannelKind::PhaseDamping:
            return phase_damping(delta);
        case ChannelKind::AmplitudeDamping:
            return amplitude_damping(delta);
        case ChannelKind::Depolarizing:
            return depolarizing(delta);
    }
    throw std::logic_error("unknown ChannelKind");
}

/// delta = 1 - exp(-kappa t).
inline double delta_from_time(double kappa, double t) {
    if (!(kappa >= 0.0) || !(t >= 0.0)) {
        throw std::domain_error("delta_from_time: kappa and t must be non-negative");
    }
    return -std::expm1(-kappa * t);
}

/// rho -> sum_k K_k rho K_k^dag with every K_k acting on one qubit.
inline ComplexMatrix apply_to_qubit(const ComplexMatrix &rho, const KrausChannel &channel, int qubit) {
    const int n = qubit_count(rho.rows());
    if (qubit < 1 || qubit > n) {
        throw std::out_of_range("apply_to_qubit: qubit " + std::to_string(qubit) + " not in 1.." + std::to_string(n));
    }
    const std::size_t bit = std::size_t{1} << qubit_bit(qubit, n);
    const std::size_t dim = rho.rows();
    ComplexMatrix out(dim, dim);
    for (const auto &k : channel.operators()) {
        const Complex k00 = k(0, 0), k01 = k(0, 1), k10 = k(1, 0), k11 = k(1, 1);
        for (std::size_t r0 = 0; r0 < dim; ++r0) {
            if (r0 & bit) {
                continue;
            }
            const std::size_t r1 = r0 | bit;
            for (std::size_t c0 = 0; c0 < dim; ++c0) {
                if (c0 & bit) {
                    continue;
                }
                const std::size_t c1 = c0 | bit;
                // K B for the 2x2 block B, then (K B) K^dag.
                const Complex b00 = rho(r0, c0), b01 = rho(r0, c1), b10 = rho(r1, c0), b11 = rho(r1, c1);
                const Complex m00 = k00 * b00 + k01 * b10;
                const Complex m01 = k00 * b01 + k01 * b11;
                const Complex m10 = k10 * b00 + k11 * b10;
                const Complex m11 = k10 * b01 + k11 * b11;
                out(r0, c0) += m00 * std::conj(k00) + m01 * std::conj(k01);
                out(r0, c1) += m00 * std::conj(k10) + m01 * std::conj(k11);
                out(r1, c0) += m10 * std::conj(k00) + m11 * std::conj(k01);
                out(r1, c1) += m10 * std::conj(k10) + m11 * std::conj(k11);
            }
        }
    }
    return out;
}

/// Applies the channel to each listed qubit in turn.
inline DensityMatrix apply_on_qubits(const DensityMatrix &rho, const KrausChannel &channel, std::span<const int> order) {
    ComplexMatrix m = rho.matrix();
    for (int q : order) {
        m = apply_to_qubit(m, channel, q);
    }
    return DensityMatrix::unchecked(std::move(m));
}

/// The channel acting independently on all five qubits.
inline DensityMatrix apply_independent(const DensityMatrix &rho, const KrausChannel &channel) {
    if (rho.dim() != 32) {
        throw std::invalid_argument(
            "apply_independent: expected a 5-qubit (32x32) state, got dimension " + std::to_string(rho.dim()));
    }
    static constexpr std::array kQubits{1, 2, 3, 4, 5};
    return apply_on_qubits(rho, channel, kQubits);
}

}  // namespace qec5
