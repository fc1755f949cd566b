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

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qec5/code.hpp"
#include "qec5/eigen.hpp"
#include "qec5/linalg.hpp"
#include "qec5/states.hpp"
#include "qec5/tolerances.hpp"

namespace qec5 {

/// A partial-transpose cut: one or two distinct qubits out of five.
class NegativitySpec {
   public:
    NegativitySpec(std::initializer_list<int> qubits) : NegativitySpec(std::vector<int>(qubits)) {}

    explicit NegativitySpec(std::vector<int> qubits) : qubits_(std::move(qubits)) {
        if (qubits_.empty() || qubits_.size() > 2) {
            throw std::invalid_argument("NegativitySpec: expected 1 or 2 qubits, got " + std::to_string(qubits_.size()));
        }
        std::sort(qubits_.begin(), qubits_.end());
        for (int q : qubits_) {
            if (q < 1 || q > 5) {
                throw std::invalid_argument("NegativitySpec: qubit " + std::to_string(q) + " not in 1..5");
            }
        }
        if (qubits_.size() == 2 && qubits_[0] == qubits_[1]) {
            throw std::invalid_argument("NegativitySpec: qubits must be distinct");
        }
    }

    /// "12" -> {1, 2}
    static NegativitySpec parse(std::string_view digits) {
        std::vector<int> qubits;
        for (char c : digits) {
            if (c < '0' || c > '9') {
                throw std::invalid_argument("NegativitySpec: cannot parse '" + std::string(digits) + "'");
            }
            qubits.push_back(c - '0');
        }
        return NegativitySpec(std::move(qubits));
    }

    std::span<const int> qubits() const { return qubits_; }

    /// Column name, e.g. N_1 or N_45.
    std::string label() const {
        std::string out = "N_";
        for (int q : qubits_) {
            out += std::to_string(q);
        }
        return out;
    }

    auto operator<=>(const NegativitySpec &) const = default;

   private:
    std::vector<int> qubits_;
};

/// N_1, N_2, N_12, N_45.
inline std::vector<NegativitySpec> default_negativity_specs() { return {{1}, {2}, {1, 2}, {4, 5}}; }

enum class NegativityVariant {
    /// Magnitude of the single most negative eigenvalue of the partial transpose.
    MostNegative,
    /// Sum of the magnitudes of all negative eigenvalues.
    SumNegative,
};

inline std::string_view variant_name(NegativityVariant v) {
    return v == NegativityVariant::MostNegative ? "most-negative" : "sum-negative";
}

/// <psi_u| rho_f |psi_u>
inline double fidelity(const DensityMatrix &rho_f, const StateParams &params) {
    if (rho_f.dim() != 2) {
        throw std::invalid_argument("fidelity: expected a single-qubit state, got dimension " + std::to_string(rho_f.dim()));
    }
    const PureState psi = unencoded_state(params);
    Complex f = 0.0;
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            f += std::conj(psi[r]) * rho_f(r, c) * psi[c];
        }
    }
    return f.real();
}

inline double negativity(
    const DensityMatrix &rho,
    const NegativitySpec &spec,
    NegativityVariant variant = NegativityVariant::MostNegative,
    const Tolerances &tol = kTolerances) {
    // Partial transposes of Hermitian input are Hermitian; the check inside the eigensolver only
    // guards against non-Hermitian rho.
    const auto eigs = hermitian_eigenvalues(partial_transpose(rho.matrix(), spec.qubits()), tol.equality, tol);
    double n = 0.0;
    if (variant == NegativityVariant::MostNegative) {
        n = std::max(0.0, -eigs.front());
    } else {
        for (double e : eigs) {
            if (e < 0.0) {
                n -= e;
            }
        }
    }
    return n <= tol.negativity_floor ? 0.0 : n;
}

/// Smallest sampled delta from which every later negativity is <= tol; empty if the last sample
/// is still above tol. `curve` holds (delta, negativity) pairs with strictly increasing delta.
inline std::optional<double> esd_threshold(
    std::span<const std::pair<double, double>> curve, double tol = kTolerances.negativity_floor) {
    if (curve.empty()) {
        throw std::invalid_argument("esd_threshold: empty curve");
    }
    for (std::size_t i = 1; i < curve.size(); ++i) {
        if (!(curve[i].first > curve[i - 1].first)) {
            throw std::invalid_argument("esd_threshold: deltas are not strictly increasing");
        }
    }
    if (curve.back().second > tol) {
        return std::nullopt;
    }
    std::size_t first_dead = curve.size() - 1;
    while (first_dead > 0 && curve[first_dead - 1].second <= tol) {
        --first_dead;
    }
    return curve[first_dead].first;
}

}  // namespace qec5
