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

#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qec5/eigen.hpp"
#include "qec5/linalg.hpp"
#include "qec5/tolerances.hpp"

namespace qec5 {

/// Unit-norm state vector over a power-of-two dimension.
class PureState {
   public:
    explicit PureState(ComplexVector amplitudes, double tol = kTolerances.equality)
        : amplitudes_(std::move(amplitudes)) {
        qubit_count(amplitudes_.size());
        const double norm = vector_norm(amplitudes_);
        if (std::abs(norm * norm - 1.0) > tol) {
            throw std::invalid_argument("PureState: squared norm " + std::to_string(norm * norm) + " is not 1");
        }
    }

    std::size_t dim() const { return amplitudes_.size(); }
    int qubits() const { return qubit_count(amplitudes_.size()); }
    std::span<const Complex> amplitudes() const { return amplitudes_; }
    Complex operator[](std::size_t i) const { return amplitudes_[i]; }

    /// |psi><psi|
    ComplexMatrix projector() const { return ComplexMatrix::outer(amplitudes_, amplitudes_); }

   private:
    ComplexVector amplitudes_;
};

/// Hermitian, unit-trace, positive semidefinite matrix over a power-of-two dimension.
class DensityMatrix {
   public:
    /// Checks every invariant, including positivity (one eigendecomposition).
    static DensityMatrix from_matrix(ComplexMatrix m, const Tolerances &tol = kTolerances) {
        DensityMatrix rho = unchecked(std::move(m));
        if (!rho.matrix_.is_hermitian(tol.equality)) {
            throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
        }
        const Complex tr = rho.matrix_.trace();
        if (std::abs(tr - 1.0) > tol.equality) {
            throw std::invalid_argument("DensityMatrix: trace " + std::to_string(tr.real()) + " is not 1");
        }
        const auto eigs = hermitian_eigenvalues(rho.matrix_, tol.equality, tol);
        if (eigs.front() < -tol.psd_slack) {
            throw std::invalid_argument(
                "DensityMatrix: negative eigenvalue " + std::to_string(eigs.front()));
        }
        return rho;
    }

    /// Only the shape is checked; for outputs of maps already known to be CPTP.
    static DensityMatrix unchecked(ComplexMatrix m) {
        if (!m.is_square()) {
            throw std::invalid_argument("DensityMatrix: matrix must be square, got " + m.shape_string());
        }
        qubit_count(m.rows());
        DensityMatrix rho;
        rho.matrix_ = std::move(m);
        return rho;
    }

    static DensityMatrix from_pure(const PureState &psi) { return unchecked(psi.projector()); }

    static DensityMatrix maximally_mixed(std::size_t dim) {
        return unchecked(ComplexMatrix::identity(dim) * Complex(1.0 / static_cast<double>(dim)));
    }

    std::size_t dim() const { return matrix_.rows(); }
    int qubits() const { return qubit_count(matrix_.rows()); }
    const ComplexMatrix &matrix() const { return matrix_; }
    Complex operator()(std::size_t r, std::size_t c) const { return matrix_(r, c); }

   private:
    DensityMatrix() = default;
    ComplexMatrix matrix_;
};

inline ComplexMatrix partial_transpose(const DensityMatrix &rho, std::span<const int> subset) {
    return partial_transpose(rho.matrix(), subset);
}

inline ComplexMatrix partial_transpose(const DensityMatrix &rho, std::initializer_list<int> subset) {
    return partial_transpose(rho.matrix(), std::span<const int>(subset.begin(), subset.size()));
}

inline DensityMatrix partial_trace(const DensityMatrix &rho, std::span<const int> keep) {
    return DensityMatrix::unchecked(partial_trace(rho.matrix(), keep));
}

inline DensityMatrix partial_trace(const DensityMatrix &rho, std::initializer_list<int> keep) {
    return partial_trace(rho, std::span<const int>(keep.begin(), keep.size()));
}

}  // namespace qec5
