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

namespace qec5 {

/// Numerical tolerances shared by the library and its test suites.
struct Tolerances {
    /// Entrywise equality of matrices, hermiticity and trace checks.
    double equality = 1e-10;
    /// Per-eigenpair residual of the Jacobi eigensolver.
    double eigen_residual = 1e-9;
    /// Smallest eigenvalue a density matrix may have (PSD up to slack).
    double psd_slack = 1e-9;
    /// Jacobi stops once every off-diagonal magnitude is below this.
    double jacobi_off_diagonal = 1e-12;
    int jacobi_max_sweeps = 100;
    /// Kraus completeness sum_i K_i^dag K_i = I.
    double kraus_completeness = 1e-12;
    /// Syndrome branches with less probability than this are flagged empty.
    double zero_probability = 1e-12;
    /// Negativities at or below this are reported as exactly zero.
    double negativity_floor = 1e-9;
};

inline constexpr Tolerances kTolerances{};

}  // namespace qec5
