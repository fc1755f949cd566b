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
#include <cmath>
#include <stdexcept>
#include <vector>

#include "qec5/linalg.hpp"
#include "qec5/tolerances.hpp"

namespace qec5 {

struct EigenDecomposition {
    /// Ascending.
    std::vector<double> values;
    /// Column k is the unit eigenvector of values[k].
    ComplexMatrix vectors;
    int sweeps = 0;
};

namespace detail {

inline double max_off_diagonal(const ComplexMatrix &a) {
    double worst = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = r + 1; c < a.cols(); ++c) {
            worst = std::max(worst, std::abs(a(r, c)));
        }
    }
    return worst;
}

// Cyclic complex Jacobi. Each rotation G = diag(1, e^{-i phi}) * [[c, s], [-s, c]] in the (p, q) plane
// zeroes a(p, q); `a` is overwritten with G^dag a G and, if given, `v` accumulates v G.
inline int jacobi_sweeps(ComplexMatrix &a, ComplexMatrix *v, const Tolerances &tol) {
    const std::size_t n = a.rows();
    int sweep = 0;
    for (; sweep < tol.jacobi_max_sweeps; ++sweep) {
        if (max_off_diagonal(a) < tol.jacobi_off_diagonal) {
            return sweep;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag == 0.0) {
                    continue;
                }
                const Complex phase = apq / mag;  // e^{i phi}
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * mag);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const Complex gpp = c;
                const Complex gpq = s;
                const Complex gqp = -s * std::conj(phase);
                const Complex gqq = c * std::conj(phase);

                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = akp * gpp + akq * gqp;
                    a(k, q) = akp * gpq + akq * gqq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
                    a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();

                if (v != nullptr) {
                    for (std::size_t k = 0; k < n; ++k) {
                        const Complex vkp = (*v)(k, p);
                        const Complex vkq = (*v)(k, q);
                        (*v)(k, p) = vkp * gpp + vkq * gqp;
                        (*v)(k, q) = vkp * gpq + vkq * gqq;
                    }
                }
            }
        }
    }
    if (max_off_diagonal(a) >= tol.jacobi_off_diagonal) {
        throw std::runtime_error("Jacobi eigensolver did not converge in " + std::to_string(sweep) + " sweeps");
    }
    return sweep;
}

inline void require_hermitian(const ComplexMatrix &a, double tol, const char *who) {
    if (!a.is_square()) {
        throw std::invalid_argument(std::string(who) + ": matrix must be square, got " + a.shape_string());
    }
    if (!a.is_hermitian(tol)) {
        throw std::invalid_argument(std::string(who) + ": matrix is not Hermitian within " + std::to_string(tol));
    }
}

}  // namespace detail

/// Full eigendecomposition of a Hermitian matrix by cyclic Jacobi sweeps.
inline EigenDecomposition hermitian_eigen(
    const ComplexMatrix &a, double hermitian_tol = kTolerances.equality, const Tolerances &tol = kTolerances) {
    detail::require_hermitian(a, hermitian_tol, "hermitian_eigen");
    ComplexMatrix work = a;
    ComplexMatrix v = ComplexMatrix::identity(a.rows());
    const int sweeps = detail::jacobi_sweeps(work, &v, tol);

    const std::size_t n = a.rows();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) {
        order[i] = i;
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return work(x, x).real() < work(y, y).real();
    });

    EigenDecomposition out;
    out.sweeps = sweeps;
    out.values.reserve(n);
    out.vectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values.push_back(work(order[k], order[k]).real());
        for (std::size_t r = 0; r < n; ++r) {
            out.vectors(r, k) = v(r, order[k]);
        }
    }
    return out;
}

/// Ascending eigenvalues of a Hermitian matrix. Skips eigenvector accumulation.
inline std::vector<double> hermitian_eigenvalues(
    const ComplexMatrix &a, double hermitian_tol = kTolerances.equality, const Tolerances &tol = kTolerances) {
    detail::require_hermitian(a, hermitian_tol, "hermitian_eigenvalues");
    ComplexMatrix work = a;
    detail::jacobi_sweeps(work, nullptr, tol);
    std::vector<double> values;
    values.reserve(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        values.push_back(work(i, i).real());
    }
    std::sort(values.begin(), values.end());
    return values;
}

}  // namespace qec5
