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
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qec5/tolerances.hpp"

namespace qec5 {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Dense complex matrix stored in row-major order.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;

    ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_) {
            throw std::invalid_argument(
                "ComplexMatrix: " + std::to_string(entries_.size()) + " entries do not fill a " +
                std::to_string(rows_) + "x" + std::to_string(cols_) + " matrix");
        }
    }

    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) : rows_(rows.size()) {
        cols_ = rows.size() == 0 ? 0 : rows.begin()->size();
        entries_.reserve(rows_ * cols_);
        for (const auto &row : rows) {
            if (row.size() != cols_) {
                throw std::invalid_argument("ComplexMatrix: ragged initializer list");
            }
            entries_.insert(entries_.end(), row.begin(), row.end());
        }
    }

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }

    static ComplexMatrix diagonal(std::span<const Complex> values) {
        ComplexMatrix m(values.size(), values.size());
        for (std::size_t i = 0; i < values.size(); ++i) {
            m(i, i) = values[i];
        }
        return m;
    }

    /// |v><w|
    static ComplexMatrix outer(std::span<const Complex> v, std::span<const Complex> w) {
        ComplexMatrix m(v.size(), w.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            for (std::size_t j = 0; j < w.size(); ++j) {
                m(i, j) = v[i] * std::conj(w[j]);
            }
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex &operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Complex &operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<const Complex> entries() const { return entries_; }
    std::span<Complex> entries() { return entries_; }

    ComplexMatrix adjoint() const {
        ComplexMatrix out(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) {
                out(c, r) = std::conj((*this)(r, c));
            }
        }
        return out;
    }

    ComplexMatrix transpose() const {
        ComplexMatrix out(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) {
                out(c, r) = (*this)(r, c);
            }
        }
        return out;
    }

    Complex trace() const {
        Complex t = 0.0;
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) {
            t += (*this)(i, i);
        }
        return t;
    }

    ComplexMatrix &operator+=(const ComplexMatrix &other) {
        require_same_shape(other, "+=");
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            entries_[i] += other.entries_[i];
        }
        return *this;
    }

    ComplexMatrix &operator-=(const ComplexMatrix &other) {
        require_same_shape(other, "-=");
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            entries_[i] -= other.entries_[i];
        }
        return *this;
    }

    ComplexMatrix &operator*=(Complex scale) {
        for (auto &e : entries_) {
            e *= scale;
        }
        return *this;
    }

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

    friend ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
        if (a.cols_ != b.rows_) {
            throw std::invalid_argument(
                "ComplexMatrix: cannot multiply " + a.shape_string() + " by " + b.shape_string());
        }
        ComplexMatrix out(a.rows_, b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Complex ark = a(r, k);
                if (ark == Complex{}) {
                    continue;
                }
                for (std::size_t c = 0; c < b.cols_; ++c) {
                    out(r, c) += ark * b(k, c);
                }
            }
        }
        return out;
    }

    friend ComplexVector operator*(const ComplexMatrix &a, std::span<const Complex> v) {
        if (a.cols_ != v.size()) {
            throw std::invalid_argument("ComplexMatrix: vector length does not match " + a.shape_string());
        }
        ComplexVector out(a.rows_);
        for (std::size_t r = 0; r < a.rows_; ++r) {
            for (std::size_t c = 0; c < a.cols_; ++c) {
                out[r] += a(r, c) * v[c];
            }
        }
        return out;
    }

    /// Largest entrywise |a - b|; shapes must agree.
    double max_abs_diff(const ComplexMatrix &other) const {
        require_same_shape(other, "max_abs_diff");
        double worst = 0.0;
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            worst = std::max(worst, std::abs(entries_[i] - other.entries_[i]));
        }
        return worst;
    }

    bool approx_equal(const ComplexMatrix &other, double tol = kTolerances.equality) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && max_abs_diff(other) <= tol;
    }

    bool is_hermitian(double tol = kTolerances.equality) const {
        if (!is_square()) {
            return false;
        }
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = r; c < cols_; ++c) {
                if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) {
                    return false;
                }
            }
        }
        return true;
    }

    /// Frobenius norm.
    double norm() const {
        double s = 0.0;
        for (const auto &e : entries_) {
            s += std::norm(e);
        }
        return std::sqrt(s);
    }

    std::string shape_string() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

    bool operator==(const ComplexMatrix &) const = default;

   private:
    void require_same_shape(const ComplexMatrix &other, const char *op) const {
        if (rows_ != other.rows_ || cols_ != other.cols_) {
            throw std::invalid_argument(
                std::string("ComplexMatrix ") + op + ": shape " + shape_string() + " vs " + other.shape_string());
        }
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

inline double vector_norm(std::span<const Complex> v) {
    double s = 0.0;
    for (const auto &x : v) {
        s += std::norm(x);
    }
    return std::sqrt(s);
}

/// <v|w>
inline Complex inner_product(std::span<const Complex> v, std::span<const Complex> w) {
    if (v.size() != w.size()) {
        throw std::invalid_argument("inner_product: length mismatch");
    }
    Complex s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += std::conj(v[i]) * w[i];
    }
    return s;
}

namespace pauli {
inline const ComplexMatrix I{{1.0, 0.0}, {0.0, 1.0}};
inline const ComplexMatrix X{{0.0, 1.0}, {1.0, 0.0}};
inline const ComplexMatrix Y{{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}};
inline const ComplexMatrix Z{{1.0, 0.0}, {0.0, -1.0}};
}  // namespace pauli

/// Number of qubits n with 2^n == dim; throws if dim is not a power of two.
inline int qubit_count(std::size_t dim) {
    if (dim == 0 || (dim & (dim - 1)) != 0) {
        throw std::invalid_argument("dimension " + std::to_string(dim) + " is not a power of two");
    }
    int n = 0;
    while ((std::size_t{1} << n) < dim) {
        ++n;
    }
    return n;
}

/// Bit position of a 1-based qubit index. Qubit 1 is the most significant bit.
inline std::size_t qubit_bit(int qubit, int n) { return static_cast<std::size_t>(n - qubit); }

inline ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ++ar) {
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            const Complex s = a(ar, ac);
            for (std::size_t br = 0; br < b.rows(); ++br) {
                for (std::size_t bc = 0; bc < b.cols(); ++bc) {
                    out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
                }
            }
        }
    }
    return out;
}

inline ComplexVector kron(std::span<const Complex> a, std::span<const Complex> b) {
    ComplexVector out;
    out.reserve(a.size() * b.size());
    for (const auto &x : a) {
        for (const auto &y : b) {
            out.push_back(x * y);
        }
    }
    return out;
}

/// I (x) ... (x) op (x) ... (x) I with `op` acting on the 1-based `qubit` of `n`.
inline ComplexMatrix embed_single_qubit_op(const ComplexMatrix &op, int qubit, int n) {
    if (op.rows() != 2 || op.cols() != 2) {
        throw std::invalid_argument("embed_single_qubit_op: operator must be 2x2, got " + op.shape_string());
    }
    if (n < 1 || qubit < 1 || qubit > n) {
        throw std::out_of_range(
            "embed_single_qubit_op: qubit " + std::to_string(qubit) + " not in 1.." + std::to_string(n));
    }
    ComplexMatrix out = ComplexMatrix::identity(1);
    for (int k = 1; k <= n; ++k) {
        out = kron(out, k == qubit ? op : pauli::I);
    }
    return out;
}

namespace detail {

inline std::size_t subset_mask(std::span<const int> qubits, int n, const char *who) {
    std::size_t mask = 0;
    for (int q : qubits) {
        if (q < 1 || q > n) {
            throw std::out_of_range(
                std::string(who) + ": qubit " + std::to_string(q) + " not in 1.." + std::to_string(n));
        }
        const std::size_t bit = std::size_t{1} << qubit_bit(q, n);
        if (mask & bit) {
            throw std::invalid_argument(std::string(who) + ": repeated qubit " + std::to_string(q));
        }
        mask |= bit;
    }
    return mask;
}

/// Scatters the low bits of `compact` into the set bits of `mask`, in order.
inline std::size_t deposit_bits(std::size_t compact, std::size_t mask) {
    std::size_t out = 0;
    for (std::size_t bit = 1; mask != 0; bit <<= 1) {
        const std::size_t lowest = mask & (~mask + 1);
        if (compact & bit) {
            out |= lowest;
        }
        mask &= mask - 1;
    }
    return out;
}

}  // namespace detail

/// Transposes the row/column indices of the listed qubits only.
inline ComplexMatrix partial_transpose(const ComplexMatrix &m, std::span<const int> subset) {
    if (!m.is_square()) {
        throw std::invalid_argument("partial_transpose: matrix must be square, got " + m.shape_string());
    }
    if (subset.empty()) {
        throw std::invalid_argument("partial_transpose: empty qubit subset");
    }
    const int n = qubit_count(m.rows());
    const std::size_t mask = detail::subset_mask(subset, n, "partial_transpose");
    ComplexMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const std::size_t swapped = (r ^ c) & mask;
            out(r ^ swapped, c ^ swapped) = m(r, c);
        }
    }
    return out;
}

/// Traces out every qubit not in `keep`; kept qubits stay in ascending order.
inline ComplexMatrix partial_trace(const ComplexMatrix &m, std::span<const int> keep) {
    if (!m.is_square()) {
        throw std::invalid_argument("partial_trace: matrix must be square, got " + m.shape_string());
    }
    if (keep.empty()) {
        throw std::invalid_argument("partial_trace: keep set is empty");
    }
    const int n = qubit_count(m.rows());
    const std::size_t keep_mask = detail::subset_mask(keep, n, "partial_trace");
    const std::size_t traced_mask = (m.rows() - 1) & ~keep_mask;
    const std::size_t out_dim = std::size_t{1} << keep.size();
    const std::size_t traced_dim = m.rows() / out_dim;
    ComplexMatrix out(out_dim, out_dim);
    for (std::size_t r = 0; r < out_dim; ++r) {
        const std::size_t rk = detail::deposit_bits(r, keep_mask);
        for (std::size_t c = 0; c < out_dim; ++c) {
            const std::size_t ck = detail::deposit_bits(c, keep_mask);
            Complex s = 0.0;
            for (std::size_t t = 0; t < traced_dim; ++t) {
                const std::size_t tk = detail::deposit_bits(t, traced_mask);
                s += m(rk | tk, ck | tk);
            }
            out(r, c) = s;
        }
    }
    return out;
}

}  // namespace qec5
