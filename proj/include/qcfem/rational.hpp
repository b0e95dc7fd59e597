// Copyright (c) 2026 the qcfem authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcfem {

/// Exact rational scalar used for all reference-element construction.
/// Conversion to double happens only at tabulation / evaluation time.
using Rational = mpq_class;

inline double to_double(const Rational& q) { return q.get_d(); }

/// Small dense matrix over Rational. Row-major storage.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    static RationalMatrix identity(std::size_t n) {
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Exact inverse by Gauss-Jordan elimination with partial (nonzero) pivoting.
/// Throws std::runtime_error if the matrix is singular.
RationalMatrix invert(const RationalMatrix& m);

/// Exact rank by fraction-preserving Gaussian elimination.
std::size_t rank(RationalMatrix m);

/// Infinity-norm condition estimate ||M||_inf * ||M^-1||_inf in double precision.
double condition_estimate(const RationalMatrix& m, const RationalMatrix& m_inv);

}  // namespace qcfem
