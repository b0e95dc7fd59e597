// Copyright (c) 2026 the qcfem authors
// SPDX-License-Identifier: Apache-2.0

#include "qcfem/rational.hpp"

#include <cmath>
#include <cstdlib>

namespace qcfem {

RationalMatrix invert(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("invert: matrix not square");
    const std::size_t n = m.rows();
    RationalMatrix a = m;
    RationalMatrix inv = RationalMatrix::identity(n);

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col) == 0) ++pivot;
        if (pivot == n) throw std::runtime_error("invert: singular matrix");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(pivot, j), a(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        }
        const Rational d = a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) /= d;
            inv(col, j) /= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0) continue;
            const Rational f = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

std::size_t rank(RationalMatrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t pivot = r;
        while (pivot < rows && m(pivot, col) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != r)
            for (std::size_t j = col; j < cols; ++j) std::swap(m(pivot, j), m(r, j));
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m(i, col) == 0) continue;
            const Rational f = m(i, col) / m(r, col);
            for (std::size_t j = col; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

double condition_estimate(const RationalMatrix& m, const RationalMatrix& m_inv) {
    auto inf_norm = [](const RationalMatrix& a) {
        double best = 0.0;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < a.cols(); ++j) s += std::abs(to_double(a(i, j)));
            best = std::max(best, s);
        }
        return best;
    };
    return inf_norm(m) * inf_norm(m_inv);
}

}  // namespace qcfem
