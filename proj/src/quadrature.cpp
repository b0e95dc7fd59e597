// Copyright (c) 2026 the qcfem authors
// SPDX-License-Identifier: Apache-2.0

#include "qcfem/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace qcfem {

void gauss_legendre_1d(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    if (n < 1) throw std::invalid_argument("gauss_legendre_1d: n must be >= 1");
    nodes.assign(std::size_t(n), 0.0);
    weights.assign(std::size_t(n), 0.0);

    // Newton iteration on the Legendre polynomial P_n, Chebyshev initial guess.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[std::size_t(i)] = -x;  // ascending order
        nodes[std::size_t(n - 1 - i)] = x;
        weights[std::size_t(i)] = w;
        weights[std::size_t(n - 1 - i)] = w;
    }
    if (n % 2 == 1) nodes[std::size_t(n / 2)] = 0.0;
}

QuadratureRule gauss_rule(int n, QuadDomain domain) {
    std::vector<double> x, w;
    gauss_legendre_1d(n, x, w);

    QuadratureRule rule;
    rule.domain = domain;
    const int dim = domain == QuadDomain::Edge ? 1 : (domain == QuadDomain::Face ? 2 : 3);
    switch (dim) {
        case 1:
            for (int i = 0; i < n; ++i) {
                rule.points.push_back({x[std::size_t(i)], 0.0, 0.0});
                rule.weights.push_back(w[std::size_t(i)]);
            }
            break;
        case 2:
            for (int j = 0; j < n; ++j)
                for (int i = 0; i < n; ++i) {
                    rule.points.push_back({x[std::size_t(i)], x[std::size_t(j)], 0.0});
                    rule.weights.push_back(w[std::size_t(i)] * w[std::size_t(j)]);
                }
            break;
        default:
            for (int k = 0; k < n; ++k)
                for (int j = 0; j < n; ++j)
                    for (int i = 0; i < n; ++i) {
                        rule.points.push_back({x[std::size_t(i)], x[std::size_t(j)], x[std::size_t(k)]});
                        rule.weights.push_back(w[std::size_t(i)] * w[std::size_t(j)] * w[std::size_t(k)]);
                    }
            break;
    }
    return rule;
}

}  // namespace qcfem
