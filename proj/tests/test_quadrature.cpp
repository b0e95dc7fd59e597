// Copyright (c) 2026 the qcfem authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "qcfem/poly.hpp"
#include "qcfem/quadrature.hpp"

using namespace qcfem;

TEST_CASE("weights sum to the domain measure") {
    for (int n = 1; n <= 8; ++n) {
        double edge = 0, face = 0, cell = 0;
        for (double w : gauss_rule(n, QuadDomain::Edge).weights) edge += w;
        for (double w : gauss_rule(n, QuadDomain::Face).weights) face += w;
        for (double w : gauss_rule(n, QuadDomain::Cell).weights) cell += w;
        CHECK(edge == doctest::Approx(2.0).epsilon(1e-14));
        CHECK(face == doctest::Approx(4.0).epsilon(1e-14));
        CHECK(cell == doctest::Approx(8.0).epsilon(1e-14));
    }
}

TEST_CASE("n=2 cell rule integrates x^2 y^2 z^2 exactly") {
    const QuadratureRule rule = gauss_rule(2, QuadDomain::Cell);
    double sum = 0;
    for (std::size_t q = 0; q < rule.size(); ++q) {
        const auto& p = rule.points[q];
        sum += rule.weights[q] * p[0] * p[0] * p[1] * p[1] * p[2] * p[2];
    }
    CHECK(sum == doctest::Approx(8.0 / 27.0).epsilon(1e-14));
}

TEST_CASE("n=1 edge rule integrates constants exactly") {
    const QuadratureRule rule = gauss_rule(1, QuadDomain::Edge);
    REQUIRE(rule.size() == 1);
    CHECK(rule.weights[0] == doctest::Approx(2.0));
    CHECK(rule.points[0][0] == doctest::Approx(0.0));
}

TEST_CASE("degree 2n-1 exactness per direction") {
    // n-point rule integrates t^k exactly for k <= 2n-1; the exact moment of
    // t^k on (-1,1) is 0 for odd k and 2/(k+1) for even k.
    for (int n = 1; n <= 7; ++n) {
        const QuadratureRule rule = gauss_rule(n, QuadDomain::Edge);
        for (int k = 0; k <= 2 * n - 1; ++k) {
            double sum = 0;
            for (std::size_t q = 0; q < rule.size(); ++q)
                sum += rule.weights[q] * std::pow(rule.points[q][0], k);
            const double exact = (k % 2 == 0) ? 2.0 / (k + 1) : 0.0;
            CHECK(std::abs(sum - exact) < 1e-13);
        }
    }
}

TEST_CASE("cell rule matches exact rational integration of polynomials") {
    const QuadratureRule rule = gauss_rule(3, QuadDomain::Cell);
    const Poly3 p = Poly3::monomial(2, 1, 0, Rational(3)) + Poly3::monomial(0, 4, 1, Rational(-2)) +
                    Poly3::monomial(1, 1, 1, Rational(7, 3)) + Poly3::monomial(0, 0, 4, Rational(1, 5));
    double sum = 0;
    for (std::size_t q = 0; q < rule.size(); ++q) sum += rule.weights[q] * p.evaluate(rule.points[q]);
    CHECK(sum == doctest::Approx(to_double(p.integral_cell())).epsilon(1e-13));
}
