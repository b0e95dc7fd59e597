// Copyright (c) 2026 the qcfem authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "qcfem/poly.hpp"
#include "qcfem/reference_element.hpp"

using namespace qcfem;

namespace {

Poly3 mono(int a, int b, int c, long num = 1, long den = 1) {
    return Poly3::monomial(a, b, c, Rational(num, den));
}

/// Random polynomial with small integer coefficients and total degree <= max_deg.
Poly3 random_poly(std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> coef(-9, 9);
    Poly3 p;
    for (int a = 0; a <= max_deg; ++a)
        for (int b = 0; a + b <= max_deg; ++b)
            for (int c = 0; a + b + c <= max_deg; ++c) p.add_term({a, b, c}, Rational(coef(rng)));
    return p;
}

PolyVec3 random_field(std::mt19937_64& rng, int max_deg) {
    return {random_poly(rng, max_deg), random_poly(rng, max_deg), random_poly(rng, max_deg)};
}

}  // namespace

TEST_CASE("partial derivatives") {
    // d/dx (x^2 y) = 2xy
    CHECK(mono(2, 1, 0).differentiate(Axis::X) == mono(1, 1, 0, 2));
    // d/dz (xy) = 0
    CHECK(mono(1, 1, 0).differentiate(Axis::Z).is_zero());
    // d/dy (y^3 - y) = 3y^2 - 1
    const Poly3 p = mono(0, 3, 0) - mono(0, 1, 0);
    CHECK(p.differentiate(Axis::Y) == mono(0, 2, 0, 3) - mono(0, 0, 0));
}

TEST_CASE("vector calculus") {
    // curl(0, 0, xy) = (x, -y, 0)
    const PolyVec3 v{Poly3{}, Poly3{}, mono(1, 1, 0)};
    const PolyVec3 cv = curl(v);
    CHECK(cv[0] == mono(1, 0, 0));
    CHECK(cv[1] == -mono(0, 1, 0));
    CHECK(cv[2].is_zero());

    // div(x, y, z) = 3
    const PolyVec3 radial{mono(1, 0, 0), mono(0, 1, 0), mono(0, 0, 1)};
    CHECK(div(radial) == mono(0, 0, 0, 3));

    // grad(xyz) = (yz, xz, xy)
    const PolyVec3 g = grad(mono(1, 1, 1));
    CHECK(g[0] == mono(0, 1, 1));
    CHECK(g[1] == mono(1, 0, 1));
    CHECK(g[2] == mono(1, 1, 0));
}

TEST_CASE("poincare operator p") {
    // p(1,0,0) = (0, -z/2, y/2)
    const PolyVec3 e1{mono(0, 0, 0), Poly3{}, Poly3{}};
    const PolyVec3 p1 = poincare_p(e1);
    CHECK(p1[0].is_zero());
    CHECK(p1[1] == mono(0, 0, 1, -1, 2));
    CHECK(p1[2] == mono(0, 1, 0, 1, 2));
    CHECK(curl(p1) == e1);  // div e1 = 0, so curl p e1 = e1

    // radial field is in the kernel
    const PolyVec3 radial{mono(1, 0, 0), mono(0, 1, 0), mono(0, 0, 1)};
    CHECK(poincare_p(radial).is_zero());

    // p(0, x^2, 0) = (z x^2/4, 0, -x^3/4), degree-2 factor 1/4
    const PolyVec3 w{Poly3{}, mono(2, 0, 0), Poly3{}};
    const PolyVec3 pw = poincare_p(w);
    CHECK(pw[0] == mono(2, 0, 1, 1, 4));
    CHECK(pw[1].is_zero());
    CHECK(pw[2] == mono(3, 0, 0, -1, 4));
    CHECK(curl(pw) == w);
}

TEST_CASE("poincare operator p3") {
    const PolyVec3 p_one = poincare_p3(mono(0, 0, 0));
    CHECK(p_one[0] == mono(1, 0, 0, 1, 3));
    CHECK(p_one[1] == mono(0, 1, 0, 1, 3));
    CHECK(p_one[2] == mono(0, 0, 1, 1, 3));

    CHECK(poincare_p3(Poly3{}).is_zero());

    const PolyVec3 p_x = poincare_p3(mono(1, 0, 0));
    CHECK(p_x[0] == mono(2, 0, 0, 1, 4));
    CHECK(p_x[1] == mono(1, 1, 0, 1, 4));
    CHECK(p_x[2] == mono(1, 0, 1, 1, 4));
}

TEST_CASE("poincare operator p1") {
    const PolyVec3 e1{mono(0, 0, 0), Poly3{}, Poly3{}};
    CHECK(poincare_p1(e1) == mono(1, 0, 0));

    CHECK(poincare_p1(PolyVec3{}).is_zero());

    // p1(p(w)) = 0 for every generator w of the face-moment space
    for (const PolyVec3& w : w_space_generators()) CHECK(poincare_p1(poincare_p(w)).is_zero());
}

TEST_CASE("evaluation") {
    const PolyVec3 v{mono(2, 0, 0), mono(0, 1, 0), mono(0, 0, 0)};
    const auto val = v.evaluate({2.0, 3.0, 5.0});
    CHECK(val[0] == doctest::Approx(4.0));
    CHECK(val[1] == doctest::Approx(3.0));
    CHECK(val[2] == doctest::Approx(1.0));

    CHECK(Poly3{}.evaluate({0.3, -0.7, 11.0}) == 0.0);

    // (0, (1-z)(1+x)/8, 0) at (1, t, -1) has middle component 1/2
    const Poly3 q = (Poly3::constant(1) - Poly3::variable(Axis::Z)) *
                    (Poly3::constant(1) + Poly3::variable(Axis::X)) * Rational(1, 8);
    CHECK(q.evaluate({1.0, 0.33, -1.0}) == doctest::Approx(0.5));
    CHECK(q.evaluate({1.0, -0.9, -1.0}) == doctest::Approx(0.5));
}

TEST_CASE("poincare identity curl p v + p3 div v = v") {
    for (const PolyVec3& w : w_space_generators()) {
        const PolyVec3 lhs = curl(poincare_p(w)) + poincare_p3(div(w));
        CHECK(lhs == w);
    }
    std::mt19937_64 rng(20260810);
    for (int trial = 0; trial < 50; ++trial) {
        const PolyVec3 v = random_field(rng, 3);
        CHECK(curl(poincare_p(v)) + poincare_p3(div(v)) == v);
    }
}

TEST_CASE("poincare identity grad p1 v + p curl v = v") {
    std::mt19937_64 rng(509);
    for (int trial = 0; trial < 25; ++trial) {
        const PolyVec3 v = random_field(rng, 3);
        CHECK(grad(poincare_p1(v)) + poincare_p(curl(v)) == v);
    }
}

TEST_CASE("grad p1 grad q = grad q") {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 25; ++trial) {
        const Poly3 q = random_poly(rng, 3);
        const PolyVec3 g = grad(q);
        CHECK(grad(poincare_p1(g)) == g);
    }
}

TEST_CASE("div curl = 0 and curl grad = 0") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 25; ++trial) {
        CHECK(div(curl(random_field(rng, 4))).is_zero());
        CHECK(curl(grad(random_poly(rng, 4))).is_zero());
    }
}

TEST_CASE("substitution and exact integrals") {
    // int over (-1,1)^3 of x^2 y^2 z^2 = (2/3)^3
    CHECK(mono(2, 2, 0).times_variable(Axis::Z).times_variable(Axis::Z).integral_cell() ==
          Rational(8, 27));
    const Poly3 p = mono(1, 2, 1);  // x y^2 z
    CHECK(p.substitute(Axis::X, Rational(2)) == mono(0, 2, 1, 2));
    CHECK(p.substitute(Axis::Y, Rational(-1)) == mono(1, 0, 1));
    CHECK(p.evaluate_exact({Rational(1, 2), Rational(3), Rational(-2)}) == Rational(-9));
}
