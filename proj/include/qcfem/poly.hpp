// Copyright (c) 2026 the qcfem authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "qcfem/rational.hpp"

namespace qcfem {

enum class Axis : int { X = 0, Y = 1, Z = 2 };

/// Exponent triple of a monomial x^a y^b z^c.
struct Monomial {
    int a = 0, b = 0, c = 0;

    int degree() const { return a + b + c; }
    int exp(int axis) const { return axis == 0 ? a : (axis == 1 ? b : c); }
    auto operator<=>(const Monomial&) const = default;
};

/// Polynomial in (x, y, z) with exact rational coefficients.
/// Invariant: no stored zero coefficients, exponent triples unique.
class Poly3 {
public:
    Poly3() = default;

    static Poly3 constant(const Rational& c);
    static Poly3 monomial(int a, int b, int c, const Rational& coef = Rational(1));
    static Poly3 variable(Axis axis);

    bool is_zero() const { return terms_.empty(); }
    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    std::size_t term_count() const { return terms_.size(); }

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    Rational coefficient(const Monomial& m) const;

    void add_term(const Monomial& m, const Rational& coef);

    Poly3 operator+(const Poly3& rhs) const;
    Poly3 operator-(const Poly3& rhs) const;
    Poly3 operator-() const;
    Poly3 operator*(const Poly3& rhs) const;
    Poly3 operator*(const Rational& s) const;
    Poly3& operator+=(const Poly3& rhs);
    Poly3& operator-=(const Poly3& rhs);
    bool operator==(const Poly3& rhs) const = default;

    Poly3 differentiate(Axis axis) const;
    /// Multiply by the coordinate monomial of `axis`.
    Poly3 times_variable(Axis axis) const;
    /// Substitute the given axis by an exact constant; result no longer depends on it.
    Poly3 substitute(Axis axis, const Rational& value) const;

    double evaluate(const std::array<double, 3>& p) const;
    Rational evaluate_exact(const std::array<Rational, 3>& p) const;

    /// Exact integral over the reference cell (-1,1)^3.
    Rational integral_cell() const;
    /// Exact integral over (-1,1) in `axis`; the polynomial must not depend on the others.
    Rational integral_interval(Axis axis) const;

    std::string str() const;

private:
    std::map<Monomial, Rational> terms_;
};

inline Poly3 operator*(const Rational& s, const Poly3& p) { return p * s; }

/// 3-component polynomial vector field.
struct PolyVec3 {
    std::array<Poly3, 3> comp;

    Poly3& operator[](int i) { return comp[std::size_t(i)]; }
    const Poly3& operator[](int i) const { return comp[std::size_t(i)]; }

    PolyVec3 operator+(const PolyVec3& rhs) const;
    PolyVec3 operator-(const PolyVec3& rhs) const;
    PolyVec3 operator*(const Rational& s) const;
    bool operator==(const PolyVec3& rhs) const = default;

    bool is_zero() const { return comp[0].is_zero() && comp[1].is_zero() && comp[2].is_zero(); }
    int degree() const;

    std::array<double, 3> evaluate(const std::array<double, 3>& p) const;
};

PolyVec3 grad(const Poly3& p);
PolyVec3 curl(const PolyVec3& v);
Poly3 div(const PolyVec3& v);
Poly3 dot(const PolyVec3& v, const PolyVec3& w);

/// Poincare operator  p v = -x cross int_0^1 t v(tx) dt.
/// Acts per homogeneous degree d as -(1/(d+2)) x cross v_d.
PolyVec3 poincare_p(const PolyVec3& v);

/// p3 s = x int_0^1 t^2 s(tx) dt; per degree d: (1/(d+3)) x s_d.
PolyVec3 poincare_p3(const Poly3& s);

/// p1 v = int_0^1 v(tx) . x dt; per degree d: (1/(d+1)) (v_d . x).
Poly3 poincare_p1(const PolyVec3& v);

}  // namespace qcfem
