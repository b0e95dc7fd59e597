// Copyright (c) 2026 the qcfem authors
// SPDX-License-Identifier: Apache-2.0

#include "qcfem/poly.hpp"

#include <cmath>
#include <sstream>

namespace qcfem {

namespace {

Monomial bump(const Monomial& m, int axis, int by) {
    Monomial r = m;
    switch (axis) {
        case 0: r.a += by; break;
        case 1: r.b += by; break;
        default: r.c += by; break;
    }
    return r;
}

/// int_{-1}^{1} t^n dt
Rational interval_moment(int n) {
    if (n % 2 == 1) return Rational(0);
    return Rational(2, n + 1);
}

}  // namespace

Poly3 Poly3::constant(const Rational& c) { return monomial(0, 0, 0, c); }

Poly3 Poly3::monomial(int a, int b, int c, const Rational& coef) {
    Poly3 p;
    p.add_term({a, b, c}, coef);
    return p;
}

Poly3 Poly3::variable(Axis axis) {
    switch (axis) {
        case Axis::X: return monomial(1, 0, 0);
        case Axis::Y: return monomial(0, 1, 0);
        default: return monomial(0, 0, 1);
    }
}

int Poly3::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

Rational Poly3::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Poly3::add_term(const Monomial& m, const Rational& coef) {
    if (coef == 0) return;
    auto [it, inserted] = terms_.emplace(m, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly3 Poly3::operator+(const Poly3& rhs) const {
    Poly3 r = *this;
    r += rhs;
    return r;
}

Poly3 Poly3::operator-(const Poly3& rhs) const {
    Poly3 r = *this;
    r -= rhs;
    return r;
}

Poly3 Poly3::operator-() const {
    Poly3 r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly3& Poly3::operator+=(const Poly3& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

Poly3& Poly3::operator-=(const Poly3& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

Poly3 Poly3::operator*(const Poly3& rhs) const {
    Poly3 r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : rhs.terms_)
            r.add_term({m1.a + m2.a, m1.b + m2.b, m1.c + m2.c}, c1 * c2);
    return r;
}

Poly3 Poly3::operator*(const Rational& s) const {
    Poly3 r;
    if (s == 0) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
    return r;
}

Poly3 Poly3::differentiate(Axis axis) const {
    const int ax = static_cast<int>(axis);
    Poly3 r;
    for (const auto& [m, c] : terms_) {
        const int e = m.exp(ax);
        if (e == 0) continue;
        r.add_term(bump(m, ax, -1), c * e);
    }
    return r;
}

Poly3 Poly3::times_variable(Axis axis) const {
    Poly3 r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(bump(m, static_cast<int>(axis), +1), c);
    return r;
}

Poly3 Poly3::substitute(Axis axis, const Rational& value) const {
    const int ax = static_cast<int>(axis);
    Poly3 r;
    for (const auto& [m, c] : terms_) {
        Rational factor = c;
        for (int k = 0; k < m.exp(ax); ++k) factor *= value;
        r.add_term(bump(m, ax, -m.exp(ax)), factor);
    }
    return r;
}

double Poly3::evaluate(const std::array<double, 3>& p) const {
    double sum = 0.0;
    for (const auto& [m, c] : terms_) {
        double t = to_double(c);
        for (int k = 0; k < m.a; ++k) t *= p[0];
        for (int k = 0; k < m.b; ++k) t *= p[1];
        for (int k = 0; k < m.c; ++k) t *= p[2];
        sum += t;
    }
    return sum;
}

Rational Poly3::evaluate_exact(const std::array<Rational, 3>& p) const {
    Rational sum(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (int k = 0; k < m.a; ++k) t *= p[0];
        for (int k = 0; k < m.b; ++k) t *= p[1];
        for (int k = 0; k < m.c; ++k) t *= p[2];
        sum += t;
    }
    return sum;
}

Rational Poly3::integral_cell() const {
    Rational sum(0);
    for (const auto& [m, c] : terms_)
        sum += c * interval_moment(m.a) * interval_moment(m.b) * interval_moment(m.c);
    return sum;
}

Rational Poly3::integral_interval(Axis axis) const {
    const int ax = static_cast<int>(axis);
    Rational sum(0);
    for (const auto& [m, c] : terms_) {
        if (m.degree() != m.exp(ax))
            throw std::invalid_argument("integral_interval: polynomial depends on other axes");
        sum += c * interval_moment(m.exp(ax));
    }
    return sum;
}

std::string Poly3::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str();
        if (m.a) os << "*x^" << m.a;
        if (m.b) os << "*y^" << m.b;
        if (m.c) os << "*z^" << m.c;
    }
    return os.str();
}

PolyVec3 PolyVec3::operator+(const PolyVec3& rhs) const {
    return {comp[0] + rhs.comp[0], comp[1] + rhs.comp[1], comp[2] + rhs.comp[2]};
}

PolyVec3 PolyVec3::operator-(const PolyVec3& rhs) const {
    return {comp[0] - rhs.comp[0], comp[1] - rhs.comp[1], comp[2] - rhs.comp[2]};
}

PolyVec3 PolyVec3::operator*(const Rational& s) const {
    return {comp[0] * s, comp[1] * s, comp[2] * s};
}

int PolyVec3::degree() const {
    return std::max(comp[0].degree(), std::max(comp[1].degree(), comp[2].degree()));
}

std::array<double, 3> PolyVec3::evaluate(const std::array<double, 3>& p) const {
    return {comp[0].evaluate(p), comp[1].evaluate(p), comp[2].evaluate(p)};
}

PolyVec3 grad(const Poly3& p) {
    return {p.differentiate(Axis::X), p.differentiate(Axis::Y), p.differentiate(Axis::Z)};
}

PolyVec3 curl(const PolyVec3& v) {
    return {v[2].differentiate(Axis::Y) - v[1].differentiate(Axis::Z),
            v[0].differentiate(Axis::Z) - v[2].differentiate(Axis::X),
            v[1].differentiate(Axis::X) - v[0].differentiate(Axis::Y)};
}

Poly3 div(const PolyVec3& v) {
    return v[0].differentiate(Axis::X) + v[1].differentiate(Axis::Y) + v[2].differentiate(Axis::Z);
}

Poly3 dot(const PolyVec3& v, const PolyVec3& w) {
    return v[0] * w[0] + v[1] * w[1] + v[2] * w[2];
}

PolyVec3 poincare_p(const PolyVec3& v) {
    // x cross e_j expressed term-wise: each term of component j of degree d
    // contributes -(1/(d+2)) * c * m * (x cross e_j).
    PolyVec3 r;
    for (int j = 0; j < 3; ++j) {
        for (const auto& [m, c] : v[j].terms()) {
            const Rational f = -c / Rational(m.degree() + 2);
            const Poly3 mono = Poly3::monomial(m.a, m.b, m.c, f);
            switch (j) {
                case 0:  // x cross e1 = (0, z, -y)
                    r[1] += mono.times_variable(Axis::Z);
                    r[2] -= mono.times_variable(Axis::Y);
                    break;
                case 1:  // x cross e2 = (-z, 0, x)
                    r[0] -= mono.times_variable(Axis::Z);
                    r[2] += mono.times_variable(Axis::X);
                    break;
                default:  // x cross e3 = (y, -x, 0)
                    r[0] += mono.times_variable(Axis::Y);
                    r[1] -= mono.times_variable(Axis::X);
                    break;
            }
        }
    }
    return r;
}

PolyVec3 poincare_p3(const Poly3& s) {
    PolyVec3 r;
    for (const auto& [m, c] : s.terms()) {
        const Poly3 mono = Poly3::monomial(m.a, m.b, m.c, c / Rational(m.degree() + 3));
        r[0] += mono.times_variable(Axis::X);
        r[1] += mono.times_variable(Axis::Y);
        r[2] += mono.times_variable(Axis::Z);
    }
    return r;
}

Poly3 poincare_p1(const PolyVec3& v) {
    Poly3 r;
    for (int j = 0; j < 3; ++j) {
        const Axis axis = static_cast<Axis>(j);
        for (const auto& [m, c] : v[j].terms()) {
            const Poly3 mono = Poly3::monomial(m.a, m.b, m.c, c / Rational(m.degree() + 1));
            r += mono.times_variable(axis);
        }
    }
    return r;
}

}  // namespace qcfem
