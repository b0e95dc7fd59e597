// Copyright (c) 2026 the qcfem authors
// SPDX-License-Identifier: Apache-2.0

#include "qcfem/reference_element.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qcfem {

namespace {

Rational interval_moment(int n) {
    if (n % 2 == 1) return Rational(0);
    return Rational(2, n + 1);
}

constexpr std::array<std::array<int, 2>, 3> kOtherAxes = {{{1, 2}, {0, 2}, {0, 1}}};

int sign_from_bit(int bit) { return bit ? +1 : -1; }

}  // namespace

RefEdge ref_edge(int e) {
    if (e < 0 || e >= 12) throw std::invalid_argument("ref_edge: index out of range");
    const int axis = e / 4;
    const int local = e % 4;
    RefEdge edge;
    edge.axis = axis;
    edge.fixed_axes = kOtherAxes[std::size_t(axis)];
    edge.fixed_signs = {sign_from_bit(local & 1), sign_from_bit((local >> 1) & 1)};
    return edge;
}

RefFace ref_face(int f) {
    if (f < 0 || f >= 6) throw std::invalid_argument("ref_face: index out of range");
    RefFace face;
    face.axis = f / 2;
    face.sign = sign_from_bit(f % 2);
    face.tangent_axes = kOtherAxes[std::size_t(face.axis)];
    return face;
}

std::array<double, 3> embed_on_edge(int e, double t) {
    const RefEdge edge = ref_edge(e);
    std::array<double, 3> p{};
    p[std::size_t(edge.axis)] = t;
    p[std::size_t(edge.fixed_axes[0])] = edge.fixed_signs[0];
    p[std::size_t(edge.fixed_axes[1])] = edge.fixed_signs[1];
    return p;
}

std::array<double, 3> embed_on_face(int f, double u, double v) {
    const RefFace face = ref_face(f);
    std::array<double, 3> p{};
    p[std::size_t(face.axis)] = face.sign;
    p[std::size_t(face.tangent_axes[0])] = u;
    p[std::size_t(face.tangent_axes[1])] = v;
    return p;
}

Rational face_integral(const Poly3& p, int f) {
    const RefFace face = ref_face(f);
    const Poly3 restricted = p.substitute(static_cast<Axis>(face.axis), Rational(face.sign));
    Rational sum(0);
    for (const auto& [m, c] : restricted.terms()) {
        if (m.exp(face.axis) != 0) throw std::logic_error("face_integral: substitution failed");
        sum += c * interval_moment(m.exp(face.tangent_axes[0])) *
               interval_moment(m.exp(face.tangent_axes[1]));
    }
    return sum;
}

Rational edge_integral(const Poly3& p, int e, int order) {
    const RefEdge edge = ref_edge(e);
    Poly3 restricted = p.substitute(static_cast<Axis>(edge.fixed_axes[0]), Rational(edge.fixed_signs[0]))
                           .substitute(static_cast<Axis>(edge.fixed_axes[1]), Rational(edge.fixed_signs[1]));
    for (int k = 0; k < order; ++k) restricted = restricted.times_variable(static_cast<Axis>(edge.axis));
    return restricted.integral_interval(static_cast<Axis>(edge.axis));
}

Rational apply_dof(const DofDescriptor& d, const PolyVec3& v) {
    if (d.kind == DofDescriptor::Kind::EdgeMoment) {
        const RefEdge edge = ref_edge(d.entity);
        return edge_integral(v[edge.axis], d.entity, d.order);
    }
    const RefFace face = ref_face(d.entity);
    const PolyVec3 cv = curl(v);
    return face_integral(cv[face.tangent_axes[std::size_t(d.order)]], d.entity);
}

int superlinear_degree(const Monomial& m) {
    int d = 0;
    if (m.a >= 2) d += m.a;
    if (m.b >= 2) d += m.b;
    if (m.c >= 2) d += m.c;
    return d;
}

std::vector<Poly3> serendipity_monomials(int r) {
    if (r != 1 && r != 2) throw std::invalid_argument("serendipity_monomials: r must be 1 or 2");
    std::vector<Monomial> mons;
    for (int a = 0; a <= r; ++a)
        for (int b = 0; b <= r; ++b)
            for (int c = 0; c <= r; ++c) {
                const Monomial m{a, b, c};
                if (superlinear_degree(m) <= r) mons.push_back(m);
            }
    std::sort(mons.begin(), mons.end(), [](const Monomial& l, const Monomial& r2) {
        if (l.degree() != r2.degree()) return l.degree() < r2.degree();
        return std::tie(l.a, l.b, l.c) < std::tie(r2.a, r2.b, r2.c);
    });
    std::vector<Poly3> out;
    out.reserve(mons.size());
    for (const Monomial& m : mons) out.push_back(Poly3::monomial(m.a, m.b, m.c));
    return out;
}

std::vector<PolyVec3> w_space_generators() {
    std::vector<PolyVec3> gens;
    for (int comp = 0; comp < 3; ++comp) {
        for (const Monomial m : {Monomial{0, 0, 0}, Monomial{1, 0, 0}, Monomial{0, 1, 0}, Monomial{0, 0, 1}}) {
            PolyVec3 g;
            g[comp] = Poly3::monomial(m.a, m.b, m.c);
            gens.push_back(g);
        }
    }
    const std::array<std::pair<int, Monomial>, 6> quads = {{
        {0, {0, 2, 0}},  // (y^2, 0, 0)
        {0, {0, 0, 2}},  // (z^2, 0, 0)
        {1, {2, 0, 0}},  // (0, x^2, 0)
        {1, {0, 0, 2}},  // (0, z^2, 0)
        {2, {2, 0, 0}},  // (0, 0, x^2)
        {2, {0, 2, 0}},  // (0, 0, y^2)
    }};
    for (const auto& [comp, m] : quads) {
        PolyVec3 g;
        g[comp] = Poly3::monomial(m.a, m.b, m.c);
        gens.push_back(g);
    }
    return gens;
}

namespace {

/// Rank of a set of polynomial vector fields over their joint monomial support.
std::size_t field_rank(const std::vector<PolyVec3>& fields) {
    std::map<std::pair<int, Monomial>, std::size_t> columns;
    for (const PolyVec3& f : fields)
        for (int comp = 0; comp < 3; ++comp)
            for (const auto& [m, c] : f[comp].terms()) columns.emplace(std::make_pair(comp, m), 0);
    std::size_t idx = 0;
    for (auto& [key, col] : columns) col = idx++;

    RationalMatrix mat(fields.size(), columns.size());
    for (std::size_t i = 0; i < fields.size(); ++i)
        for (int comp = 0; comp < 3; ++comp)
            for (const auto& [m, c] : fields[i][comp].terms())
                mat(i, columns.at(std::make_pair(comp, m))) = c;
    return rank(mat);
}

/// Is this W generator the radial direction dropped before applying the
/// Poincare operator?
bool is_dropped_radial(const PolyVec3& g) {
    return g[0].is_zero() && g[1].is_zero() && g[2] == Poly3::variable(Axis::Z);
}

std::vector<PolyVec3> gradient_part(int r) {
    std::vector<PolyVec3> gens;
    for (const Poly3& m : serendipity_monomials(r)) {
        if (m.degree() == 0) continue;
        gens.push_back(grad(m));
    }
    return gens;
}

std::vector<DofDescriptor> element_dofs(int r, bool edge_only) {
    std::vector<DofDescriptor> dofs;
    for (int e = 0; e < 12; ++e)
        for (int q = 0; q < r; ++q) dofs.push_back({DofDescriptor::Kind::EdgeMoment, e, q});
    if (!edge_only)
        for (int f = 0; f < 6; ++f)
            for (int j = 0; j < 2; ++j) dofs.push_back({DofDescriptor::Kind::FaceCurlTangential, f, j});
    return dofs;
}

ReferenceElementBasis build_from(int r, std::vector<PolyVec3> gens, std::vector<DofDescriptor> dofs) {
    const std::size_t n = gens.size();
    if (dofs.size() != n) throw std::logic_error("dual basis: DOF/generator count mismatch");

    RationalMatrix g_mat(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g_mat(i, j) = apply_dof(dofs[i], gens[j]);

    RationalMatrix c_mat;
    try {
        c_mat = invert(g_mat);
    } catch (const std::runtime_error&) {
        throw std::runtime_error("dual basis: DOF matrix is singular (numbering/orientation bug?)");
    }

    ReferenceElementBasis basis;
    basis.r = r;
    basis.generators = std::move(gens);
    basis.dofs = std::move(dofs);
    basis.condition = condition_estimate(g_mat, c_mat);
    basis.basis.resize(n);
    basis.basis_curl.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        PolyVec3 nj;
        for (std::size_t k = 0; k < n; ++k) {
            if (c_mat(k, j) == 0) continue;
            nj = nj + basis.generators[k] * c_mat(k, j);
        }
        basis.basis_curl[j] = curl(nj);
        basis.basis[j] = std::move(nj);
    }
    basis.dual_coeffs = std::move(c_mat);
    return basis;
}

}  // namespace

std::vector<PolyVec3> build_generators(int r) {
    std::vector<PolyVec3> gens = gradient_part(r);
    const std::size_t n_grad = gens.size();
    for (const PolyVec3& w : w_space_generators()) {
        if (is_dropped_radial(w)) continue;
        gens.push_back(poincare_p(w));
    }
    const std::size_t expected = n_grad + 17;
    if (gens.size() != expected || field_rank(gens) != expected) {
        std::ostringstream os;
        os << "build_generators(r=" << r << "): expected rank " << expected << ", got "
           << field_rank(gens);
        throw std::runtime_error(os.str());
    }
    return gens;
}

std::vector<PolyVec3> nedelec_generators(int r) {
    std::vector<PolyVec3> gens = gradient_part(r);
    const std::size_t n_grad = gens.size();
    const std::array<std::pair<int, Monomial>, 5> lin = {{
        {0, {0, 0, 0}},
        {0, {1, 0, 0}},
        {1, {0, 0, 0}},
        {1, {0, 1, 0}},
        {2, {0, 0, 0}},
        // (0,0,z) dropped: radial direction in the Poincare kernel
    }};
    for (const auto& [comp, m] : lin) {
        PolyVec3 w;
        w[comp] = Poly3::monomial(m.a, m.b, m.c);
        gens.push_back(poincare_p(w));
    }
    const std::size_t expected = n_grad + 5;
    if (field_rank(gens) != expected)
        throw std::runtime_error("nedelec_generators: rank deficiency");
    return gens;
}

ReferenceElementBasis build_dual_basis(int r) {
    return build_from(r, build_generators(r), element_dofs(r, /*edge_only=*/false));
}

ReferenceElementBasis build_nedelec_dual_basis(int r) {
    return build_from(r, nedelec_generators(r), element_dofs(r, /*edge_only=*/true));
}

ScalarElementBasis build_serendipity_basis(int r) {
    const std::vector<Poly3> mons = serendipity_monomials(r);
    const std::size_t n = mons.size();

    // DOFs: vertex values, then edge integrals for r=2.
    std::size_t n_dofs = 8 + (r == 2 ? 12 : 0);
    if (n_dofs != n) throw std::logic_error("serendipity: DOF count mismatch");

    RationalMatrix g_mat(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (int v = 0; v < 8; ++v) {
            const std::array<Rational, 3> p = {Rational(sign_from_bit(v & 1)),
                                               Rational(sign_from_bit((v >> 1) & 1)),
                                               Rational(sign_from_bit((v >> 2) & 1))};
            g_mat(std::size_t(v), j) = mons[j].evaluate_exact(p);
        }
        if (r == 2)
            for (int e = 0; e < 12; ++e) g_mat(std::size_t(8 + e), j) = edge_integral(mons[j], e, 0);
    }
    const RationalMatrix c_mat = invert(g_mat);

    ScalarElementBasis basis;
    basis.r = r;
    basis.basis.resize(n);
    basis.basis_grad.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        Poly3 bj;
        for (std::size_t k = 0; k < n; ++k)
            if (c_mat(k, j) != 0) bj += mons[k] * c_mat(k, j);
        basis.basis_grad[j] = grad(bj);
        basis.basis[j] = std::move(bj);
    }
    return basis;
}

WElementBasis build_w_basis() {
    const std::vector<PolyVec3> gens = w_space_generators();
    const std::size_t n = gens.size();
    RationalMatrix g_mat(n, n);
    for (int f = 0; f < 6; ++f)
        for (int comp = 0; comp < 3; ++comp)
            for (std::size_t j = 0; j < n; ++j)
                g_mat(std::size_t(3 * f + comp), j) = face_integral(gens[j][comp], f);
    const RationalMatrix c_mat = invert(g_mat);

    WElementBasis basis;
    basis.basis.resize(n);
    basis.basis_div.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        PolyVec3 bj;
        for (std::size_t k = 0; k < n; ++k)
            if (c_mat(k, j) != 0) bj = bj + gens[k] * c_mat(k, j);
        basis.basis_div[j] = div(bj);
        basis.basis[j] = std::move(bj);
    }
    return basis;
}

ReferenceTable tabulate(const ReferenceElementBasis& basis, const QuadratureRule& rule) {
    if (rule.domain != QuadDomain::Cell) throw std::invalid_argument("tabulate: cell rule required");
    const std::size_t n = basis.size(), nq = rule.size();
    ReferenceTable table;
    table.value.assign(n, std::vector<std::array<double, 3>>(nq));
    table.curl.assign(n, std::vector<std::array<double, 3>>(nq));
    table.grad_curl.assign(n, std::vector<std::array<double, 9>>(nq));

    for (std::size_t i = 0; i < n; ++i) {
        const PolyVec3& v = basis.basis[i];
        const PolyVec3& cv = basis.basis_curl[i];
        std::array<Poly3, 9> gc;
        for (int k = 0; k < 3; ++k)
            for (int l = 0; l < 3; ++l) gc[std::size_t(3 * k + l)] = cv[k].differentiate(static_cast<Axis>(l));
        for (std::size_t q = 0; q < nq; ++q) {
            table.value[i][q] = v.evaluate(rule.points[q]);
            table.curl[i][q] = cv.evaluate(rule.points[q]);
            for (int k = 0; k < 9; ++k)
                table.grad_curl[i][q][std::size_t(k)] = gc[std::size_t(k)].evaluate(rule.points[q]);
        }
    }
    return table;
}

ScalarTable tabulate_scalar(const ScalarElementBasis& basis, const QuadratureRule& rule) {
    const std::size_t n = basis.size(), nq = rule.size();
    ScalarTable table;
    table.value.assign(n, std::vector<double>(nq));
    table.grad.assign(n, std::vector<std::array<double, 3>>(nq));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t q = 0; q < nq; ++q) {
            table.value[i][q] = basis.basis[i].evaluate(rule.points[q]);
            table.grad[i][q] = basis.basis_grad[i].evaluate(rule.points[q]);
        }
    return table;
}

std::string basis_to_json(const ReferenceElementBasis& basis) {
    nlohmann::json doc;
    doc["r"] = basis.r;
    nlohmann::json gens = nlohmann::json::array();
    for (const PolyVec3& g : basis.generators) {
        nlohmann::json comps = nlohmann::json::array();
        for (int c = 0; c < 3; ++c) {
            nlohmann::json terms = nlohmann::json::array();
            for (const auto& [m, coef] : g[c].terms())
                terms.push_back({{"exp", {m.a, m.b, m.c}}, {"coef", coef.get_str()}});
            comps.push_back(terms);
        }
        gens.push_back({{"comp", comps}});
    }
    doc["generators"] = gens;

    nlohmann::json dual = nlohmann::json::array();
    for (std::size_t i = 0; i < basis.dual_coeffs.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < basis.dual_coeffs.cols(); ++j)
            row.push_back(basis.dual_coeffs(i, j).get_str());
        dual.push_back(row);
    }
    doc["dual"] = dual;

    nlohmann::json dofs = nlohmann::json::array();
    for (const DofDescriptor& d : basis.dofs) {
        dofs.push_back({{"kind", d.kind == DofDescriptor::Kind::EdgeMoment ? "edge_moment"
                                                                           : "face_curl_tangential"},
                        {"entity", d.entity},
                        {"order", d.order}});
    }
    doc["dofs"] = dofs;
    return doc.dump(2);
}

}  // namespace qcfem
