// Copyright (c) 2026 the qcfem authors
// SPDX-License-Identifier: Apache-2.0
//
// Shape spaces, degrees of freedom, and dual bases on the reference cube
// (-1,1)^3 for the 24-DOF (r=1) and 36-DOF (r=2) H(gradcurl) elements, the
// serendipity scalar element, the face-moment vector element, and the
// edge-moment curl-conforming subspace used by the jump-property machinery.

#pragma once

#include <array>
#include <string>
#include <vector>

#include "qcfem/poly.hpp"
#include "qcfem/quadrature.hpp"
#include "qcfem/rational.hpp"

namespace qcfem {

// ---------------------------------------------------------------------------
// Reference cube topology.
//
// Vertices: v = ix + 2*iy + 4*iz with coordinates (2*ix-1, 2*iy-1, 2*iz-1).
// Edges: 0..3 x-parallel, 4..7 y-parallel, 8..11 z-parallel; within a group
// the two fixed axes (in increasing axis order) run through the sign pairs
// (-,-), (+,-), (-,+), (+,+). Tangents point in the +axis direction.
// Faces: x-, x+, y-, y+, z-, z+; the two in-face tangents are the unit
// vectors of the spanning axes in increasing order.
// ---------------------------------------------------------------------------

struct RefEdge {
    int axis;
    std::array<int, 2> fixed_axes;
    std::array<int, 2> fixed_signs;  // -1 or +1
};

struct RefFace {
    int axis;
    int sign;  // -1 or +1
    std::array<int, 2> tangent_axes;
};

RefEdge ref_edge(int e);
RefFace ref_face(int f);

std::array<double, 3> embed_on_edge(int e, double t);
std::array<double, 3> embed_on_face(int f, double u, double v);

/// Exact integral of p over face f of the reference cube.
Rational face_integral(const Poly3& p, int f);
/// Exact integral of p * t^order over edge e (t = coordinate along the edge).
Rational edge_integral(const Poly3& p, int e, int order);

// ---------------------------------------------------------------------------
// Degrees of freedom.
// ---------------------------------------------------------------------------

struct DofDescriptor {
    enum class Kind { EdgeMoment, FaceCurlTangential };
    Kind kind;
    int entity;  // local edge 0..11 or local face 0..5
    int order;   // edge moment order q in 0..r-1, or face tangent index 0/1
};

/// Exact application of an edge/face DOF to a polynomial field on the cube.
Rational apply_dof(const DofDescriptor& d, const PolyVec3& v);

// ---------------------------------------------------------------------------
// Shape spaces.
// ---------------------------------------------------------------------------

/// Monomial basis of the serendipity space of order r (superlinear degree
/// at most r): 8 monomials for r=1, 20 for r=2.
std::vector<Poly3> serendipity_monomials(int r);

/// Superlinear degree of a monomial: total degree ignoring variables that
/// enter linearly.
int superlinear_degree(const Monomial& m);

/// The 18 generators of the face-moment vector space: the 12 monomial
/// fields of [P1]^3 followed by the 6 quadratic fields.
std::vector<PolyVec3> w_space_generators();

/// Generators of the H(gradcurl) shape space: gradients of the non-constant
/// serendipity monomials plus Poincare images of 17 of the 18 face-moment
/// generators. The image of (0,0,z) is dropped: the Poincare operator kills
/// radial fields, so p(x,0,0) + p(0,y,0) + p(0,0,z) = 0 is the single
/// dependency among the 18 images. Throws if the result is rank-deficient.
std::vector<PolyVec3> build_generators(int r);

/// Generators of the curl-conforming (edge-moment) subspace
/// grad S^r + p[Q_{1,0,0} x Q_{0,1,0} x Q_{0,0,1}]: dimension 12 (r=1), 24 (r=2).
std::vector<PolyVec3> nedelec_generators(int r);

// ---------------------------------------------------------------------------
// Dual bases.
// ---------------------------------------------------------------------------

struct ReferenceElementBasis {
    int r = 1;
    std::vector<PolyVec3> generators;
    RationalMatrix dual_coeffs;  // C with G*C = I, G_ij = dof_i(generator_j)
    std::vector<DofDescriptor> dofs;
    std::vector<PolyVec3> basis;       // dual basis functions N_i
    std::vector<PolyVec3> basis_curl;  // curl N_i
    double condition = 0.0;            // inf-norm condition estimate of G

    std::size_t size() const { return basis.size(); }
};

/// Dual basis of the 24/36-DOF element. Throws if the DOF matrix is
/// singular, which would signal an orientation or numbering bug.
ReferenceElementBasis build_dual_basis(int r);

/// Dual basis of the edge-moment subspace (12r edge DOFs).
ReferenceElementBasis build_nedelec_dual_basis(int r);

/// Scalar serendipity element: DOFs are the 8 vertex values followed by the
/// 12 edge integrals for r=2.
struct ScalarElementBasis {
    int r = 1;
    std::vector<Poly3> basis;
    std::vector<PolyVec3> basis_grad;
    std::size_t size() const { return basis.size(); }
};
ScalarElementBasis build_serendipity_basis(int r);

/// Face-moment vector element: 18 DOFs, dof index = 3*face + component.
struct WElementBasis {
    std::vector<PolyVec3> basis;
    std::vector<Poly3> basis_div;
    std::size_t size() const { return basis.size(); }
};
WElementBasis build_w_basis();

// ---------------------------------------------------------------------------
// Tabulation.
// ---------------------------------------------------------------------------

/// Values, curls, and curl gradients of every dual basis function at every
/// point of a cell rule. grad_curl is row-major: entry 3*k+l holds
/// d(curl v)_k / d x_l.
struct ReferenceTable {
    std::vector<std::vector<std::array<double, 3>>> value;
    std::vector<std::vector<std::array<double, 3>>> curl;
    std::vector<std::vector<std::array<double, 9>>> grad_curl;

    std::size_t basis_count() const { return value.size(); }
};

ReferenceTable tabulate(const ReferenceElementBasis& basis, const QuadratureRule& rule);

struct ScalarTable {
    std::vector<std::vector<double>> value;
    std::vector<std::vector<std::array<double, 3>>> grad;
};

ScalarTable tabulate_scalar(const ScalarElementBasis& basis, const QuadratureRule& rule);

/// JSON document with generator exponents, exact dual coefficients as
/// "num/den" strings, and DOF descriptors.
std::string basis_to_json(const ReferenceElementBasis& basis);

}  // namespace qcfem
