// Copyright (c) 2026 the qcfem authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <vector>

namespace qcfem {

enum class QuadDomain { Edge, Face, Cell };

/// Tensor Gauss-Legendre rule on (-1,1)^dim. Points are stored as 3-tuples
/// with trailing coordinates zero for lower-dimensional domains; entity
/// embeddings are handled by the reference-element topology.
struct QuadratureRule {
    QuadDomain domain = QuadDomain::Cell;
    std::vector<std::array<double, 3>> points;
    std::vector<double> weights;

    std::size_t size() const { return points.size(); }
};

/// Nodes/weights of the n-point Gauss-Legendre rule on (-1,1).
/// Exact for polynomials of degree <= 2n-1.
void gauss_legendre_1d(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// Tensor rule with n points per direction on the reference domain.
QuadratureRule gauss_rule(int n, QuadDomain domain);

}  // namespace qcfem
