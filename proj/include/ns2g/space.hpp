#pragma once

#include <array>
#include <vector>

#include "ns2g/mesh.hpp"
#include "ns2g/types.hpp"

namespace ns2g {

/// Values and reference-coordinate gradients of the six P2 Lagrange basis
/// functions. Order: three vertex functions, then the three edge-midpoint
/// functions (edge k opposite vertex k). Reference coordinates are
/// (xi, eta) = (lambda1, lambda2).
struct P2Basis {
    std::array<double, 6> value;
    std::array<Vec2, 6> grad_ref;
};

P2Basis p2_basis(const std::array<double, 3>& lambda);

/// Numbering of P2 velocity and P0 pressure unknowns. Velocity nodes are
/// vertices first, then edge midpoints; x-component dofs come before all
/// y-component dofs.
struct DofMap {
    int n_vertices = 0;
    int n_edges = 0;
    int n_cells = 0;
    int n_velocity_nodes = 0;
    int n_velocity_dofs = 0;
    int n_pressure_dofs = 0;
    std::vector<unsigned char> node_on_boundary;
    std::vector<int> boundary_velocity_dofs;  // sorted
    std::vector<int> interior_velocity_dofs;  // sorted
    std::vector<int> interior_index;          // full dof -> interior index, -1 on boundary

    int n_interior_velocity_dofs() const { return int(interior_velocity_dofs.size()); }
    int dof_x(int node) const { return node; }
    int dof_y(int node) const { return n_velocity_nodes + node; }
};

DofMap build_dof_map(const Mesh& mesh);

/// Scalar node indices of a cell: vertices then edge nodes, matching the
/// p2_basis ordering.
std::array<int, 6> cell_nodes(const Mesh& mesh, int cell);

/// Physical position of a velocity node (vertex or edge midpoint).
Vec2 node_position(const Mesh& mesh, int node);

enum class SpaceTag { VelocityP2, PressureP0 };

/// Coefficient vector bound to a (Mesh, DofMap) pair. The mesh and dof map
/// must outlive the function.
struct FeFunction {
    SpaceTag tag = SpaceTag::VelocityP2;
    const Mesh* mesh = nullptr;
    const DofMap* dofs = nullptr;
    std::vector<double> coeffs;
};

FeFunction make_velocity_function(const Mesh& mesh, const DofMap& dofs);
FeFunction make_pressure_function(const Mesh& mesh, const DofMap& dofs);

// Cell-local evaluation (exact, no point location).
Vec2 velocity_value_local(const FeFunction& f, int cell, const std::array<double, 3>& lambda);
Mat2 velocity_gradient_local(const FeFunction& f, int cell, const std::array<double, 3>& lambda);

// Evaluation at arbitrary physical points (locates the cell first).
Vec2 velocity_value(const FeFunction& f, Vec2 p);
Mat2 velocity_gradient(const FeFunction& f, Vec2 p);
double pressure_value(const FeFunction& f, Vec2 p);

/// Area-weighted mean of a P0 pressure function.
double pressure_mean(const FeFunction& f);

/// Nodal interpolation of a velocity field u(p) -> Vec2.
template <typename F>
FeFunction interpolate_velocity(const Mesh& mesh, const DofMap& dofs, F&& u) {
    FeFunction f = make_velocity_function(mesh, dofs);
    for (int node = 0; node < dofs.n_velocity_nodes; ++node) {
        const Vec2 v = u(node_position(mesh, node));
        f.coeffs[dofs.dof_x(node)] = v.x;
        f.coeffs[dofs.dof_y(node)] = v.y;
    }
    return f;
}

/// Cell-centroid interpolation of a scalar field into P0.
template <typename F>
FeFunction interpolate_pressure(const Mesh& mesh, const DofMap& dofs, F&& p) {
    FeFunction f = make_pressure_function(mesh, dofs);
    for (int c = 0; c < dofs.n_cells; ++c) {
        const std::array<double, 3> centroid = {1.0 / 3, 1.0 / 3, 1.0 / 3};
        f.coeffs[c] = p(mesh.point_from_barycentric(c, centroid));
    }
    return f;
}

}  // namespace ns2g
