#include "ns2g/space.hpp"

#include <stdexcept>

namespace ns2g {

P2Basis p2_basis(const std::array<double, 3>& lambda) {
    const double l0 = lambda[0], l1 = lambda[1], l2 = lambda[2];
    P2Basis b;
    b.value[0] = l0 * (2.0 * l0 - 1.0);
    b.value[1] = l1 * (2.0 * l1 - 1.0);
    b.value[2] = l2 * (2.0 * l2 - 1.0);
    b.value[3] = 4.0 * l1 * l2;  // edge opposite vertex 0
    b.value[4] = 4.0 * l0 * l2;  // edge opposite vertex 1
    b.value[5] = 4.0 * l0 * l1;  // edge opposite vertex 2

    // d/d(xi) and d/d(eta) with lambda0 = 1 - xi - eta, lambda1 = xi, lambda2 = eta.
    b.grad_ref[0] = {-(4.0 * l0 - 1.0), -(4.0 * l0 - 1.0)};
    b.grad_ref[1] = {4.0 * l1 - 1.0, 0.0};
    b.grad_ref[2] = {0.0, 4.0 * l2 - 1.0};
    b.grad_ref[3] = {4.0 * l2, 4.0 * l1};
    b.grad_ref[4] = {-4.0 * l2, 4.0 * (l0 - l2)};
    b.grad_ref[5] = {4.0 * (l0 - l1), -4.0 * l1};
    return b;
}

DofMap build_dof_map(const Mesh& mesh) {
    DofMap d;
    d.n_vertices = int(mesh.vertices.size());
    d.n_edges = int(mesh.edges.size());
    d.n_cells = int(mesh.cells.size());
    d.n_velocity_nodes = d.n_vertices + d.n_edges;
    d.n_velocity_dofs = 2 * d.n_velocity_nodes;
    d.n_pressure_dofs = d.n_cells;

    d.node_on_boundary.assign(d.n_velocity_nodes, 0);
    const int n = mesh.n;
    for (int v = 0; v < d.n_vertices; ++v) {
        const int i = v % (n + 1), j = v / (n + 1);
        if (i == 0 || i == n || j == 0 || j == n) d.node_on_boundary[v] = 1;
    }
    for (int e = 0; e < d.n_edges; ++e)
        if (mesh.edges[e].on_boundary()) d.node_on_boundary[d.n_vertices + e] = 1;

    d.interior_index.assign(d.n_velocity_dofs, -1);
    for (int dof = 0; dof < d.n_velocity_dofs; ++dof) {
        const int node = dof % d.n_velocity_nodes;
        if (d.node_on_boundary[node]) {
            d.boundary_velocity_dofs.push_back(dof);
        } else {
            d.interior_index[dof] = int(d.interior_velocity_dofs.size());
            d.interior_velocity_dofs.push_back(dof);
        }
    }
    return d;
}

std::array<int, 6> cell_nodes(const Mesh& mesh, int cell) {
    const int nv = int(mesh.vertices.size());
    const auto& cv = mesh.cells[cell];
    const auto& ce = mesh.cell_edges[cell];
    return {cv[0], cv[1], cv[2], nv + ce[0], nv + ce[1], nv + ce[2]};
}

Vec2 node_position(const Mesh& mesh, int node) {
    const int nv = int(mesh.vertices.size());
    if (node < nv) return mesh.vertices[node];
    const Edge& e = mesh.edges[node - nv];
    return 0.5 * (mesh.vertices[e.v0] + mesh.vertices[e.v1]);
}

FeFunction make_velocity_function(const Mesh& mesh, const DofMap& dofs) {
    FeFunction f;
    f.tag = SpaceTag::VelocityP2;
    f.mesh = &mesh;
    f.dofs = &dofs;
    f.coeffs.assign(dofs.n_velocity_dofs, 0.0);
    return f;
}

FeFunction make_pressure_function(const Mesh& mesh, const DofMap& dofs) {
    FeFunction f;
    f.tag = SpaceTag::PressureP0;
    f.mesh = &mesh;
    f.dofs = &dofs;
    f.coeffs.assign(dofs.n_pressure_dofs, 0.0);
    return f;
}

Vec2 velocity_value_local(const FeFunction& f, int cell, const std::array<double, 3>& lambda) {
    const P2Basis basis = p2_basis(lambda);
    const std::array<int, 6> nodes = cell_nodes(*f.mesh, cell);
    Vec2 v;
    for (int k = 0; k < 6; ++k) {
        v.x += basis.value[k] * f.coeffs[f.dofs->dof_x(nodes[k])];
        v.y += basis.value[k] * f.coeffs[f.dofs->dof_y(nodes[k])];
    }
    return v;
}

Mat2 velocity_gradient_local(const FeFunction& f, int cell, const std::array<double, 3>& lambda) {
    const P2Basis basis = p2_basis(lambda);
    const CellGeometry g = f.mesh->cell_geometry(cell);
    const std::array<int, 6> nodes = cell_nodes(*f.mesh, cell);
    Mat2 grad = {{{0.0, 0.0}, {0.0, 0.0}}};
    for (int k = 0; k < 6; ++k) {
        const Vec2 gr = basis.grad_ref[k];
        const Vec2 gp = {g.inv_jacobian_t[0][0] * gr.x + g.inv_jacobian_t[0][1] * gr.y,
                         g.inv_jacobian_t[1][0] * gr.x + g.inv_jacobian_t[1][1] * gr.y};
        const double cx = f.coeffs[f.dofs->dof_x(nodes[k])];
        const double cy = f.coeffs[f.dofs->dof_y(nodes[k])];
        grad[0][0] += cx * gp.x;
        grad[0][1] += cx * gp.y;
        grad[1][0] += cy * gp.x;
        grad[1][1] += cy * gp.y;
    }
    return grad;
}

Vec2 velocity_value(const FeFunction& f, Vec2 p) {
    const PointLocation loc = locate_point(*f.mesh, p);
    return velocity_value_local(f, loc.cell, loc.barycentric);
}

Mat2 velocity_gradient(const FeFunction& f, Vec2 p) {
    const PointLocation loc = locate_point(*f.mesh, p);
    return velocity_gradient_local(f, loc.cell, loc.barycentric);
}

double pressure_value(const FeFunction& f, Vec2 p) {
    const PointLocation loc = locate_point(*f.mesh, p);
    return f.coeffs[loc.cell];
}

double pressure_mean(const FeFunction& f) {
    double mean = 0.0;
    for (int c = 0; c < int(f.coeffs.size()); ++c)
        mean += f.coeffs[c] * f.mesh->signed_area(c);
    return mean;  // total area is 1
}

}  // namespace ns2g
