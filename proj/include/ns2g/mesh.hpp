#pragma once

#include <array>
#include <vector>

#include "ns2g/types.hpp"

namespace ns2g {

/// Undirected mesh edge; v0 < v1. cells[1] == -1 for boundary edges.
struct Edge {
    int v0 = -1;
    int v1 = -1;
    std::array<int, 2> cells = {-1, -1};

    bool on_boundary() const { return cells[1] < 0; }
};

/// Per-cell affine map data: x = origin + J * (xi, eta).
struct CellGeometry {
    Vec2 origin;
    Mat2 jacobian;        // columns are the two edge vectors from vertex 0
    Mat2 inv_jacobian_t;  // maps reference gradients to physical gradients
    double area = 0.0;
};

/// Structured triangulation of the unit square: n x n squares, each split
/// along the lower-left to upper-right diagonal. Immutable once built.
struct Mesh {
    int n = 0;
    std::vector<Vec2> vertices;
    std::vector<std::array<int, 3>> cells;       // counterclockwise vertex indices
    std::vector<Edge> edges;
    std::vector<std::array<int, 3>> cell_edges;  // edge k is opposite local vertex k
    double h = 0.0;                              // max cell diameter

    CellGeometry cell_geometry(int cell) const;
    double signed_area(int cell) const;
    Vec2 point_from_barycentric(int cell, const std::array<double, 3>& lambda) const;
};

/// Builds the structured mesh with n subdivisions per side. Throws
/// std::invalid_argument for n < 1.
Mesh build_structured_mesh(int n);

struct PointLocation {
    int cell = -1;
    std::array<double, 3> barycentric = {0.0, 0.0, 0.0};
};

/// O(1) point location. Points on shared edges/vertices go to the
/// lowest-indexed containing cell. Throws std::domain_error for points
/// outside the closed unit square.
PointLocation locate_point(const Mesh& mesh, Vec2 p);

}  // namespace ns2g
