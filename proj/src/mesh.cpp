#include "ns2g/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace ns2g {

CellGeometry Mesh::cell_geometry(int cell) const {
    const auto& c = cells[cell];
    const Vec2 a = vertices[c[0]];
    const Vec2 e1 = vertices[c[1]] - a;
    const Vec2 e2 = vertices[c[2]] - a;
    const double det = e1.x * e2.y - e1.y * e2.x;
    CellGeometry g;
    g.origin = a;
    g.jacobian = {{{e1.x, e2.x}, {e1.y, e2.y}}};
    g.inv_jacobian_t = {{{e2.y / det, -e1.y / det}, {-e2.x / det, e1.x / det}}};
    g.area = 0.5 * det;
    return g;
}

double Mesh::signed_area(int cell) const {
    const auto& c = cells[cell];
    const Vec2 e1 = vertices[c[1]] - vertices[c[0]];
    const Vec2 e2 = vertices[c[2]] - vertices[c[0]];
    return 0.5 * (e1.x * e2.y - e1.y * e2.x);
}

Vec2 Mesh::point_from_barycentric(int cell, const std::array<double, 3>& lambda) const {
    const auto& c = cells[cell];
    const Vec2 a = vertices[c[0]], b = vertices[c[1]], d = vertices[c[2]];
    return {lambda[0] * a.x + lambda[1] * b.x + lambda[2] * d.x,
            lambda[0] * a.y + lambda[1] * b.y + lambda[2] * d.y};
}

Mesh build_structured_mesh(int n) {
    if (n < 1) throw std::invalid_argument("mesh subdivisions must be >= 1");

    Mesh mesh;
    mesh.n = n;
    mesh.h = std::sqrt(2.0) / n;

    const int np = n + 1;
    mesh.vertices.reserve(np * np);
    for (int j = 0; j < np; ++j)
        for (int i = 0; i < np; ++i)
            mesh.vertices.push_back({double(i) / n, double(j) / n});

    auto vid = [np](int i, int j) { return j * np + i; };

    mesh.cells.reserve(2 * n * n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            const int v00 = vid(i, j), v10 = vid(i + 1, j);
            const int v11 = vid(i + 1, j + 1), v01 = vid(i, j + 1);
            mesh.cells.push_back({v00, v10, v11});  // lower triangle
            mesh.cells.push_back({v00, v11, v01});  // upper triangle
        }
    }

    // Edge numbering: scan cells in order, local edge k opposite vertex k,
    // storing each undirected pair once with the lower vertex first.
    std::map<std::pair<int, int>, int> edge_index;
    mesh.cell_edges.resize(mesh.cells.size());
    for (int c = 0; c < int(mesh.cells.size()); ++c) {
        const auto& cv = mesh.cells[c];
        for (int k = 0; k < 3; ++k) {
            const int a = cv[(k + 1) % 3], b = cv[(k + 2) % 3];
            const std::pair<int, int> key{std::min(a, b), std::max(a, b)};
            auto it = edge_index.find(key);
            if (it == edge_index.end()) {
                const int e = int(mesh.edges.size());
                mesh.edges.push_back({key.first, key.second, {c, -1}});
                edge_index.emplace(key, e);
                mesh.cell_edges[c][k] = e;
            } else {
                mesh.edges[it->second].cells[1] = c;
                mesh.cell_edges[c][k] = it->second;
            }
        }
    }
    return mesh;
}

PointLocation locate_point(const Mesh& mesh, Vec2 p) {
    if (p.x < 0.0 || p.x > 1.0 || p.y < 0.0 || p.y > 1.0)
        throw std::domain_error("point outside the closed unit square");

    const int n = mesh.n;
    // Scaled coordinates; points exactly on an interior grid line are pushed
    // to the lower square so that ties resolve to the lowest cell index.
    auto square_of = [n](double v) {
        double s = v * n;
        int i = int(std::floor(s));
        if (i >= n) i = n - 1;
        if (double(i) == s && i > 0) --i;
        return i;
    };
    const int i = square_of(p.x);
    const int j = square_of(p.y);
    const double s = p.x * n - i;
    const double t = p.y * n - j;

    PointLocation loc;
    if (t <= s) {
        // lower triangle (0,0)-(1,0)-(1,1): lambda = (1-s, s-t, t)
        loc.cell = 2 * (j * n + i);
        loc.barycentric = {1.0 - s, s - t, t};
    } else {
        // upper triangle (0,0)-(1,1)-(0,1): lambda = (1-t, s, t-s)
        loc.cell = 2 * (j * n + i) + 1;
        loc.barycentric = {1.0 - t, s, t - s};
    }
    return loc;
}

}  // namespace ns2g
