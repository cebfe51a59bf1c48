#pragma once

#include <array>
#include <vector>

namespace ns2g {

/// Quadrature rule on the reference triangle, in barycentric coordinates.
/// Weights are positive and sum to the reference area 1/2.
struct QuadratureRule {
    std::vector<std::array<double, 3>> points;
    std::vector<double> weights;
    int exactness_degree = 0;
};

/// Supported degrees: 2 (3 points), 5 (7 points), 7 (16 points).
/// Throws std::invalid_argument otherwise.
const QuadratureRule& quadrature_rule(int degree);

}  // namespace ns2g
