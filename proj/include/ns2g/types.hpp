#pragma once

#include <array>
#include <stdexcept>

namespace ns2g {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

/// Row-major 2x2 matrix; as a gradient, m[i][j] = d(component i)/d(x_j).
using Mat2 = std::array<std::array<double, 2>, 2>;

inline Mat2 operator-(const Mat2& a, const Mat2& b) {
    return {{{a[0][0] - b[0][0], a[0][1] - b[0][1]},
             {a[1][0] - b[1][0], a[1][1] - b[1][1]}}};
}

/// Invalid user-facing configuration (CLI exit code 2).
class ConfigError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Numerical failure inside a solve (CLI exit code 3).
class SolverError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ns2g
