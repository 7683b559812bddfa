#pragma once

#include <utility>

#include "apollonian/types.hpp"

namespace apollonian {

/// Zermelo navigation data (h, W) of the Apollonian structure.
struct ZermeloData {
    Mat2 h;               // h_ij = (delta_ij - x^i x^j) / (1 - |x|^2)
    Vec2 w;               // W^i = -x^i
    double lambda;        // 1 - ||W||_h^2
    double wind_norm_sq;  // h_ij W^i W^j
};

/// Point of the upper sheet x1^2 + x2^2 - x3^2 = -1, x3 > 0.
struct HyperboloidPoint {
    double x1;
    double x2;
    double x3;

    Vec3 vec() const { return {x1, x2, x3}; }
};

/// x1 y1 + x2 y2 - x3 y3.
double lorentz_inner(const Vec3& a, const Vec3& b);

ZermeloData zermelo_data(const DiscPoint& x);

/// Inverse navigation map: F = (sqrt(lambda h(xi,xi) + <W,xi>_h^2) - <W,xi>_h) / lambda.
/// Throws DegenerateInputError when lambda <= 0.
double zermelo_reconstruct(const ZermeloData& data, TangentVector xi);

/// pi(x) = (2x / (1 - |x|^2), (1 + |x|^2) / (1 - |x|^2)).
HyperboloidPoint hyperboloid_map(const DiscPoint& x);

/// d(pi)_x applied to xi, from the hand-derived Jacobian.
Vec3 hyperboloid_pushforward(const DiscPoint& x, TangentVector xi);

/// Central-difference Jacobian of hyperboloid_map applied to xi; the
/// independent check of hyperboloid_pushforward.
Vec3 hyperboloid_pushforward_numeric(const DiscPoint& x, TangentVector xi, double step = 1e-6);

/// alpha_L(v) + beta_L(v) = sqrt(v1^2 + v2^2 - v3^2) + v3 / (1 + p3).
/// Throws ImaginaryNormError on timelike v.
double lorentz_randers_value(const HyperboloidPoint& p, const Vec3& v);

/// (pi^* F_L (x, xi), 2 F(x, xi)). The pullback equals twice the
/// Apollonian norm; the factor is global.
std::pair<double, double> pullback_check(const DiscPoint& x, TangentVector xi);

}  // namespace apollonian
