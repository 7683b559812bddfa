#pragma once

#include <string>
#include <vector>

#include "apollonian/types.hpp"
#include "apollonian/weakmetric.hpp"

namespace apollonian {

struct PathSample {
    double t;
    Vec2 x;
    Vec2 v;
};

/// Samples of a curve on a uniform parameter grid. Integrated geodesics and
/// carrier segments share this representation.
struct GeodesicPath {
    std::vector<PathSample> samples;
    double step = 0.0;
    std::string method;
};

struct IntegratorConfig {
    double step = 1e-3;
    int max_steps = 1'000'000;
    // Integration stops once |x| > 1 - boundary_margin.
    double boundary_margin = 0.05;
};

/// Raised when an integrated geodesic leaves |x| <= 1 - boundary_margin.
/// Carries the samples computed up to (and excluding) the exit.
class BoundaryExitError : public Error {
public:
    BoundaryExitError(const std::string& what, GeodesicPath partial)
        : Error(what), partial_(std::move(partial))
    {
    }

    const GeodesicPath& partial_path() const { return partial_; }

private:
    GeodesicPath partial_;
};

/// Classical fourth-order Runge-Kutta on (x, v) -> (v, -2 G(x, v)) with a
/// fixed step, starting from xi0 rescaled to unit Finsler speed. The step is
/// t_end / ceil(t_end / config.step), so the grid is uniform and ends at t_end.
GeodesicPath integrate_geodesic(const DiscPoint& x0, TangentVector xi0, double t_end,
                                const IntegratorConfig& config = {});

/// Composite Simpson quadrature of F(x(t), v(t)) over the samples (3/8 rule
/// on the last three intervals when the interval count is odd).
double finsler_length(const GeodesicPath& path);

/// n + 1 samples along the hyperbolic carrier from z1 to z2 over s in [0, 1]:
/// uniform in arc angle on a circle, linear on a diameter. Endpoints are the
/// input points exactly.
GeodesicPath hyperbolic_segment(const DiscPoint& z1, const DiscPoint& z2, int n);

/// finsler_length(hyperbolic_segment(z1, z2, n)).
double distance_via_length(const DiscPoint& z1, const DiscPoint& z2, int n = 1024);

/// Largest carrier_residual over the samples.
double trajectory_residual(const GeodesicPath& path, const GeodesicArc& arc);

/// Carrier through x tangent to xi: a diameter when xi is parallel to x,
/// otherwise the circle with center x + s n, n normal to xi, and
/// s = (1 - |x|^2) / (2 <x, n>).
GeodesicArc tangent_arc(const DiscPoint& x, TangentVector xi);

/// Unit tangent of the carrier at z1, pointing along the arc towards z2.
TangentVector carrier_direction(const DiscPoint& z1, const DiscPoint& z2);

}  // namespace apollonian
