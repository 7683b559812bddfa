#include "apollonian/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "apollonian/calculus.hpp"
#include "apollonian/finsler.hpp"

namespace apollonian {

namespace {

struct State {
    Vec2 x;
    Vec2 v;
};

State operator+(const State& a, const State& b) { return {a.x + b.x, a.v + b.v}; }
State operator*(double s, const State& a) { return {s * a.x, s * a.v}; }

// Geodesic flow: x' = v, v' = -2 G(x, v).
State flow(const State& s)
{
    const SprayCoefficients g = spray_closed(DiscPoint(s.x), s.v);
    return {s.v, -2.0 * g.g_spray};
}

double simpson(const std::vector<double>& values, double h)
{
    const std::size_t intervals = values.size() - 1;
    if (intervals == 1) {
        return 0.5 * h * (values[0] + values[1]);
    }
    std::size_t simpson_end = intervals % 2 == 0 ? intervals : intervals - 3;
    double sum = 0.0;
    for (std::size_t k = 0; k + 2 <= simpson_end; k += 2) {
        sum += h / 3.0 * (values[k] + 4.0 * values[k + 1] + values[k + 2]);
    }
    if (simpson_end != intervals) {
        const std::size_t k = simpson_end;
        sum += 3.0 * h / 8.0 * (values[k] + 3.0 * values[k + 1] + 3.0 * values[k + 2] + values[k + 3]);
    }
    return sum;
}

}  // namespace

GeodesicPath integrate_geodesic(const DiscPoint& x0, TangentVector xi0, double t_end, const IntegratorConfig& config)
{
    detail::require_nonzero(xi0, "integrate_geodesic");
    if (!(t_end > 0.0)) {
        throw std::invalid_argument("integrate_geodesic: t_end must be positive");
    }
    if (!(config.step > 0.0) || config.max_steps <= 0 || !(config.boundary_margin >= 0.01 && config.boundary_margin < 1.0)) {
        throw std::invalid_argument("integrate_geodesic: invalid integrator configuration");
    }
    const double steps_real = std::ceil(t_end / config.step - 1e-9);
    if (steps_real > config.max_steps) {
        throw std::invalid_argument("integrate_geodesic: t_end / step exceeds max_steps");
    }
    const int steps = std::max(1, static_cast<int>(steps_real));
    const double h = t_end / steps;
    const double limit = 1.0 - config.boundary_margin;

    GeodesicPath path;
    path.step = h;
    path.method = "rk4";
    path.samples.reserve(static_cast<std::size_t>(steps) + 1);

    State s{x0.vec(), xi0 / finsler_norm(x0, xi0)};
    path.samples.push_back({0.0, s.x, s.v});
    for (int n = 1; n <= steps; ++n) {
        State next;
        try {
            const State k1 = flow(s);
            const State k2 = flow(s + (0.5 * h) * k1);
            const State k3 = flow(s + (0.5 * h) * k2);
            const State k4 = flow(s + h * k3);
            next = s + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        } catch (const DomainError&) {
            next.x = {1.0, 0.0};  // a stage left the disc; reported as an exit below
        }
        if (!(norm(next.x) <= limit)) {
            throw BoundaryExitError("geodesic reached the boundary margin at t = " + std::to_string(n * h),
                                    std::move(path));
        }
        s = next;
        path.samples.push_back({n * h, s.x, s.v});
    }
    return path;
}

double finsler_length(const GeodesicPath& path)
{
    const auto& samples = path.samples;
    if (samples.size() < 2) {
        throw std::invalid_argument("finsler_length: need at least two samples");
    }
    const double h = samples[1].t - samples[0].t;
    std::vector<double> integrand;
    integrand.reserve(samples.size());
    for (std::size_t k = 0; k < samples.size(); ++k) {
        if (k > 0 && std::abs((samples[k].t - samples[k - 1].t) - h) > 1e-9 * std::max(1.0, std::abs(h))) {
            throw std::invalid_argument("finsler_length: samples are not uniformly spaced");
        }
        integrand.push_back(finsler_norm(DiscPoint(samples[k].x), samples[k].v));
    }
    return simpson(integrand, h);
}

GeodesicPath hyperbolic_segment(const DiscPoint& z1, const DiscPoint& z2, int n)
{
    if (n < 16) {
        throw std::invalid_argument("hyperbolic_segment: n must be at least 16");
    }
    const GeodesicArc arc = geodesic_arc(z1, z2);
    GeodesicPath path;
    path.step = 1.0 / n;
    path.method = "carrier";
    path.samples.reserve(static_cast<std::size_t>(n) + 1);

    if (std::holds_alternative<Diameter>(arc)) {
        const Vec2 chord = z2.vec() - z1.vec();
        for (int k = 0; k <= n; ++k) {
            const double s = static_cast<double>(k) / n;
            path.samples.push_back({s, z1.vec() + s * chord, chord});
        }
    } else {
        const auto& circle = std::get<OrthoCircle>(arc);
        const Vec2 u1 = z1.vec() - circle.center;
        const Vec2 u2 = z2.vec() - circle.center;
        const double theta1 = std::atan2(u1.y, u1.x);
        const double sweep = std::remainder(std::atan2(u2.y, u2.x) - theta1, 2.0 * std::numbers::pi);
        for (int k = 0; k <= n; ++k) {
            const double s = static_cast<double>(k) / n;
            const double theta = theta1 + s * sweep;
            const Vec2 radial{std::cos(theta), std::sin(theta)};
            path.samples.push_back({s, circle.center + circle.radius * radial, circle.radius * sweep * perp(radial)});
        }
    }
    path.samples.front().x = z1.vec();
    path.samples.back().x = z2.vec();
    return path;
}

double distance_via_length(const DiscPoint& z1, const DiscPoint& z2, int n)
{
    if (n < 64) {
        throw std::invalid_argument("distance_via_length: n must be at least 64");
    }
    return finsler_length(hyperbolic_segment(z1, z2, n));
}

double trajectory_residual(const GeodesicPath& path, const GeodesicArc& arc)
{
    double worst = 0.0;
    for (const PathSample& sample : path.samples) {
        worst = std::max(worst, carrier_residual(arc, sample.x));
    }
    return worst;
}

GeodesicArc tangent_arc(const DiscPoint& x, TangentVector xi)
{
    detail::require_nonzero(xi, "tangent_arc");
    const Vec2 p = x.vec();
    const double len = norm(xi);
    if (std::abs(cross(p, xi)) <= 1e-12 * std::max(norm(p) * len, 1e-30)) {
        return Diameter{xi / len};
    }
    const Vec2 normal = perp(xi) / len;
    const double offset = x.gap() / (2.0 * dot(p, normal));
    return OrthoCircle{p + offset * normal, std::abs(offset)};
}

TangentVector carrier_direction(const DiscPoint& z1, const DiscPoint& z2)
{
    const GeodesicArc arc = geodesic_arc(z1, z2);
    if (const auto* diameter = std::get_if<Diameter>(&arc)) {
        return diameter->direction;
    }
    const auto& circle = std::get<OrthoCircle>(arc);
    Vec2 tangent = perp(z1.vec() - circle.center);
    tangent = tangent / norm(tangent);
    return dot(tangent, z2.vec() - z1.vec()) < 0.0 ? -tangent : tangent;
}

}  // namespace apollonian
