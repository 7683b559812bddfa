#include "apollonian/weakmetric.hpp"

#include <algorithm>
#include <complex>
#include <numbers>

namespace apollonian {

namespace {

using cplx = std::complex<double>;

cplx as_complex(const DiscPoint& z) { return {z.x1(), z.x2()}; }
Vec2 as_vec(cplx z) { return {z.real(), z.imag()}; }

void require_distinct(const DiscPoint& z1, const DiscPoint& z2, const char* what)
{
    if (z1 == z2) {
        throw DegenerateInputError(std::string(what) + " needs two distinct points");
    }
}

double wrap_angle(double t)
{
    constexpr double two_pi = 2.0 * std::numbers::pi;
    t = std::remainder(t, two_pi);
    return t <= -std::numbers::pi ? t + two_pi : t;
}

// Exit point of the hyperbolic ray from z1 through z2 (non-diametral case).
// Equal to (1 + s i R) / conj(rho) where s picks the maximiser of f.
cplx ray_exit(cplx z1, cplx z2)
{
    const cplx num = z1 * std::conj(z2) - z2 * std::conj(z1)
                     + std::abs(z2 - z1) * std::abs(1.0 - z1 * std::conj(z2));
    const cplx den = (std::conj(z2) - std::conj(z1)) - std::conj(z2) * std::conj(z1) * (z2 - z1);
    const cplx a = num / den;
    return a / std::abs(a);
}

}  // namespace

double apollonian_distance(const DiscPoint& z1, const DiscPoint& z2)
{
    if (z1 == z2) {
        return 0.0;
    }
    const cplx a = as_complex(z1);
    const cplx b = as_complex(z2);
    const double ratio = (std::abs(a - b) + std::abs(a * std::conj(b) - 1.0)) / z2.gap();
    return std::max(0.0, std::log(ratio));
}

double boundary_objective(const DiscPoint& z1, const DiscPoint& z2, double t)
{
    const cplx e = std::polar(1.0, t);
    return std::norm(as_complex(z1) - e) / std::norm(as_complex(z2) - e);
}

double boundary_objective_slope(const DiscPoint& z1, const DiscPoint& z2, double t)
{
    const cplx e = std::polar(1.0, t);
    const cplx a = as_complex(z1);
    const cplx b = as_complex(z2);
    const double num = std::norm(a - e);
    const double den = std::norm(b - e);
    // d/dt |z - e^{it}|^2 = -2 Im(z e^{-it})
    const double num_dt = -2.0 * (a * std::conj(e)).imag();
    const double den_dt = -2.0 * (b * std::conj(e)).imag();
    return (num_dt * den - num * den_dt) / (den * den);
}

BruteForceSupremum brute_force_supremum(const DiscPoint& z1, const DiscPoint& z2, int n_coarse)
{
    require_distinct(z1, z2, "brute_force_supremum");
    if (n_coarse < 64) {
        throw std::invalid_argument("brute_force_supremum: n_coarse must be at least 64");
    }
    const double pi = std::numbers::pi;
    const double dt = 2.0 * pi / n_coarse;
    auto f = [&](double t) { return boundary_objective(z1, z2, t); };

    int best = 0;
    double best_value = f(-pi);
    for (int k = 1; k < n_coarse; ++k) {
        const double v = f(-pi + k * dt);
        if (v > best_value) {
            best_value = v;
            best = k;
        }
    }

    // Golden-section search on [t_best - dt, t_best + dt].
    const double t_best = -pi + best * dt;
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = t_best - dt;
    double hi = t_best + dt;
    double c = hi - inv_phi * (hi - lo);
    double d = lo + inv_phi * (hi - lo);
    double fc = f(c);
    double fd = f(d);
    while (hi - lo > 1e-12) {
        if (fc > fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = f(d);
        }
    }
    double t_star = 0.5 * (lo + hi);

    // Near the maximum f is flat to O(dt^2), so value comparisons stall at
    // roughly sqrt(eps) in angle. The slope changes sign cleanly there.
    auto slope = [&](double t) { return boundary_objective_slope(z1, z2, t); };
    for (double half_width : {1e-6, dt}) {
        double a = t_star - half_width;
        double b = t_star + half_width;
        if (slope(a) > 0.0 && slope(b) < 0.0) {
            for (int it = 0; it < 200 && b - a > 0.0; ++it) {
                const double mid = 0.5 * (a + b);
                if (mid <= a || mid >= b) {
                    break;
                }
                (slope(mid) > 0.0 ? a : b) = mid;
            }
            t_star = 0.5 * (a + b);
            break;
        }
    }

    return {std::sqrt(f(t_star)), wrap_angle(t_star)};
}

bool is_diametral(const DiscPoint& z1, const DiscPoint& z2)
{
    const double scale = std::max(std::sqrt(z1.norm_sq() * z2.norm_sq()), 1e-30);
    return std::abs(cross(z1.vec(), z2.vec())) <= 1e-12 * scale;
}

GeodesicArc geodesic_arc(const DiscPoint& z1, const DiscPoint& z2)
{
    require_distinct(z1, z2, "geodesic_arc");
    if (is_diametral(z1, z2)) {
        const Vec2 d = z2.vec() - z1.vec();
        return Diameter{d / norm(d)};
    }
    const cplx a = as_complex(z1);
    const cplx b = as_complex(z2);
    const cplx rho1 = std::conj(a) * b - std::conj(b) * a;
    const cplx rho2 = b * (1.0 - a * std::conj(b)) - a * (1.0 - std::conj(a) * b);
    const cplx center = rho2 / rho1;
    return OrthoCircle{as_vec(center), std::sqrt(std::norm(center) - 1.0)};
}

SupremumResult supremum_points(const DiscPoint& z1, const DiscPoint& z2)
{
    require_distinct(z1, z2, "supremum_points");
    GeodesicArc arc = geodesic_arc(z1, z2);
    Vec2 plus;
    Vec2 minus;
    if (const auto* diameter = std::get_if<Diameter>(&arc)) {
        plus = diameter->direction;
        minus = -diameter->direction;
    } else {
        plus = as_vec(ray_exit(as_complex(z1), as_complex(z2)));
        minus = as_vec(ray_exit(as_complex(z2), as_complex(z1)));
    }
    return {BoundaryPoint(plus), BoundaryPoint(minus), std::exp(apollonian_distance(z1, z2)), arc};
}

double barbilian_distance(const DiscPoint& z1, const DiscPoint& z2)
{
    if (z1 == z2) {
        return 0.0;
    }
    const cplx a = as_complex(z1);
    const cplx b = as_complex(z2);
    const double u = std::abs(a * std::conj(b) - 1.0);
    const double v = std::abs(b - a);
    return 0.5 * std::log((u + v) / (u - v));
}

double carrier_residual(const GeodesicArc& arc, Vec2 p)
{
    if (const auto* diameter = std::get_if<Diameter>(&arc)) {
        return std::abs(cross(diameter->direction, p));
    }
    const auto& circle = std::get<OrthoCircle>(arc);
    return std::abs(norm(p - circle.center) - circle.radius);
}

}  // namespace apollonian
