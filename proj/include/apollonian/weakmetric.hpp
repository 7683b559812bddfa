#pragma once

#include <variant>

#include "apollonian/types.hpp"

namespace apollonian {

/// Carrier of a hyperbolic geodesic through the origin.
struct Diameter {
    Vec2 direction;  // unit length, oriented from z1 towards z2
};

/// Carrier circle orthogonal to the unit circle: |center|^2 = 1 + radius^2.
struct OrthoCircle {
    Vec2 center;
    double radius;
};

using GeodesicArc = std::variant<Diameter, OrthoCircle>;

struct SupremumResult {
    BoundaryPoint a_plus;   // exit of the hyperbolic ray z1 -> z2
    BoundaryPoint a_minus;  // exit of the reverse ray z2 -> z1
    double m_value;         // sup over the circle of |z1 - a| / |z2 - a|
    GeodesicArc arc;
};

struct BruteForceSupremum {
    double m_estimate;
    double t_star;  // argmax angle in (-pi, pi]
};

/// Apollonian weak metric on the unit disc,
///   delta(z1, z2) = log((|z1 - z2| + |z1 conj(z2) - 1|) / (1 - |z2|^2)).
/// Nonnegative, zero on the diagonal, not symmetric.
double apollonian_distance(const DiscPoint& z1, const DiscPoint& z2);

/// f(t) = |z1 - e^{it}|^2 / |z2 - e^{it}|^2.
double boundary_objective(const DiscPoint& z1, const DiscPoint& z2, double t);

/// Analytic derivative df/dt of boundary_objective.
double boundary_objective_slope(const DiscPoint& z1, const DiscPoint& z2, double t);

/// Direct maximisation of the boundary objective: a uniform scan over
/// n_coarse angles, golden-section refinement of the best bracket down to
/// 1e-12, then a bisection on the sign of df/dt to pin the argmax below the
/// flat-top resolution of the value comparisons. Returns sqrt(max f).
/// Throws DegenerateInputError for z1 == z2, std::invalid_argument when
/// n_coarse < 64.
BruteForceSupremum brute_force_supremum(const DiscPoint& z1, const DiscPoint& z2, int n_coarse = 4096);

/// True when z1, z2 and the origin are collinear, using the relative test
/// |Im(conj(z1) z2)| <= 1e-12 * max(|z1||z2|, 1e-30).
bool is_diametral(const DiscPoint& z1, const DiscPoint& z2);

/// Hyperbolic geodesic carrier through two distinct points.
GeodesicArc geodesic_arc(const DiscPoint& z1, const DiscPoint& z2);

/// Boundary points where the supremum defining delta(z1, z2) (a_plus) and
/// delta(z2, z1) (a_minus) is attained.
SupremumResult supremum_points(const DiscPoint& z1, const DiscPoint& z2);

/// Arithmetic symmetrisation of the Apollonian weak metric, closed form.
double barbilian_distance(const DiscPoint& z1, const DiscPoint& z2);

/// Distance of p from a carrier: ||p - center| - R| for a circle, the
/// component of p across the line for a diameter.
double carrier_residual(const GeodesicArc& arc, Vec2 p);

}  // namespace apollonian
