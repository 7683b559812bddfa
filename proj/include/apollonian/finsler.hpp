#pragma once

#include <vector>

#include "apollonian/types.hpp"

namespace apollonian {

/// F = alpha + beta with alpha the Poincare part |xi| / (1 - |x|^2) and
/// beta the exact 1-form <x, xi> / (1 - |x|^2).
struct RandersSplit {
    double alpha;
    double beta;
    double f_value;
};

struct FundamentalTensor {
    double g11;
    double g12;
    double g22;

    Mat2 matrix() const { return {{{g11, g12}, {g12, g22}}}; }
    double determinant() const { return g11 * g22 - g12 * g12; }
    bool positive_definite() const { return g11 > 0.0 && determinant() > 0.0; }
    double quadratic(Vec2 v) const { return g11 * v.x * v.x + 2.0 * g12 * v.x * v.y + g22 * v.y * v.y; }
};

enum class TensorMode { closed, numeric };

/// Indicatrix as the conic A eta1^2 + B eta1 eta2 + C eta2^2 = rhs in the
/// shifted coordinates eta = x + xi, plus its metric description.
struct IndicatrixEllipse {
    double conic_a;
    double conic_b;
    double conic_c;
    double rhs;
    Vec2 center;
    Vec2 major_axis;  // unit; along x (defaults to (1, 0) at the origin)
    Vec2 focus1;      // the focus on the side of x
    Vec2 focus2;
    double semi_major;
    double semi_minor;
    double eccentricity;

    double discriminant() const { return conic_b * conic_b - 4.0 * conic_a * conic_c; }
    // A eta1^2 + B eta1 eta2 + C eta2^2 - rhs
    double conic_residual(Vec2 eta) const
    {
        return conic_a * eta.x * eta.x + conic_b * eta.x * eta.y + conic_c * eta.y * eta.y - rhs;
    }
};

/// Apollonian weak-Finsler norm F(x, xi) = (|xi| + <x, xi>) / (1 - |x|^2).
double finsler_norm(const DiscPoint& x, TangentVector xi);

RandersSplit randers_split(const DiscPoint& x, TangentVector xi);

/// Coefficients b_i = x^i / (1 - |x|^2) of the 1-form.
Vec2 one_form(const DiscPoint& x);

/// ||beta||_alpha^2 = a^{ij} b_i b_j.
double beta_norm_sq(const DiscPoint& x);

/// The potential f = -1/2 log(1 - |x|^2) with beta = df.
double beta_potential(Vec2 x);

/// Largest componentwise gap between b_i and a second-order central
/// difference of the potential. Scales like kPotentialResidualConstant *
/// step^2 on |x| <= 0.95; refuses points beyond that radius.
double potential_check(const DiscPoint& x, double step);

/// Bound on |f'''| / 6 over |x| <= 0.95, the constant in the step^2 law of
/// potential_check.
inline constexpr double kPotentialResidualConstant = 1.5e3;

/// g_ij = 1/2 d^2 F^2 / dxi^i dxi^j. The closed mode uses the Randers
/// expansion (F/alpha)(a_ij - l_i l_j) + (l_i + b_i)(l_j + b_j); the numeric
/// mode differentiates F^2/2 with a fourth-order stencil at step 1e-3 |xi|.
FundamentalTensor fundamental_tensor(const DiscPoint& x, TangentVector xi, TensorMode mode = TensorMode::closed);

/// delta(x, x + t xi) / t, which tends to F(x, xi) linearly as t -> 0.
double busemann_mayer_ratio(const DiscPoint& x, TangentVector xi, double t);

IndicatrixEllipse indicatrix_ellipse(const DiscPoint& x);

/// n points of the unit sphere S_x, one per uniformly spaced direction u_k,
/// xi_k = u_k / F(x, u_k).
std::vector<TangentVector> indicatrix_sample(const DiscPoint& x, int n);

/// 1/2 (F(x, xi) + F(x, -xi)), which is the Poincare norm alpha.
double symmetrized_norm(const DiscPoint& x, TangentVector xi);

namespace detail {

// Unchecked evaluation used inside finite-difference stencils, where the
// stencil may be built around coordinates that are not DiscPoints yet.
double finsler_norm_raw(Vec2 x, Vec2 xi);

// Relative steps for the numeric routes.
inline double tangent_step(Vec2 xi) { return 1e-3 * norm(xi); }
inline double base_step(Vec2 x) { return 1e-3 * (1.0 - norm(x)); }

void require_nonzero(TangentVector xi, const char* what);

// Radius caps of the numeric routes, with a few ulps of slack so grid points
// built as r * (cos t, sin t) at r = cap are accepted.
inline bool within_radius(Vec2 x, double cap) { return norm(x) <= cap * (1.0 + 1e-12); }

}  // namespace detail

}  // namespace apollonian
