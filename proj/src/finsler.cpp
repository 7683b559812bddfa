#include "apollonian/finsler.hpp"

#include <algorithm>
#include <numbers>

#include "apollonian/numdiff.hpp"
#include "apollonian/weakmetric.hpp"

namespace apollonian {

namespace detail {

double finsler_norm_raw(Vec2 x, Vec2 xi)
{
    return (norm(xi) + dot(x, xi)) / (1.0 - norm_sq(x));
}

void require_nonzero(TangentVector xi, const char* what)
{
    if (xi.x == 0.0 && xi.y == 0.0) {
        throw ZeroVectorError(std::string(what) + " is undefined for the zero vector");
    }
    if (!std::isfinite(xi.x) || !std::isfinite(xi.y)) {
        throw DomainError(std::string(what) + ": tangent vector has non-finite components");
    }
}

}  // namespace detail

double finsler_norm(const DiscPoint& x, TangentVector xi)
{
    return detail::finsler_norm_raw(x.vec(), xi);
}

RandersSplit randers_split(const DiscPoint& x, TangentVector xi)
{
    const double gap = x.gap();
    const double alpha = norm(xi) / gap;
    const double beta = dot(x.vec(), xi) / gap;
    return {alpha, beta, alpha + beta};
}

Vec2 one_form(const DiscPoint& x)
{
    return x.vec() / x.gap();
}

double beta_norm_sq(const DiscPoint& x)
{
    // a^{ij} = (1 - |x|^2)^2 delta^{ij}
    const double gap = x.gap();
    return gap * gap * norm_sq(one_form(x));
}

double beta_potential(Vec2 x)
{
    return -0.5 * std::log(1.0 - norm_sq(x));
}

double potential_check(const DiscPoint& x, double step)
{
    if (!detail::within_radius(x.vec(), 0.95)) {
        throw DomainError("potential_check: |x| must not exceed 0.95");
    }
    if (!(step > 0.0)) {
        throw std::invalid_argument("potential_check: step must be positive");
    }
    const Vec2 b = one_form(x);
    double residual = 0.0;
    for (int i = 0; i < 2; ++i) {
        Vec2 plus = x.vec();
        Vec2 minus = x.vec();
        plus[i] += step;
        minus[i] -= step;
        const double central = (beta_potential(plus) - beta_potential(minus)) / (2.0 * step);
        residual = std::max(residual, std::abs(b[i] - central));
    }
    return residual;
}

FundamentalTensor fundamental_tensor(const DiscPoint& x, TangentVector xi, TensorMode mode)
{
    detail::require_nonzero(xi, "fundamental_tensor");
    if (mode == TensorMode::numeric) {
        const Vec2 base = x.vec();
        auto half_f_sq = [base](const numdiff::Point<2>& v) {
            const double f = detail::finsler_norm_raw(base, {v[0], v[1]});
            return 0.5 * f * f;
        };
        const numdiff::Point<2> p{xi.x, xi.y};
        const double h = detail::tangent_step(xi);
        return {numdiff::second_partial<2>(half_f_sq, p, 0, 0, h, h),
                numdiff::second_partial<2>(half_f_sq, p, 0, 1, h, h),
                numdiff::second_partial<2>(half_f_sq, p, 1, 1, h, h)};
    }

    const double gap = x.gap();
    const double a = 1.0 / (gap * gap);  // a_ij = a delta_ij
    const RandersSplit split = randers_split(x, xi);
    const Vec2 b = one_form(x);
    const Vec2 l = (a / split.alpha) * xi;
    const double ratio = split.f_value / split.alpha;
    auto entry = [&](int i, int j) {
        const double aij = i == j ? a : 0.0;
        return ratio * (aij - l[i] * l[j]) + (l[i] + b[i]) * (l[j] + b[j]);
    };
    return {entry(0, 0), entry(0, 1), entry(1, 1)};
}

double busemann_mayer_ratio(const DiscPoint& x, TangentVector xi, double t)
{
    detail::require_nonzero(xi, "busemann_mayer_ratio");
    if (!(t > 0.0)) {
        throw std::invalid_argument("busemann_mayer_ratio: t must be positive");
    }
    const DiscPoint moved(x.vec() + t * xi);
    return apollonian_distance(x, moved) / t;
}

IndicatrixEllipse indicatrix_ellipse(const DiscPoint& x)
{
    // Squaring |eta - x| = 1 - <x, eta> gives |eta|^2 - <x, eta>^2 = 1 - |x|^2,
    // a central conic with quadratic part I - x x^T and no linear terms.
    IndicatrixEllipse e{};
    const double x1 = x.x1();
    const double x2 = x.x2();
    e.conic_a = 1.0 - x1 * x1;
    e.conic_b = -2.0 * x1 * x2;
    e.conic_c = 1.0 - x2 * x2;
    e.rhs = x.gap();
    e.center = {0.0, 0.0};

    // Eigenvalues of [[A, B/2], [B/2, C]]. The half-gap
    // sqrt(((A - C)/2)^2 + (B/2)^2) reduces to |x|^2 / 2; it is evaluated
    // from the coefficients but without the cancellation of lambda_max - lambda_min.
    const double mean = 0.5 * (e.conic_a + e.conic_c);
    const double half_gap = std::hypot(0.5 * (e.conic_a - e.conic_c), 0.5 * e.conic_b);
    const double lambda_min = mean - half_gap;
    const double lambda_max = mean + half_gap;
    e.semi_major = std::sqrt(e.rhs / lambda_min);
    e.semi_minor = std::sqrt(e.rhs / lambda_max);
    e.eccentricity = std::sqrt(2.0 * half_gap / lambda_max);

    // Eigenvector of lambda_min: (B/2, lambda_min - A) or (lambda_min - C, B/2).
    Vec2 axis{0.5 * e.conic_b, lambda_min - e.conic_a};
    const Vec2 other{lambda_min - e.conic_c, 0.5 * e.conic_b};
    if (norm_sq(other) > norm_sq(axis)) {
        axis = other;
    }
    if (norm_sq(axis) == 0.0) {
        axis = {1.0, 0.0};
    }
    axis = axis / norm(axis);
    if (dot(axis, x.vec()) < 0.0) {
        axis = -axis;
    }
    e.major_axis = axis;
    const double focal = e.semi_major * e.eccentricity;
    e.focus1 = e.center + focal * axis;
    e.focus2 = e.center - focal * axis;
    return e;
}

std::vector<TangentVector> indicatrix_sample(const DiscPoint& x, int n)
{
    if (n < 3) {
        throw std::invalid_argument("indicatrix_sample: n must be at least 3");
    }
    std::vector<TangentVector> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double angle = 2.0 * std::numbers::pi * k / n;
        const Vec2 u{std::cos(angle), std::sin(angle)};
        out.push_back(u / finsler_norm(x, u));
    }
    return out;
}

double symmetrized_norm(const DiscPoint& x, TangentVector xi)
{
    return 0.5 * (finsler_norm(x, xi) + finsler_norm(x, -xi));
}

}  // namespace apollonian
