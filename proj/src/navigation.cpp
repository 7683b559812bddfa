#include "apollonian/navigation.hpp"

#include <algorithm>
#include <cmath>

#include "apollonian/finsler.hpp"

namespace apollonian {

namespace {

double h_inner(const Mat2& h, Vec2 a, Vec2 b)
{
    return a.x * (h[0][0] * b.x + h[0][1] * b.y) + a.y * (h[1][0] * b.x + h[1][1] * b.y);
}

Vec3 pi_raw(Vec2 x)
{
    const double u = 1.0 - norm_sq(x);
    return {2.0 * x.x / u, 2.0 * x.y / u, (2.0 - u) / u};
}

}  // namespace

double lorentz_inner(const Vec3& a, const Vec3& b)
{
    return a[0] * b[0] + a[1] * b[1] - a[2] * b[2];
}

ZermeloData zermelo_data(const DiscPoint& x)
{
    const Vec2 p = x.vec();
    const double u = x.gap();
    ZermeloData data{};
    data.h = {{{(1.0 - p.x * p.x) / u, -p.x * p.y / u}, {-p.x * p.y / u, (1.0 - p.y * p.y) / u}}};
    data.w = -p;
    data.wind_norm_sq = h_inner(data.h, data.w, data.w);
    data.lambda = 1.0 - data.wind_norm_sq;
    return data;
}

double zermelo_reconstruct(const ZermeloData& data, TangentVector xi)
{
    if (!(data.lambda > 0.0)) {
        throw DegenerateInputError("zermelo_reconstruct: wind is not slower than the sea metric (lambda <= 0)");
    }
    const double wind_xi = h_inner(data.h, data.w, xi);
    const double radicand = data.lambda * h_inner(data.h, xi, xi) + wind_xi * wind_xi;
    return (std::sqrt(std::max(radicand, 0.0)) - wind_xi) / data.lambda;
}

HyperboloidPoint hyperboloid_map(const DiscPoint& x)
{
    const Vec3 v = pi_raw(x.vec());
    return {v[0], v[1], v[2]};
}

Vec3 hyperboloid_pushforward(const DiscPoint& x, TangentVector xi)
{
    const double x1 = x.x1();
    const double x2 = x.x2();
    const double u = x.gap();
    const double k = 2.0 / (u * u);
    return {k * ((u + 2.0 * x1 * x1) * xi.x + 2.0 * x1 * x2 * xi.y),
            k * (2.0 * x1 * x2 * xi.x + (u + 2.0 * x2 * x2) * xi.y),
            k * 2.0 * (x1 * xi.x + x2 * xi.y)};
}

Vec3 hyperboloid_pushforward_numeric(const DiscPoint& x, TangentVector xi, double step)
{
    Vec3 out{0.0, 0.0, 0.0};
    for (int i = 0; i < 2; ++i) {
        Vec2 e{0.0, 0.0};
        e[i] = step;
        const Vec3 plus = pi_raw(x.vec() + e);
        const Vec3 minus = pi_raw(x.vec() - e);
        for (int c = 0; c < 3; ++c) {
            out[c] += (plus[c] - minus[c]) / (2.0 * step) * xi[i];
        }
    }
    return out;
}

double lorentz_randers_value(const HyperboloidPoint& p, const Vec3& v)
{
    const double q = lorentz_inner(v, v);
    if (q < 0.0) {
        // Rounding on tangent null directions can dip a few ulps below zero.
        const double scale = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
        if (q < -1e-14 * scale) {
            throw ImaginaryNormError("lorentz_randers_value: Lorentz quadratic form is negative on v");
        }
    }
    return std::sqrt(std::max(q, 0.0)) + v[2] / (1.0 + p.x3);
}

std::pair<double, double> pullback_check(const DiscPoint& x, TangentVector xi)
{
    const double pulled = lorentz_randers_value(hyperboloid_map(x), hyperboloid_pushforward(x, xi));
    return {pulled, 2.0 * finsler_norm(x, xi)};
}

}  // namespace apollonian
