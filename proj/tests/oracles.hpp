#pragma once

// Reference computations used only by the tests. None of them calls the
// library's closed forms; they work from defining properties (suprema,
// second derivatives, integrals) in long double.

#include <array>
#include <cmath>
#include <functional>
#include <numbers>

#include "apollonian/types.hpp"

namespace oracle {

using apollonian::Mat2;
using apollonian::Vec2;
using apollonian::Vec3;
using ld = long double;

inline constexpr ld kPi = std::numbers::pi_v<long double>;

// F(x, xi) = (|xi| + <x, xi>) / (1 - |x|^2), straight from the definition.
inline ld finsler(ld x1, ld x2, ld v1, ld v2)
{
    return (std::sqrt(v1 * v1 + v2 * v2) + x1 * v1 + x2 * v2) / (1.0L - x1 * x1 - x2 * x2);
}

inline ld finsler_sq(const std::array<ld, 4>& p)
{
    const ld f = finsler(p[0], p[1], p[2], p[3]);
    return f * f;
}

// |z1 - e^{it}|^2 / |z2 - e^{it}|^2
inline ld boundary_ratio(Vec2 z1, Vec2 z2, ld t)
{
    const ld c = std::cos(t);
    const ld s = std::sin(t);
    const ld a = (z1.x - c) * (z1.x - c) + (z1.y - s) * (z1.y - s);
    const ld b = (z2.x - c) * (z2.x - c) + (z2.y - s) * (z2.y - s);
    return a / b;
}

struct Supremum {
    ld log_value;  // log sqrt(max ratio)
    ld angle;      // argmax in (-pi, pi]
};

// Dense scan of the boundary circle followed by golden-section search on
// the best bracket. Long double puts the flat-top resolution near 3e-10.
inline Supremum boundary_supremum(Vec2 z1, Vec2 z2, int scan = 20000)
{
    int best = 0;
    ld best_value = -1.0L;
    for (int k = 0; k < scan; ++k) {
        const ld v = boundary_ratio(z1, z2, 2.0L * kPi * k / scan);
        if (v > best_value) {
            best_value = v;
            best = k;
        }
    }
    ld lo = 2.0L * kPi * (best - 1) / scan;
    ld hi = 2.0L * kPi * (best + 1) / scan;
    const ld g = (std::sqrt(5.0L) - 1.0L) / 2.0L;
    ld a = hi - g * (hi - lo);
    ld b = lo + g * (hi - lo);
    ld fa = boundary_ratio(z1, z2, a);
    ld fb = boundary_ratio(z1, z2, b);
    for (int it = 0; it < 200 && hi - lo > 1e-15L; ++it) {
        if (fa < fb) {
            lo = a;
            a = b;
            fa = fb;
            b = lo + g * (hi - lo);
            fb = boundary_ratio(z1, z2, b);
        } else {
            hi = b;
            b = a;
            fb = fa;
            a = hi - g * (hi - lo);
            fa = boundary_ratio(z1, z2, a);
        }
    }
    const ld t = 0.5L * (lo + hi);
    const ld value = std::max({fa, fb, boundary_ratio(z1, z2, t)});
    return {0.5L * std::log(value), std::remainder(t, 2.0L * kPi)};
}

// Second-order central differences in long double; step h.
inline ld d1(const std::function<ld(const std::array<ld, 4>&)>& f, std::array<ld, 4> p, int i, ld h)
{
    auto q = p;
    q[i] = p[i] + h;
    const ld fp = f(q);
    q[i] = p[i] - h;
    return (fp - f(q)) / (2.0L * h);
}

inline ld d2(const std::function<ld(const std::array<ld, 4>&)>& f, std::array<ld, 4> p, int i, int j, ld hi, ld hj)
{
    if (i == j) {
        auto q = p;
        const ld f0 = f(p);
        q[i] = p[i] + hi;
        const ld fp = f(q);
        q[i] = p[i] - hi;
        return (fp - 2.0L * f0 + f(q)) / (hi * hi);
    }
    auto at = [&](ld si, ld sj) {
        auto q = p;
        q[i] += si * hi;
        q[j] += sj * hj;
        return f(q);
    };
    return (at(1, 1) - at(1, -1) - at(-1, 1) + at(-1, -1)) / (4.0L * hi * hj);
}

// g_ij = 1/2 d^2 F^2 / dxi^i dxi^j by central differences.
inline Mat2 fundamental_tensor(Vec2 x, Vec2 xi)
{
    const std::array<ld, 4> p{x.x, x.y, xi.x, xi.y};
    const ld h = 1e-4L * std::hypot(static_cast<ld>(xi.x), static_cast<ld>(xi.y));
    Mat2 g{};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            g[i][j] = static_cast<double>(0.5L * d2(finsler_sq, p, 2 + i, 2 + j, h, h));
        }
    }
    return g;
}

// G^i = 1/4 g^{il} ([F^2]_{x^k xi^l} xi^k - [F^2]_{x^l}) with every
// derivative of F^2 by central differences.
inline Vec2 spray(Vec2 x, Vec2 xi)
{
    const std::array<ld, 4> p{x.x, x.y, xi.x, xi.y};
    const ld hv = 1e-4L * std::hypot(static_cast<ld>(xi.x), static_cast<ld>(xi.y));
    const ld hx = 1e-4L * (1.0L - std::hypot(static_cast<ld>(x.x), static_cast<ld>(x.y)));
    ld g[2][2];
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            g[i][j] = 0.5L * d2(finsler_sq, p, 2 + i, 2 + j, hv, hv);
        }
    }
    ld rhs[2];
    for (int l = 0; l < 2; ++l) {
        ld v = -d1(finsler_sq, p, l, hx);
        for (int k = 0; k < 2; ++k) {
            v += d2(finsler_sq, p, k, 2 + l, hx, hv) * p[2 + k];
        }
        rhs[l] = v;
    }
    const ld det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
    const ld s0 = (g[1][1] * rhs[0] - g[0][1] * rhs[1]) / det;
    const ld s1 = (-g[1][0] * rhs[0] + g[0][0] * rhs[1]) / det;
    return {static_cast<double>(0.25L * s0), static_cast<double>(0.25L * s1)};
}

// Gaussian curvature of the conformal metric e^{phi}|dx| at x, as
// -e^{-2 phi} Lap(phi) with the Laplacian by a five-point stencil.
inline double conformal_curvature(const std::function<ld(ld, ld)>& phi, Vec2 x, ld h = 1e-4L)
{
    const ld c = phi(x.x, x.y);
    const ld lap = (phi(x.x + h, x.y) + phi(x.x - h, x.y) + phi(x.x, x.y + h) + phi(x.x, x.y - h) - 4.0L * c) / (h * h);
    return static_cast<double>(-std::exp(-2.0L * c) * lap);
}

// R^i_k = 2 dG^i/dx^k - xi^j d2G^i/dx^j dxi^k + 2 G^j d2G^i/dxi^j dxi^k
//         - dG^i/dxi^j dG^j/dxi^k
// for a spray supplied as a callable, by long double central differences.
inline Mat2 riemann_from_spray(const std::function<Vec2(Vec2, Vec2)>& spray_fn, Vec2 x, Vec2 xi)
{
    const ld hx = 1e-4L * (1.0L - std::hypot(static_cast<ld>(x.x), static_cast<ld>(x.y)));
    const ld hv = 1e-4L * std::hypot(static_cast<ld>(xi.x), static_cast<ld>(xi.y));
    const std::array<ld, 4> p{x.x, x.y, xi.x, xi.y};
    Mat2 out{};
    std::array<std::function<ld(const std::array<ld, 4>&)>, 2> comp;
    for (int i = 0; i < 2; ++i) {
        comp[i] = [i, &spray_fn](const std::array<ld, 4>& q) {
            const Vec2 v = spray_fn({static_cast<double>(q[0]), static_cast<double>(q[1])},
                                    {static_cast<double>(q[2]), static_cast<double>(q[3])});
            return static_cast<ld>(v[i]);
        };
    }
    auto step = [&](int a) { return a < 2 ? hx : hv; };
    const Vec2 g = spray_fn(x, xi);
    for (int i = 0; i < 2; ++i) {
        for (int k = 0; k < 2; ++k) {
            ld v = 2.0L * d1(comp[i], p, k, hx);
            for (int j = 0; j < 2; ++j) {
                v -= p[2 + j] * d2(comp[i], p, j, 2 + k, step(j), step(2 + k));
                v += 2.0L * g[j] * d2(comp[i], p, 2 + j, 2 + k, hv, hv);
                v -= d1(comp[i], p, 2 + j, hv) * d1(comp[j], p, 2 + k, hv);
            }
            out[i][k] = static_cast<double>(v);
        }
    }
    return out;
}

// Composite 16-point Gauss-Legendre quadrature on [a, b] with `panels`
// equal panels.
inline ld gauss_legendre(const std::function<ld(ld)>& f, ld a, ld b, int panels = 64)
{
    static const ld nodes[8] = {0.0950125098376374401853193L, 0.2816035507792589132304605L,
                                0.4580167776572273863424194L, 0.6178762444026437484466718L,
                                0.7554044083550030338951012L, 0.8656312023878317438804679L,
                                0.9445750230732325760779884L, 0.9894009349916499325961542L};
    static const ld weights[8] = {0.1894506104550684962853967L, 0.1826034150449235888667637L,
                                  0.1691565193950025381893121L, 0.1495959888165767320815017L,
                                  0.1246289712555338720524763L, 0.0951585116824927848099251L,
                                  0.0622535239386478928628438L, 0.0271524594117540948517806L};
    ld total = 0.0L;
    const ld width = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const ld mid = a + (p + 0.5L) * width;
        const ld half = 0.5L * width;
        for (int k = 0; k < 8; ++k) {
            total += weights[k] * half * (f(mid - half * nodes[k]) + f(mid + half * nodes[k]));
        }
    }
    return total;
}

// Finsler length of the hyperbolic carrier from z1 to z2, parametrised
// independently of the library: the Moebius map m(w) = (w + z1)/(1 + conj(z1) w)
// carries the segment [0, w2] (w2 = (z2 - z1)/(1 - conj(z1) z2)) onto it.
inline ld carrier_length(Vec2 z1, Vec2 z2, int panels = 64)
{
    using C = std::array<ld, 2>;
    auto mul = [](C a, C b) { return C{a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0]}; };
    auto div = [](C a, C b) {
        const ld d = b[0] * b[0] + b[1] * b[1];
        return C{(a[0] * b[0] + a[1] * b[1]) / d, (a[1] * b[0] - a[0] * b[1]) / d};
    };
    const C a{z1.x, z1.y};
    const C ac{z1.x, -z1.y};
    const C b{z2.x, z2.y};
    const C w2 = div(C{b[0] - a[0], b[1] - a[1]}, C{1.0L - mul(ac, b)[0], -mul(ac, b)[1]});
    auto integrand = [&](ld s) {
        const C w{s * w2[0], s * w2[1]};
        const C den{1.0L + mul(ac, w)[0], mul(ac, w)[1]};
        const C z = div(C{w[0] + a[0], w[1] + a[1]}, den);
        // m'(w) = (1 - |z1|^2) / (1 + conj(z1) w)^2
        const C dm = div(C{1.0L - a[0] * a[0] - a[1] * a[1], 0.0L}, mul(den, den));
        const C v = mul(dm, w2);
        return finsler(z[0], z[1], v[0], v[1]);
    };
    return gauss_legendre(integrand, 0.0L, 1.0L, panels);
}

// Solves h(xi/F - W, xi/F - W) = 1 for F > 0 by bisection: the defining
// property of the navigation norm.
inline double navigation_norm(const Mat2& h, Vec2 w, Vec2 xi)
{
    auto excess = [&](ld f) {
        const ld u0 = xi.x / f - w.x;
        const ld u1 = xi.y / f - w.y;
        return h[0][0] * u0 * u0 + 2.0L * h[0][1] * u0 * u1 + h[1][1] * u1 * u1 - 1.0L;
    };
    ld lo = 1e-12L;
    ld hi = 1.0L;
    while (excess(hi) > 0.0L) {
        hi *= 2.0L;
    }
    for (int it = 0; it < 200; ++it) {
        const ld mid = 0.5L * (lo + hi);
        (excess(mid) > 0.0L ? lo : hi) = mid;
    }
    return static_cast<double>(0.5L * (lo + hi));
}

}  // namespace oracle
