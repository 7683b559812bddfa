#include <cmath>

#include <gtest/gtest.h>

#include "apollonian/cli/grid.hpp"
#include "apollonian/finsler.hpp"
#include "apollonian/navigation.hpp"
#include "oracles.hpp"

using namespace apollonian;

namespace {

const DiscPoint kHalf(0.5, 0.0);

}  // namespace

TEST(Zermelo, HandValues)
{
    const ZermeloData o = zermelo_data(DiscPoint::origin());
    EXPECT_EQ(o.h[0][0], 1.0);
    EXPECT_EQ(o.h[0][1], 0.0);
    EXPECT_EQ(o.h[1][1], 1.0);
    EXPECT_EQ(o.w.x, 0.0);

    const ZermeloData d = zermelo_data(kHalf);
    EXPECT_NEAR(d.h[0][0], 1.0, 1e-15);
    EXPECT_NEAR(d.h[1][1], 4.0 / 3.0, 1e-15);
    EXPECT_NEAR(d.h[0][1], 0.0, 1e-15);
    EXPECT_NEAR(d.w.x, -0.5, 1e-15);
    EXPECT_NEAR(d.wind_norm_sq, 0.25, 1e-15);
    EXPECT_NEAR(d.lambda, 0.75, 1e-15);
    EXPECT_NEAR(zermelo_reconstruct(d, {1.0, 0.0}), 2.0, 1e-15);
    EXPECT_NEAR(zermelo_reconstruct(d, {0.0, 1.0}), 4.0 / 3.0, 1e-15);
}

TEST(Zermelo, RoundTripAndWindNorm)
{
    cli::SeededRng rng(53);
    for (int k = 0; k < 200; ++k) {
        const DiscPoint x = rng.disc_point(0.95);
        const Vec2 xi = rng.uniform(0.1, 3.0) * rng.direction();
        const ZermeloData z = zermelo_data(x);
        const double f = finsler_norm(x, xi);
        EXPECT_NEAR(zermelo_reconstruct(z, xi), f, 1e-12 * std::max(1.0, f));
        EXPECT_NEAR(z.wind_norm_sq, x.norm_sq(), 1e-12);
        EXPECT_GT(det(z.h), 0.0);
        EXPECT_EQ(z.h[0][1], z.h[1][0]);
    }
}

TEST(Zermelo, MatchesNavigationDefinition)
{
    cli::SeededRng rng(59);
    for (int k = 0; k < 50; ++k) {
        const DiscPoint x = rng.disc_point(0.9);
        const Vec2 xi = rng.direction();
        const ZermeloData z = zermelo_data(x);
        EXPECT_NEAR(oracle::navigation_norm(z.h, z.w, xi), finsler_norm(x, xi), 1e-12 * finsler_norm(x, xi));
    }
}

TEST(Zermelo, DegenerateWind)
{
    ZermeloData z = zermelo_data(kHalf);
    z.lambda = 0.0;
    EXPECT_THROW(zermelo_reconstruct(z, {1.0, 0.0}), DegenerateInputError);
}

TEST(Hyperboloid, MapHandValuesAndConstraint)
{
    const HyperboloidPoint o = hyperboloid_map(DiscPoint::origin());
    EXPECT_EQ(o.x1, 0.0);
    EXPECT_EQ(o.x3, 1.0);
    const HyperboloidPoint p = hyperboloid_map(kHalf);
    EXPECT_NEAR(p.x1, 4.0 / 3.0, 1e-15);
    EXPECT_NEAR(p.x2, 0.0, 1e-15);
    EXPECT_NEAR(p.x3, 5.0 / 3.0, 1e-15);

    cli::SeededRng rng(61);
    for (int k = 0; k < 200; ++k) {
        const HyperboloidPoint q = hyperboloid_map(rng.disc_point(0.95));
        EXPECT_NEAR(lorentz_inner(q.vec(), q.vec()), -1.0, 1e-12 * q.x3 * q.x3);
        EXPECT_GT(q.x3, 0.0);
    }
    double previous = 0.0;
    for (double r : {0.5, 0.9, 0.99, 0.999}) {
        const double h = hyperboloid_map(DiscPoint(r, 0.0)).x3;
        EXPECT_GT(h, previous);
        previous = h;
    }
}

TEST(Hyperboloid, PushforwardHandValues)
{
    const Vec3 a = hyperboloid_pushforward(DiscPoint::origin(), {1.0, 0.0});
    EXPECT_NEAR(a[0], 2.0, 1e-15);
    EXPECT_NEAR(a[1], 0.0, 1e-15);
    EXPECT_NEAR(a[2], 0.0, 1e-15);
    // 2 / (1 - |x|^2) along a direction orthogonal to x.
    const Vec3 b = hyperboloid_pushforward(kHalf, {0.0, 1.0});
    EXPECT_NEAR(b[0], 0.0, 1e-15);
    EXPECT_NEAR(b[1], 8.0 / 3.0, 1e-14);
    EXPECT_NEAR(b[2], 0.0, 1e-15);
}

TEST(Hyperboloid, PushforwardMatchesDifferencesAndIsTangent)
{
    cli::SeededRng rng(67);
    for (int k = 0; k < 100; ++k) {
        const DiscPoint x = rng.disc_point(0.9);
        const Vec2 xi = rng.direction();
        const Vec3 v = hyperboloid_pushforward(x, xi);
        const Vec3 n = hyperboloid_pushforward_numeric(x, xi);
        const double scale = std::max({1.0, std::abs(v[0]), std::abs(v[1]), std::abs(v[2])});
        for (int i = 0; i < 3; ++i) {
            EXPECT_NEAR(v[i], n[i], 1e-7 * scale);
        }
        EXPECT_NEAR(lorentz_inner(v, hyperboloid_map(x).vec()), 0.0, 1e-10 * scale * scale);
    }
}

TEST(LorentzRanders, ValuesAndTimelikeError)
{
    const HyperboloidPoint apex{0.0, 0.0, 1.0};
    EXPECT_NEAR(lorentz_randers_value(apex, {2.0, 0.0, 0.0}), 2.0, 1e-15);
    EXPECT_EQ(lorentz_randers_value(apex, {0.0, 0.0, 0.0}), 0.0);
    EXPECT_THROW(lorentz_randers_value(apex, {0.0, 0.0, 1.0}), ImaginaryNormError);
    EXPECT_THROW(lorentz_randers_value(hyperboloid_map(kHalf), {0.0, 0.0, 1.0}), ImaginaryNormError);
}

TEST(Pullback, IsTwiceTheNorm)
{
    const auto a = pullback_check(DiscPoint::origin(), {1.0, 0.0});
    EXPECT_NEAR(a.first, 2.0, 1e-14);
    EXPECT_NEAR(a.second, 2.0, 1e-14);
    const auto b = pullback_check(kHalf, {1.0, 0.0});
    EXPECT_NEAR(b.first, 4.0, 1e-13);
    const auto c = pullback_check(kHalf, {0.0, 1.0});
    EXPECT_NEAR(c.first, 8.0 / 3.0, 1e-13);
    EXPECT_NEAR(c.second, 8.0 / 3.0, 1e-14);

    cli::SeededRng rng(71);
    for (int k = 0; k < 200; ++k) {
        const DiscPoint x = rng.disc_point(0.9);
        const Vec2 xi = rng.direction();
        const auto [pull, twice] = pullback_check(x, xi);
        EXPECT_NEAR(pull / finsler_norm(x, xi), 2.0, 1e-10);
        EXPECT_NEAR(pull, twice, 1e-10 * twice);
    }
}
