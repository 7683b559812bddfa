#include <cmath>

#include <gtest/gtest.h>

#include "apollonian/cli/grid.hpp"
#include "apollonian/finsler.hpp"
#include "apollonian/geodesic.hpp"
#include "oracles.hpp"

using namespace apollonian;

namespace {

const DiscPoint kOrigin = DiscPoint::origin();
const DiscPoint kHalf(0.5, 0.0);
const DiscPoint kUp(0.0, 0.5);

double max_speed_error(const GeodesicPath& path)
{
    double worst = 0.0;
    for (const PathSample& s : path.samples) {
        worst = std::max(worst, std::abs(finsler_norm(DiscPoint(s.x), s.v) - 1.0));
    }
    return worst;
}

GeodesicPath linear_path(Vec2 a, Vec2 b, int n)
{
    GeodesicPath p;
    p.step = 1.0 / n;
    for (int i = 0; i <= n; ++i) {
        const double t = static_cast<double>(i) / n;
        p.samples.push_back({t, a + t * (b - a), b - a});
    }
    return p;
}

}  // namespace

TEST(IntegrateGeodesic, RadialLaunchStaysOnAxis)
{
    const GeodesicPath path = integrate_geodesic(kOrigin, {1.0, 0.0}, 1.5);
    ASSERT_FALSE(path.samples.empty());
    for (const PathSample& s : path.samples) {
        EXPECT_LE(std::abs(s.x.y), 1e-10);
        EXPECT_GE(s.x.x, 0.0);
    }
    EXPECT_LE(max_speed_error(path), 1e-8);
    // Unit speed along x1: dx/dt = 1 - x, so x(t) = 1 - e^{-t}.
    EXPECT_NEAR(path.samples.back().x.x, 1.0 - std::exp(-1.5), 1e-9);
}

TEST(IntegrateGeodesic, FollowsOrthoCircleAndReachesEndpoint)
{
    const double d = apollonian_distance(kUp, kHalf);
    const GeodesicPath path = integrate_geodesic(kUp, carrier_direction(kUp, kHalf), d);
    const GeodesicArc arc = geodesic_arc(kUp, kHalf);
    EXPECT_LE(trajectory_residual(path, arc), 1e-6);
    EXPECT_LE(max_speed_error(path), 1e-8);
    EXPECT_LE(norm(path.samples.back().x - kHalf.vec()), 1e-6);
    EXPECT_NEAR(path.samples.back().t, d, 1e-15);
}

TEST(IntegrateGeodesic, FourthOrderConvergence)
{
    const GeodesicArc arc = geodesic_arc(kUp, kHalf);
    const Vec2 xi = carrier_direction(kUp, kHalf);
    auto residual = [&](double step) {
        IntegratorConfig c;
        c.step = step;
        return trajectory_residual(integrate_geodesic(kUp, xi, 1.2, c), arc);
    };
    const double r1 = residual(0.08);
    const double r2 = residual(0.04);
    const double r3 = residual(0.02);
    EXPECT_NEAR(r1 / r2, 16.0, 4.0);
    EXPECT_NEAR(r2 / r3, 16.0, 4.0);
}

TEST(IntegrateGeodesic, SeededLaunchesMatchCarrierThroughTwoSamples)
{
    cli::SeededRng rng(41);
    for (int k = 0; k < 10; ++k) {
        const DiscPoint x0 = rng.disc_point(0.6);
        const Vec2 xi = rng.direction();
        IntegratorConfig c;
        c.boundary_margin = 0.1;
        GeodesicPath path;
        try {
            path = integrate_geodesic(x0, xi, 1.0, c);
        } catch (const BoundaryExitError& e) {
            path = e.partial_path();
        }
        ASSERT_GE(path.samples.size(), 200u);
        const std::size_t last = path.samples.size() - 1;
        const GeodesicArc arc = geodesic_arc(DiscPoint(path.samples[0].x), DiscPoint(path.samples[last].x));
        EXPECT_LE(trajectory_residual(path, arc), 1e-6);
        EXPECT_LE(max_speed_error(path), 1e-8);
    }
}

TEST(IntegrateGeodesic, BoundaryExitCarriesPartialPath)
{
    try {
        integrate_geodesic(kOrigin, {1.0, 0.0}, 10.0);
        FAIL() << "expected a boundary exit";
    } catch (const BoundaryExitError& e) {
        const GeodesicPath& p = e.partial_path();
        ASSERT_FALSE(p.samples.empty());
        EXPECT_LE(norm(p.samples.back().x), 0.95);
        EXPECT_GT(norm(p.samples.back().x), 0.94);
    }
    EXPECT_THROW(integrate_geodesic(kOrigin, {0.0, 0.0}, 1.0), ZeroVectorError);
}

TEST(FinslerLength, RadialClosedForms)
{
    EXPECT_NEAR(finsler_length(linear_path({0.0, 0.0}, {0.5, 0.0}, 64)), std::log(2.0), 1e-8);
    EXPECT_NEAR(finsler_length(linear_path({0.5, 0.0}, {0.0, 0.0}, 64)), std::log(1.5), 1e-8);
    EXPECT_EQ(finsler_length(linear_path({0.2, 0.1}, {0.2, 0.1}, 16)), 0.0);
}

TEST(FinslerLength, OddIntervalCountAndErrors)
{
    EXPECT_NEAR(finsler_length(linear_path({0.0, 0.0}, {0.5, 0.0}, 63)), std::log(2.0), 1e-8);
    GeodesicPath one;
    one.samples.push_back({0.0, {0.0, 0.0}, {1.0, 0.0}});
    EXPECT_THROW(finsler_length(one), std::invalid_argument);
    EXPECT_THROW(finsler_length(linear_path({0.5, 0.0}, {1.5, 0.0}, 16)), DomainError);
}

TEST(FinslerLength, ChordIsNotShorterThanDistance)
{
    cli::SeededRng rng(43);
    for (int k = 0; k < 50; ++k) {
        const DiscPoint z1 = rng.disc_point(0.8);
        const DiscPoint z2 = rng.disc_point(0.8);
        if (is_diametral(z1, z2)) {
            continue;
        }
        EXPECT_GE(finsler_length(linear_path(z1.vec(), z2.vec(), 512)), apollonian_distance(z1, z2) - 1e-9);
    }
}

TEST(HyperbolicSegment, SamplesLieOnCarrierWithExactEndpoints)
{
    const GeodesicPath seg = hyperbolic_segment(kUp, kHalf, 64);
    ASSERT_EQ(seg.samples.size(), 65u);
    for (const PathSample& s : seg.samples) {
        EXPECT_NEAR(norm(s.x - Vec2{1.25, 1.25}), std::sqrt(2.125), 1e-12);
    }
    EXPECT_EQ(seg.samples.front().x, kUp.vec());
    EXPECT_EQ(seg.samples.back().x, kHalf.vec());

    const GeodesicPath straight = hyperbolic_segment(kOrigin, kHalf, 64);
    for (const PathSample& s : straight.samples) {
        EXPECT_EQ(s.x.y, 0.0);
    }
    EXPECT_THROW(hyperbolic_segment(kHalf, kHalf, 64), DegenerateInputError);
}

TEST(DistanceViaLength, HandValues)
{
    EXPECT_NEAR(distance_via_length(kOrigin, kHalf), std::log(2.0), 1e-8);
    EXPECT_NEAR(distance_via_length(kHalf, kOrigin), std::log(1.5), 1e-8);
    EXPECT_NEAR(distance_via_length(kUp, kHalf), apollonian_distance(kUp, kHalf), 1e-6);
}

TEST(DistanceViaLength, SeededPairsMatchClosedFormAndOracle)
{
    cli::SeededRng rng(47);
    for (int k = 0; k < 50; ++k) {
        const DiscPoint z1 = rng.disc_point(0.8);
        const DiscPoint z2 = rng.disc_point(0.8);
        const double d = apollonian_distance(z1, z2);
        EXPECT_NEAR(distance_via_length(z1, z2), d, 1e-6);
        EXPECT_NEAR(static_cast<double>(oracle::carrier_length(z1.vec(), z2.vec())), d, 1e-9);
    }
}

TEST(DistanceViaLength, AdditiveAlongOneCarrier)
{
    const GeodesicPath seg = hyperbolic_segment(DiscPoint(-0.4, 0.3), DiscPoint(0.6, 0.2), 64);
    const DiscPoint a(seg.samples[0].x);
    const DiscPoint b(seg.samples[23].x);
    const DiscPoint c(seg.samples[64].x);
    const int n = 2048;
    EXPECT_NEAR(distance_via_length(a, b, n) + distance_via_length(b, c, n), distance_via_length(a, c, n), 1e-9);
}

TEST(TrajectoryResidual, ChordIsANegativeControl)
{
    const GeodesicArc arc = geodesic_arc(kUp, kHalf);
    EXPECT_LE(trajectory_residual(hyperbolic_segment(kUp, kHalf, 64), arc), 1e-12);
    EXPECT_GT(trajectory_residual(linear_path(kUp.vec(), kHalf.vec(), 64), arc), 1e-3);
}

TEST(TangentArc, MatchesTwoPointCarrier)
{
    const GeodesicArc from_tangent = tangent_arc(kUp, carrier_direction(kUp, kHalf));
    ASSERT_TRUE(std::holds_alternative<OrthoCircle>(from_tangent));
    const auto& c = std::get<OrthoCircle>(from_tangent);
    EXPECT_NEAR(c.center.x, 1.25, 1e-12);
    EXPECT_NEAR(c.center.y, 1.25, 1e-12);
    EXPECT_NEAR(c.radius, std::sqrt(2.125), 1e-12);
    EXPECT_TRUE(std::holds_alternative<Diameter>(tangent_arc(kHalf, {-1.0, 0.0})));
    EXPECT_TRUE(std::holds_alternative<Diameter>(tangent_arc(kOrigin, {0.3, 0.4})));
}
