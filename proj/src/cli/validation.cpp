#include "apollonian/cli/validation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "apollonian/calculus.hpp"
#include "apollonian/cli/record.hpp"
#include "apollonian/finsler.hpp"
#include "apollonian/geodesic.hpp"
#include "apollonian/navigation.hpp"
#include "apollonian/weakmetric.hpp"

namespace apollonian::cli {

namespace {

// Running maximum that turns NaN into +inf so a broken value cannot pass.
struct Worst {
    double value = 0.0;

    void operator()(double r)
    {
        if (std::isnan(r)) {
            value = INFINITY;
        } else if (r > value) {
            value = r;
        }
    }
};

double mat_gap(const Mat2& a, const Mat2& b)
{
    double m = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            m = std::max(m, std::abs(a[i][j] - b[i][j]));
        }
    }
    return m;
}

class Suite {
public:
    Suite(const ValidationOptions& options, ValidationReport& report) : options_(options), report_(report) {}

    void add(const std::string& id, const std::string& where, double residual, double tolerance,
             const std::string& note = {})
    {
        const double tol = tolerance * options_.tol_scale;
        report_.checks.push_back({id, where, residual, tol, residual <= tol, note});
    }

private:
    const ValidationOptions& options_;
    ValidationReport& report_;
};

struct Context {
    const ValidationOptions& options;
    Suite& suite;
    SeededRng& rng;
    std::string grid;
    std::vector<DiscPoint> points;
    std::vector<GridCell> cells;
};

void weakmetric_checks(Context& c)
{
    const DiscPoint o = DiscPoint::origin();
    const DiscPoint half(0.5, 0.0);
    {
        Worst w;
        w(std::abs(apollonian_distance(o, half) - std::log(2.0)));
        w(std::abs(apollonian_distance(half, o) - std::log(1.5)));
        c.suite.add("wm.distance_hand", "(0,0)<->(0.5,0)", w.value, 1e-12);
    }

    std::vector<std::pair<DiscPoint, DiscPoint>> pairs;
    for (int k = 0; k < 100; ++k) {
        const DiscPoint z1 = c.rng.disc_point(0.9);
        const DiscPoint z2 = c.rng.disc_point(0.9);
        pairs.emplace_back(z1, z2);
    }
    Worst oracle;
    Worst argmax;
    Worst carrier;
    Worst barbilian;
    for (const auto& [z1, z2] : pairs) {
        const BruteForceSupremum bf = brute_force_supremum(z1, z2);
        oracle(std::abs(apollonian_distance(z1, z2) - std::log(bf.m_estimate)));
        const SupremumResult sup = supremum_points(z1, z2);
        argmax(std::abs(std::remainder(bf.t_star - sup.a_plus.angle(), 2.0 * std::numbers::pi)));
        carrier(carrier_residual(sup.arc, z1.vec()));
        carrier(carrier_residual(sup.arc, z2.vec()));
        if (const auto* circle = std::get_if<OrthoCircle>(&sup.arc)) {
            carrier(std::abs(norm_sq(circle->center) - 1.0 - circle->radius * circle->radius) /
                    norm_sq(circle->center));
        }
        const double mean = 0.5 * (apollonian_distance(z1, z2) + apollonian_distance(z2, z1));
        barbilian(std::abs(barbilian_distance(z1, z2) - mean));
    }
    c.suite.add("wm.distance_oracle", "100 seeded pairs |z|<=0.9", oracle.value, 1e-9);
    c.suite.add("wm.supremum_argmax", "100 seeded pairs |z|<=0.9", argmax.value, 1e-8);
    c.suite.add("wm.carrier_orthogonal", "100 seeded pairs |z|<=0.9", carrier.value, 1e-12);
    c.suite.add("wm.barbilian_mean", "100 seeded pairs |z|<=0.9", barbilian.value, 1e-12);

    {
        Worst w;
        for (int k = 0; k < 20; ++k) {
            const Vec2 u = c.rng.direction();
            const double r1 = c.rng.uniform(-0.9, 0.9);
            double r2 = c.rng.uniform(-0.9, 0.9);
            if (r2 == r1) {
                r2 = -r1;
            }
            const DiscPoint z1(r1 * u);
            const DiscPoint z2(r2 * u);
            const Vec2 expected = r2 > r1 ? u : -u;
            const SupremumResult sup = supremum_points(z1, z2);
            w(norm(sup.a_plus.vec() - expected));
            w(norm(sup.a_minus.vec() + expected));
        }
        c.suite.add("wm.supremum_collinear", "20 seeded diametral pairs", w.value, 1e-15);
    }

    {
        Worst diagonal;
        for (const DiscPoint& p : c.points) {
            diagonal(std::abs(apollonian_distance(p, p)));
        }
        c.suite.add("wm.diagonal_zero", c.grid, diagonal.value, 0.0);
    }

    Worst triangle;
    double asymmetry = 0.0;
    for (int k = 0; k < 10000; ++k) {
        const DiscPoint x = c.rng.disc_point(0.9);
        const DiscPoint y = c.rng.disc_point(0.9);
        const DiscPoint z = c.rng.disc_point(0.9);
        const double xy = apollonian_distance(x, y);
        triangle(apollonian_distance(x, z) - xy - apollonian_distance(y, z));
        asymmetry = std::max(asymmetry, std::abs(xy - apollonian_distance(y, x)));
    }
    c.suite.add("wm.triangle", "10000 seeded triples |z|<=0.9", triangle.value, 1e-12);
    c.suite.add("wm.asymmetry_witness", "10000 seeded triples |z|<=0.9", asymmetry > 1e-3 ? 0.0 : 1.0, 0.0,
                fmt::format("largest |d(x,y)-d(y,x)| = {}", format_real(asymmetry)));
}

void finsler_checks(Context& c)
{
    Worst order_gap;
    Worst tensor;
    Worst quadratic;
    Worst symmetrized;
    long long not_pd = 0;
    for (const GridCell& cell : c.cells) {
        const double f = finsler_norm(cell.x, cell.xi);
        std::array<double, 3> err{};
        const std::array<double, 3> ts{1e-2, 1e-3, 1e-4};
        for (int i = 0; i < 3; ++i) {
            err[i] = std::abs(busemann_mayer_ratio(cell.x, cell.xi, ts[i]) - f);
        }
        if (err[2] > 1e-13) {
            const double order = std::min(std::log10(err[0] / err[1]), std::log10(err[1] / err[2]));
            order_gap(0.9 - order);
        }

        const FundamentalTensor gc = fundamental_tensor(cell.x, cell.xi, TensorMode::closed);
        const FundamentalTensor gn = fundamental_tensor(cell.x, cell.xi, TensorMode::numeric);
        const double scale = std::max({1.0, std::abs(gc.g11), std::abs(gc.g12), std::abs(gc.g22)});
        tensor(mat_gap(gc.matrix(), gn.matrix()) / scale);
        if (!gc.positive_definite()) {
            ++not_pd;
        }
        quadratic(std::abs(gc.quadratic(cell.xi) - f * f) / (f * f));
        const double alpha = randers_split(cell.x, cell.xi).alpha;
        symmetrized(std::abs(symmetrized_norm(cell.x, cell.xi) - alpha) / alpha);
    }
    c.suite.add("fs.busemann_mayer_order", c.grid + " t=1e-2,1e-3,1e-4", std::max(order_gap.value, 0.0), 0.0,
                "residual = 0.9 - smallest empirical order");
    c.suite.add("fs.tensor_closed_vs_numeric", c.grid, tensor.value, 1e-6);
    c.suite.add("fs.tensor_positive_definite", c.grid, static_cast<double>(not_pd), 0.0, "residual = failing cells");
    c.suite.add("fs.tensor_quadratic", c.grid, quadratic.value, 1e-10);
    c.suite.add("fs.symmetrization", c.grid, symmetrized.value, 1e-14);

    Worst discriminant;
    Worst eccentricity;
    Worst sample;
    Worst potential;
    for (const DiscPoint& p : c.points) {
        const IndicatrixEllipse e = indicatrix_ellipse(p);
        discriminant(std::abs(e.discriminant() + 4.0 * p.gap()));
        eccentricity(std::abs(e.eccentricity - norm(p.vec())));
        for (const TangentVector& xi : indicatrix_sample(p, 64)) {
            sample(std::abs(e.conic_residual(p.vec() + xi)));
            sample(std::abs(finsler_norm(p, xi) - 1.0));
        }
        if (detail::within_radius(p.vec(), 0.95)) {
            const double h = 1e-4;
            potential(potential_check(p, h) / (h * h));
        }
    }
    c.suite.add("fs.indicatrix_discriminant", c.grid, discriminant.value, 1e-12);
    c.suite.add("fs.indicatrix_eccentricity", c.grid, eccentricity.value, 1e-10);
    c.suite.add("fs.indicatrix_sample", c.grid + " 64 samples", sample.value, 1e-12);
    c.suite.add("fs.potential_step2", c.grid + " h=1e-4", potential.value, kPotentialResidualConstant,
                "residual = max gap / h^2");
}

void calculus_checks(Context& c)
{
    RandersModel baseline;
    baseline.flip_tau_sign = c.options.fault == Fault::tau_sign;
    RandersModel corrected = baseline;
    corrected.alpha_curvature = kAlphaGaussianCurvature;

    Worst spray;
    Worst s_routes;
    Worst s_lower;
    Worst s_parallel;
    long long s_strict_failures = 0;
    long long parallel_cells = 0;
    Worst k_lower;
    Worst k_upper{-INFINITY};
    Worst k_upper_inner{-INFINITY};
    Worst k_origin;
    Worst riemann_pub;
    Worst riemann_fix;
    Worst flag_pub;
    Worst ricci_trace;
    Worst annihilate_closed;
    Worst annihilate_numeric;
    Worst tau;
    Worst beta_closed;
    long long skipped = 0;

    for (const GridCell& cell : c.cells) {
        const DiscPoint& x = cell.x;
        const Vec2 xi = cell.xi;
        const double f = finsler_norm(x, xi);
        const double r = norm(x.vec());

        const bool spray_ok = detail::within_radius(x.vec(), 0.95);
        const bool riemann_ok = detail::within_radius(x.vec(), 0.9);
        if (!riemann_ok) {
            ++skipped;
        }

        const double s = s_curvature(x, xi, SCurvatureRoute::closed);
        s_routes(std::abs(s_curvature(x, xi, SCurvatureRoute::general) - s) / s);
        if (spray_ok) {
            const Vec2 gc = spray_closed(x, xi).g_spray;
            const Vec2 gn = spray_numeric(x, xi).g_spray;
            spray(norm(gc - gn) / std::max(norm(gc), 1e-8 * f * f));
            s_routes(std::abs(s_curvature(x, xi, SCurvatureRoute::spray) - s) / s);
        }
        const double margin = s - 1.5 * f;
        s_lower(-margin);
        if (cell.parallel || r == 0.0) {
            ++parallel_cells;
            s_parallel(std::abs(margin));
        } else if (!(margin > 1e-9)) {
            ++s_strict_failures;
        }

        const double k = flag_curvature(x, xi);
        k_lower(-0.25 - k);
        k_upper(k - 2.0);
        if (r < std::numbers::sqrt2 / 2.0) {
            k_upper_inner(k - 2.0);
        }
        if (r == 0.0) {
            k_origin(std::abs(k + 0.25));
        }

        const Mat2 rc = riemann_curvature(x, xi, RiemannRoute::closed, baseline);
        ricci_trace(std::abs(ricci(x, xi) - trace(rc)) / std::max(1.0, std::abs(trace(rc))));
        annihilate_closed(norm(apply(rc, xi)) / std::max(1.0, mat_gap(rc, Mat2{})));
        if (riemann_ok) {
            const Mat2 rn = riemann_curvature(x, xi, RiemannRoute::numeric, baseline);
            const Mat2 rf = riemann_curvature(x, xi, RiemannRoute::closed, corrected);
            const double r_scale = std::max(1.0, mat_gap(rn, Mat2{}));
            riemann_pub(mat_gap(rc, rn) / r_scale);
            riemann_fix(mat_gap(rf, rn) / r_scale);
            flag_pub(std::abs(k - trace(rn) / (f * f)));
            annihilate_numeric(norm(apply(rn, xi)) / r_scale);
        }

        const PhiPsiTau ppt = phi_psi_tau(x, xi, baseline);
        tau(norm(ppt.tau - ppt.tau_closed) / std::max(1.0, norm(ppt.tau_closed)));
        beta_closed(mat_gap(beta_derivatives(x).s, Mat2{}));
    }
    const std::string numeric_grid =
        skipped == 0 ? c.grid : fmt::format("{} ({} cells beyond |x|=0.9 skipped)", c.grid, skipped);
    c.suite.add("cc.spray_dual", c.grid + " |x|<=0.95", spray.value, 1e-5);
    {
        const DiscPoint half(0.5, 0.0);
        Worst w;
        w(norm(spray_closed(DiscPoint::origin(), {1.0, 0.0}).g_spray - Vec2{0.5, 0.0}));
        w(norm(spray_closed(half, {0.0, 1.0}).g_spray - Vec2{-2.0 / 3.0, 5.0 / 6.0}));
        c.suite.add("cc.spray_hand", "G(0,(1,0)), G((0.5,0),(0,1))", w.value, 1e-10);
        c.suite.add("cc.s_hand", "S((0.5,0),(0,1))", std::abs(s_curvature(half, {0.0, 1.0}) - 2.5), 1e-10);
        Worst k;
        k(std::abs(flag_curvature(half, {1.0, 0.0}) + 0.25));
        k(std::abs(flag_curvature(half, {0.0, 1.0}) - 11.0 / 64.0));
        c.suite.add("cc.flag_hand", "K((0.5,0),(1,0)), K((0.5,0),(0,1))", k.value, 1e-10);
    }
    c.suite.add("cc.s_routes", c.grid, s_routes.value, 1e-5);
    c.suite.add("cc.s_lower_bound", c.grid, std::max(s_lower.value, 0.0), 1e-10, "residual = max(3F/2 - S)");
    c.suite.add("cc.s_equality_parallel", c.grid, s_parallel.value, 1e-9,
                fmt::format("{} parallel cells", parallel_cells));
    c.suite.add("cc.s_strict_nonparallel", c.grid, static_cast<double>(s_strict_failures), 0.0,
                "residual = non-parallel cells with S - 3F/2 <= 1e-9");
    c.suite.add("cc.flag_lower_bound", c.grid, std::max(k_lower.value, 0.0), 1e-10, "residual = max(-1/4 - K)");
    c.suite.add("cc.flag_upper_bound", c.grid, std::max(k_upper.value + 1e-12, 0.0), 0.0,
                fmt::format("residual = max(K - 2 + 1e-12, 0); max K - 2 = {}", format_real(k_upper.value)));
    c.suite.add("cc.flag_upper_bound_inner", c.grid + " |x|<1/sqrt2", std::max(k_upper_inner.value + 1e-12, 0.0), 0.0,
                fmt::format("max K - 2 = {}", format_real(k_upper_inner.value)));
    c.suite.add("cc.flag_origin", c.grid + " x=0", k_origin.value, 1e-12);
    c.suite.add("cc.riemann_closed_vs_numeric", numeric_grid, riemann_pub.value, 1e-4,
                "closed route with alpha curvature -1");
    c.suite.add("cc.flag_closed_vs_numeric", numeric_grid, flag_pub.value, 1e-4, "closed route with alpha curvature -1");
    c.suite.add("cc.riemann_alpha4_vs_numeric", numeric_grid, riemann_fix.value, 1e-4,
                "closed route with alpha curvature -4");
    c.suite.add("cc.ricci_trace", c.grid, ricci_trace.value, 1e-10);
    c.suite.add("cc.riemann_annihilates_closed", c.grid, annihilate_closed.value, 1e-10);
    c.suite.add("cc.riemann_annihilates_numeric", numeric_grid, annihilate_numeric.value, 1e-6);
    c.suite.add("cc.tau_vs_closed_form", c.grid, tau.value, 1e-10);
    c.suite.add("cc.beta_closed", c.grid, beta_closed.value, 1e-12);

    RandersModel suppressed;
    suppressed.with_beta = false;
    Worst poincare_numeric;
    Worst poincare_closed;
    Worst poincare_alpha4;
    for (const GridCell& cell : c.cells) {
        if (!detail::within_radius(cell.x.vec(), 0.9)) {
            continue;
        }
        const double alpha = randers_split(cell.x, cell.xi).alpha;
        const double kn = trace(riemann_curvature(cell.x, cell.xi, RiemannRoute::numeric, suppressed)) / (alpha * alpha);
        const double kc = trace(riemann_curvature(cell.x, cell.xi, RiemannRoute::closed, suppressed)) / (alpha * alpha);
        poincare_numeric(std::abs(kn + 1.0));
        poincare_closed(std::abs(kc + 1.0));
        poincare_alpha4(std::abs(kn - kAlphaGaussianCurvature));
    }
    c.suite.add("cc.poincare_limit_numeric", numeric_grid, poincare_numeric.value, 1e-6,
                "numeric route without beta against K = -1");
    c.suite.add("cc.poincare_limit_closed", numeric_grid, poincare_closed.value, 1e-6,
                "closed route without beta against K = -1");
    c.suite.add("cc.poincare_limit_alpha4", numeric_grid, poincare_alpha4.value, 1e-6,
                "numeric route without beta against K = -4");
}

void geodesic_checks(Context& c)
{
    Worst speed;
    Worst carrier;
    for (int k = 0; k < 20; ++k) {
        const DiscPoint x0 = c.rng.disc_point(0.6);
        const Vec2 xi0 = c.rng.direction();
        GeodesicPath path;
        try {
            path = integrate_geodesic(x0, xi0, 1.0);
        } catch (const BoundaryExitError& e) {
            path = e.partial_path();
        }
        for (const PathSample& s : path.samples) {
            speed(std::abs(finsler_norm(DiscPoint(s.x), s.v) - 1.0));
        }
        const GeodesicArc arc = geodesic_arc(DiscPoint(path.samples.front().x), DiscPoint(path.samples.back().x));
        carrier(trajectory_residual(path, arc));
    }
    c.suite.add("gd.unit_speed", "20 seeded launches |x0|<=0.6, t<=1", speed.value, 1e-8);
    c.suite.add("gd.carrier", "20 seeded launches |x0|<=0.6, t<=1", carrier.value, 1e-6);

    Worst length;
    Worst chord;
    Worst additivity;
    for (int k = 0; k < 50; ++k) {
        const DiscPoint z1 = c.rng.disc_point(0.8);
        const DiscPoint z2 = c.rng.disc_point(0.8);
        const double d = apollonian_distance(z1, z2);
        length(std::abs(distance_via_length(z1, z2) - d));
        if (!is_diametral(z1, z2)) {
            GeodesicPath line;
            for (int i = 0; i <= 1024; ++i) {
                const double s = i / 1024.0;
                line.samples.push_back({s, z1.vec() + s * (z2.vec() - z1.vec()), z2.vec() - z1.vec()});
            }
            chord(d - finsler_length(line));
        }
        const GeodesicPath seg = hyperbolic_segment(z1, z2, 64);
        const DiscPoint mid(seg.samples[25].x);
        additivity(std::abs(distance_via_length(z1, mid) + distance_via_length(mid, z2) -
                            distance_via_length(z1, z2, 2048)));
    }
    c.suite.add("gd.length_distance", "50 seeded pairs |z|<=0.8, n=1024", length.value, 1e-6);
    c.suite.add("gd.chord_suboptimal", "50 seeded pairs |z|<=0.8, n=1024", std::max(chord.value, 0.0), 1e-12,
                "residual = max(distance - chord length)");
    c.suite.add("gd.additivity", "50 seeded pairs |z|<=0.8", additivity.value, 1e-9);

    const DiscPoint o = DiscPoint::origin();
    const DiscPoint half(0.5, 0.0);
    Worst radial;
    radial(std::abs(distance_via_length(o, half) - std::log(2.0)));
    radial(std::abs(distance_via_length(half, o) - std::log(1.5)));
    c.suite.add("gd.radial_lengths", "(0,0)<->(0.5,0)", radial.value, 1e-8);
}

void navigation_checks(Context& c)
{
    Worst roundtrip;
    Worst pullback;
    Worst tangent;
    Worst fd;
    for (const GridCell& cell : c.cells) {
        const double f = finsler_norm(cell.x, cell.xi);
        roundtrip(std::abs(zermelo_reconstruct(zermelo_data(cell.x), cell.xi) - f) / std::max(1.0, f));
        pullback(std::abs(pullback_check(cell.x, cell.xi).first / f - 2.0));
        const Vec3 push = hyperboloid_pushforward(cell.x, cell.xi);
        tangent(std::abs(lorentz_inner(push, hyperboloid_map(cell.x).vec())));
        const Vec3 num = hyperboloid_pushforward_numeric(cell.x, cell.xi);
        const double scale = std::max({1.0, std::abs(push[0]), std::abs(push[1]), std::abs(push[2])});
        for (int i = 0; i < 3; ++i) {
            fd(std::abs(push[i] - num[i]) / scale);
        }
    }
    Worst wind;
    Worst constraint;
    long long h_not_pd = 0;
    for (const DiscPoint& p : c.points) {
        const ZermeloData z = zermelo_data(p);
        wind(std::abs(z.wind_norm_sq - p.norm_sq()));
        if (!(z.h[0][0] > 0.0 && det(z.h) > 0.0)) {
            ++h_not_pd;
        }
        const Vec3 v = hyperboloid_map(p).vec();
        constraint(std::abs(lorentz_inner(v, v) + 1.0));
    }
    c.suite.add("nv.roundtrip", c.grid, roundtrip.value, 1e-12);
    c.suite.add("nv.wind_norm", c.grid, wind.value, 1e-12);
    c.suite.add("nv.sea_metric_positive", c.grid, static_cast<double>(h_not_pd), 0.0, "residual = failing points");
    c.suite.add("nv.hyperboloid_constraint", c.grid, constraint.value, 1e-12);
    c.suite.add("nv.pushforward_tangent", c.grid, tangent.value, 1e-10);
    c.suite.add("nv.pushforward_vs_numeric", c.grid, fd.value, 1e-7);
    c.suite.add("nv.pullback_ratio", c.grid, pullback.value, 1e-10, "pullback / F against 2");
}

}  // namespace

Fault parse_fault(const std::string& name)
{
    if (name == "none" || name.empty()) {
        return Fault::none;
    }
    if (name == "tau-sign") {
        return Fault::tau_sign;
    }
    throw UsageError("unknown fault '" + name + "' (expected none or tau-sign)");
}

bool ValidationReport::all_pass() const
{
    return failures() == 0;
}

std::size_t ValidationReport::failures() const
{
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.pass; }));
}

std::string ValidationReport::body() const
{
    std::string out = fmt::format("seed = {}\nchecks = {}\nfailures = {}\n", seed, checks.size(), failures());
    out += "status\tcheck\tmax_residual\ttolerance\tgrid\tnote\n";
    for (const CheckResult& c : checks) {
        out += fmt::format("{}\t{}\t{}\t{}\t{}\t{}\n", c.pass ? "PASS" : "FAIL", c.id, format_real(c.max_residual),
                           format_real(c.tolerance), c.grid, c.note);
    }
    return out;
}

ValidationReport run_validation(const ValidationOptions& options)
{
    if (!(options.tol_scale > 0.0)) {
        throw UsageError("tol-scale must be positive");
    }
    const auto start = std::chrono::steady_clock::now();
    ValidationReport report;
    report.seed = options.seed;
    Suite suite(options, report);
    SeededRng rng(options.seed);
    Context context{options, suite, rng, format_grid_spec(options.grid), grid_points(options.grid),
                    grid_cells(options.grid)};

    weakmetric_checks(context);
    finsler_checks(context);
    calculus_checks(context);
    geodesic_checks(context);
    navigation_checks(context);

    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace apollonian::cli
