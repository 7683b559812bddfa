#include "apollonian/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>

#include <fmt/format.h>

#include "apollonian/calculus.hpp"
#include "apollonian/cli/svg.hpp"
#include "apollonian/finsler.hpp"
#include "apollonian/geodesic.hpp"
#include "apollonian/weakmetric.hpp"

namespace apollonian::cli {

namespace {

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw UsageError("cannot open '" + path + "' for writing");
    }
    file << content;
    if (!file) {
        throw UsageError("failed writing '" + path + "'");
    }
}

void add_arc(Record& record, const std::string& key, const GeodesicArc& arc)
{
    if (const auto* d = std::get_if<Diameter>(&arc)) {
        record.add(key + ".kind", "diameter");
        record.add(key + ".direction", d->direction);
    } else {
        const auto& c = std::get<OrthoCircle>(arc);
        record.add(key + ".kind", "circle");
        record.add(key + ".center", c.center);
        record.add(key + ".radius", c.radius);
    }
}

// Carrier from a_minus to a_plus through the disc, for drawing.
std::vector<Vec2> full_carrier(const SupremumResult& sup, int n)
{
    std::vector<Vec2> points;
    if (const auto* d = std::get_if<Diameter>(&sup.arc)) {
        points = {-d->direction, d->direction};
        return points;
    }
    const auto& c = std::get<OrthoCircle>(sup.arc);
    const Vec2 from = sup.a_minus.vec() - c.center;
    const Vec2 to = sup.a_plus.vec() - c.center;
    const double t0 = std::atan2(from.y, from.x);
    const double sweep = std::remainder(std::atan2(to.y, to.x) - t0, 2.0 * std::numbers::pi);
    for (int k = 0; k <= n; ++k) {
        const double t = t0 + sweep * k / n;
        points.push_back(c.center + c.radius * Vec2{std::cos(t), std::sin(t)});
    }
    return points;
}

std::string heat_colour(double k, double lo, double hi)
{
    const double s = hi > lo ? std::clamp((k - lo) / (hi - lo), 0.0, 1.0) : 0.5;
    const int red = static_cast<int>(std::lround(255.0 * s));
    const int blue = static_cast<int>(std::lround(255.0 * (1.0 - s)));
    return fmt::format("rgb({},64,{})", red, blue);
}

void figure_indicatrix(const FigureOptions& options, SvgCanvas& canvas, Record& record)
{
    std::vector<Vec2> points = options.points;
    if (points.empty()) {
        points = {{0.3, 0.3}, {0.5, 0.5}, {0.68, 0.68}};
    }
    const std::vector<std::string> colours{"#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
    canvas.circle({0.0, 0.0}, 1.0, "black", 1.0);
    record.add("count", static_cast<long long>(points.size()));
    for (std::size_t i = 0; i < points.size(); ++i) {
        const DiscPoint x(points[i]);
        const IndicatrixEllipse e = indicatrix_ellipse(x);
        std::vector<Vec2> curve;
        for (const TangentVector& xi : indicatrix_sample(x, 360)) {
            curve.push_back(x.vec() + xi);  // the conic lives in x + xi
        }
        const std::string& colour = colours[i % colours.size()];
        canvas.polyline(curve, colour, 1.5, true);
        canvas.marker(x.vec(), colour, 3.0);
        canvas.label(x.vec() + Vec2{0.03, 0.03}, fmt::format("({:g}, {:g})", x.x1(), x.x2()), 11.0);
        const std::string key = fmt::format("ellipse.{}", i);
        record.add(key + ".point", x.vec());
        record.add(key + ".eccentricity", e.eccentricity);
        record.add(key + ".semi_major", e.semi_major);
        record.add(key + ".semi_minor", e.semi_minor);
        record.add(key + ".center", e.center);
    }
}

void figure_geodesics(const FigureOptions& options, SvgCanvas& canvas, Record& record)
{
    std::vector<std::pair<Vec2, Vec2>> pairs = options.pairs;
    if (pairs.empty()) {
        pairs = {{{0.0, 0.5}, {0.5, 0.0}}};
    }
    canvas.circle({0.0, 0.0}, 1.0, "black", 1.0);
    record.add("count", static_cast<long long>(pairs.size()));
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const DiscPoint z1(pairs[i].first);
        const DiscPoint z2(pairs[i].second);
        const SupremumResult sup = supremum_points(z1, z2);
        std::vector<Vec2> segment;
        for (const PathSample& s : hyperbolic_segment(z1, z2, 128).samples) {
            segment.push_back(s.x);
        }
        canvas.polyline(full_carrier(sup, 256), "#999999", 1.0);
        canvas.polyline(segment, "#1f77b4", 2.5);
        canvas.marker(z1.vec(), "black", 3.5);
        canvas.marker(z2.vec(), "black", 3.5);
        canvas.marker(sup.a_plus.vec(), "#d62728", 5.0);
        canvas.marker(sup.a_minus.vec(), "#2ca02c", 5.0);
        canvas.label(sup.a_plus.vec() * 1.04, "a+", 12.0);
        canvas.label(sup.a_minus.vec() * 1.04, "a-", 12.0);
        const std::string key = fmt::format("pair.{}", i);
        record.add(key + ".z1", z1.vec());
        record.add(key + ".z2", z2.vec());
        add_arc(record, key + ".arc", sup.arc);
        record.add(key + ".a_plus", sup.a_plus.vec());
        record.add(key + ".a_minus", sup.a_minus.vec());
    }
}

void figure_curvature_field(const FigureOptions& options, SvgCanvas& canvas, Record& record)
{
    const GridSpec& grid = options.grid;
    const double spacing = grid.r_max / grid.n_radii;
    struct Cell {
        Vec2 x;
        double k;
    };
    std::vector<Cell> cells;
    double lo = INFINITY;
    double hi = -INFINITY;
    for (int i = -grid.n_radii; i <= grid.n_radii; ++i) {
        for (int j = -grid.n_radii; j <= grid.n_radii; ++j) {
            const Vec2 p{i * spacing, j * spacing};
            if (!detail::within_radius(p, grid.r_max)) {
                continue;
            }
            const DiscPoint x(p);
            double mean = 0.0;
            for (int d = 0; d < grid.n_directions; ++d) {
                const double t = 2.0 * std::numbers::pi * d / grid.n_directions;
                mean += flag_curvature(x, {std::cos(t), std::sin(t)});
            }
            mean /= grid.n_directions;
            lo = std::min(lo, mean);
            hi = std::max(hi, mean);
            cells.push_back({p, mean});
        }
    }
    for (const Cell& c : cells) {
        canvas.square(c.x, spacing, heat_colour(c.k, lo, hi));
    }
    canvas.circle({0.0, 0.0}, 1.0, "black", 1.0);
    canvas.label({-1.05, -1.07}, fmt::format("mean K over {} directions: {:.4f} (blue) to {:.4f} (red)",
                                              grid.n_directions, lo, hi),
                 12.0);
    record.add("grid", format_grid_spec(grid));
    record.add("cells", static_cast<long long>(cells.size()));
    record.add("mean_flag.min", lo);
    record.add("mean_flag.max", hi);
}

}  // namespace

int cmd_dist(Vec2 z1_in, Vec2 z2_in, const CommonOptions& common, std::ostream& out)
{
    const DiscPoint z1(z1_in);
    const DiscPoint z2(z2_in);
    Record record;
    record.add("z1", z1.vec());
    record.add("z2", z2.vec());
    record.add("forward", apollonian_distance(z1, z2));
    record.add("backward", apollonian_distance(z2, z1));
    record.add("barbilian", barbilian_distance(z1, z2));
    if (z1 == z2) {
        record.add("supremum", "degenerate");
    } else {
        const SupremumResult sup = supremum_points(z1, z2);
        record.add("supremum", "ok");
        record.add("a_plus", sup.a_plus.vec());
        record.add("a_minus", sup.a_minus.vec());
        record.add("m_value", sup.m_value);
        add_arc(record, "arc", sup.arc);
    }
    out << record.render(common.format);
    return kExitOk;
}

int cmd_curvature(Vec2 x_in, Vec2 xi, const CommonOptions& common, std::ostream& out)
{
    const DiscPoint x(x_in);
    const CurvatureReport report = curvature_report(x, xi);
    const RandersSplit split = randers_split(x, xi);
    const double f = report.f_value;

    Record record;
    record.add("x", x.vec());
    record.add("xi", xi);
    record.add("F", f);
    record.add("alpha", split.alpha);
    record.add("beta", split.beta);
    record.add("S", report.s_curv);
    record.add("S_general", report.s_general);
    if (report.s_spray) {
        record.add("S_spray", *report.s_spray);
    }
    record.add("Ric", report.ricci);
    record.add("K", report.flag);
    record.add("riemann", report.riemann);
    record.add("residual.S_general", std::abs(report.s_general - report.s_curv) / report.s_curv);
    if (report.s_spray) {
        record.add("residual.S_spray", std::abs(*report.s_spray - report.s_curv) / report.s_curv);
    }
    if (report.riemann_numeric) {
        RandersModel corrected;
        corrected.alpha_curvature = kAlphaGaussianCurvature;
        const Mat2 rf = riemann_curvature(x, xi, RiemannRoute::closed, corrected);
        double default_gap = 0.0;
        double corrected_gap = 0.0;
        for (int i = 0; i < 2; ++i) {
            for (int k = 0; k < 2; ++k) {
                default_gap = std::max(default_gap, std::abs(report.riemann[i][k] - (*report.riemann_numeric)[i][k]));
                corrected_gap = std::max(corrected_gap, std::abs(rf[i][k] - (*report.riemann_numeric)[i][k]));
            }
        }
        record.add("riemann_numeric", *report.riemann_numeric);
        record.add("K_numeric", *report.flag_numeric);
        record.add("riemann_alpha4", rf);
        record.add("K_alpha4", trace(rf) / (f * f));
        record.add("residual.riemann_numeric", default_gap);
        record.add("residual.riemann_alpha4", corrected_gap);
    } else {
        record.add("riemann_numeric", "skipped (|x| > 0.9)");
    }
    record.add("margin.S_minus_3F_over_2", report.s_curv - 1.5 * f);
    record.add("margin.K_plus_quarter", report.flag + 0.25);
    record.add("margin.two_minus_K", 2.0 - report.flag);
    record.add("phi", report.phi);
    record.add("psi", report.psi);
    record.add("tau", report.tau);
    record.add("sigma_bh", report.sigma_bh);
    record.add("distortion", report.distortion);
    out << record.render(common.format);
    return kExitOk;
}

int cmd_geodesic(Vec2 x0_in, Vec2 xi0, const GeodesicOptions& options, const CommonOptions& common, std::ostream& out,
                 std::ostream& err)
{
    const DiscPoint x0(x0_in);
    const GeodesicArc arc = tangent_arc(x0, xi0);
    IntegratorConfig config;
    config.step = options.step;
    config.boundary_margin = options.boundary_margin;

    GeodesicPath path;
    int status = kExitOk;
    std::string exit_message;
    try {
        path = integrate_geodesic(x0, xi0, options.t_end, config);
    } catch (const BoundaryExitError& e) {
        path = e.partial_path();
        status = kExitBoundary;
        exit_message = e.what();
    }

    Table table({"t", "x1", "x2", "v1", "v2", "F", "residual"});
    double max_residual = 0.0;
    double max_speed_error = 0.0;
    for (const PathSample& s : path.samples) {
        const double f = finsler_norm(DiscPoint(s.x), s.v);
        const double r = carrier_residual(arc, s.x);
        max_residual = std::max(max_residual, r);
        max_speed_error = std::max(max_speed_error, std::abs(f - 1.0));
        table.add_row({s.t, s.x.x, s.x.y, s.v.x, s.v.y, f, r});
    }

    if (common.out_path) {
        write_file(*common.out_path, table.render());
        Record record;
        record.add("path", *common.out_path);
        record.add("samples", static_cast<long long>(table.rows()));
        record.add("step", path.step);
        record.add("method", path.method);
        record.add("t_last", path.samples.back().t);
        record.add("boundary_exit", status == kExitBoundary);
        record.add("max_residual", max_residual);
        record.add("max_speed_error", max_speed_error);
        add_arc(record, "arc", arc);
        out << record.render(common.format);
    } else {
        out << table.render();
    }
    if (status == kExitBoundary) {
        err << "boundary exit: " << exit_message << '\n';
    }
    return status;
}

int cmd_validate(const ValidationOptions& options, const CommonOptions& common, std::ostream& out, std::ostream& err)
{
    const ValidationReport report = run_validation(options);
    if (common.out_path) {
        write_file(*common.out_path, report.body());
    } else {
        out << report.body();
    }
    err << fmt::format("wall_time_seconds = {:.3f}\n", report.wall_seconds);
    return report.all_pass() ? kExitOk : kExitValidationFailure;
}

int cmd_figure(const std::string& kind, const FigureOptions& options, const CommonOptions& common, std::ostream& out)
{
    SvgCanvas canvas;
    Record record;
    record.add("kind", kind);
    if (kind == "indicatrix") {
        figure_indicatrix(options, canvas, record);
    } else if (kind == "geodesics") {
        figure_geodesics(options, canvas, record);
    } else if (kind == "curvature-field") {
        figure_curvature_field(options, canvas, record);
    } else {
        throw UsageError("unknown figure kind '" + kind + "' (expected indicatrix, geodesics or curvature-field)");
    }
    const std::string path = common.out_path.value_or("figure-" + kind + ".svg");
    write_file(path, canvas.render());
    record.add("output", path);
    out << record.render(common.format);
    return kExitOk;
}

int run_guarded(const std::function<int()>& body, std::ostream& err)
{
    try {
        return body();
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
    } catch (const ZeroVectorError& e) {
        err << "zero vector: " << e.what() << '\n';
    } catch (const DegenerateInputError& e) {
        err << "degenerate input: " << e.what() << '\n';
    } catch (const ImaginaryNormError& e) {
        err << "imaginary norm: " << e.what() << '\n';
    } catch (const UsageError& e) {
        err << "usage: " << e.what() << '\n';
    } catch (const std::invalid_argument& e) {
        err << "invalid argument: " << e.what() << '\n';
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return kExitUsage;
}

}  // namespace apollonian::cli
