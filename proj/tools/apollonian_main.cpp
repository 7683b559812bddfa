#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "apollonian/cli/commands.hpp"
#include "apollonian/geodesic.hpp"

using namespace apollonian;
using namespace apollonian::cli;

namespace {

void require_count(const std::vector<double>& values, std::size_t n, const char* what)
{
    if (values.size() != n) {
        throw UsageError(std::string(what) + " expects " + std::to_string(n) + " numbers, got " +
                         std::to_string(values.size()));
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Apollonian weak metric and its Randers-type Finsler structure on the unit disc"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    std::string out_path;
    app.add_option("--format", format, "Record format: text or tabular")->check(CLI::IsMember({"text", "tabular"}));
    app.add_option("--out", out_path, "Output file (path table, report or figure)");

    std::vector<double> dist_values;
    auto* dist = app.add_subcommand("dist", "Apollonian distance both ways, supremum points and carrier");
    dist->add_option("coords", dist_values, "z1x z1y z2x z2y")->required();

    std::vector<double> curv_values;
    auto* curvature = app.add_subcommand("curvature", "S, Riemann, Ricci and flag curvature at (x, xi)");
    curvature->add_option("coords", curv_values, "x1 x2 xi1 xi2")->required();

    std::vector<double> geo_values;
    std::string toward;
    GeodesicOptions geo_options;
    auto* geodesic = app.add_subcommand("geodesic", "Integrate a unit-speed geodesic and write the sampled path");
    geodesic->add_option("values", geo_values, "x1 x2 xi1 xi2 t_end, or x1 x2 t_end with --toward")->required();
    geodesic->add_option("--toward", toward, "Aim along the carrier towards the point 'x,y'");
    geodesic->add_option("--step", geo_options.step, "Integrator step");
    geodesic->add_option("--margin", geo_options.boundary_margin, "Stop once |x| > 1 - margin");

    std::uint64_t seed = ValidationOptions{}.seed;
    std::string grid_text = format_grid_spec(GridSpec{});
    double tol_scale = 1.0;
    std::string fault = "none";
    auto* validate = app.add_subcommand("validate", "Run every property suite over the grid and seeded samples");
    validate->add_option("--seed", seed, "Seed for the sampled suites");
    validate->add_option("--grid", grid_text, "Grid spec RxAxD@rmax");
    validate->add_option("--tol-scale", tol_scale, "Multiply every tolerance");
    validate->add_option("--inject-fault", fault, "none or tau-sign (negative control)");

    std::string kind;
    std::vector<std::string> points;
    std::vector<std::string> pairs;
    std::string figure_grid = "12x1x8@0.9";
    auto* figure = app.add_subcommand("figure", "Write an SVG figure");
    figure->add_option("kind", kind, "indicatrix, geodesics or curvature-field")->required();
    figure->add_option("--points", points, "Base points 'x,y' for indicatrix");
    figure->add_option("--pair", pairs, "Point pairs 'x,y x,y' for geodesics");
    figure->add_option("--grid", figure_grid, "Lattice for curvature-field: RxAxD@rmax (R cells per radius, D directions)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    return run_guarded(
        [&]() -> int {
            CommonOptions common;
            common.format = parse_format(format);
            if (!out_path.empty()) {
                common.out_path = out_path;
            }
            if (*dist) {
                require_count(dist_values, 4, "dist");
                return cmd_dist({dist_values[0], dist_values[1]}, {dist_values[2], dist_values[3]}, common, std::cout);
            }
            if (*curvature) {
                require_count(curv_values, 4, "curvature");
                return cmd_curvature({curv_values[0], curv_values[1]}, {curv_values[2], curv_values[3]}, common,
                                     std::cout);
            }
            if (*geodesic) {
                Vec2 x0;
                Vec2 xi0;
                if (!toward.empty()) {
                    require_count(geo_values, 3, "geodesic --toward");
                    x0 = {geo_values[0], geo_values[1]};
                    xi0 = carrier_direction(DiscPoint(x0), DiscPoint(parse_pair(toward)));
                    geo_options.t_end = geo_values[2];
                } else {
                    require_count(geo_values, 5, "geodesic");
                    x0 = {geo_values[0], geo_values[1]};
                    xi0 = {geo_values[2], geo_values[3]};
                    geo_options.t_end = geo_values[4];
                }
                return cmd_geodesic(x0, xi0, geo_options, common, std::cout, std::cerr);
            }
            if (*validate) {
                ValidationOptions options;
                options.seed = seed;
                options.grid = parse_grid_spec(grid_text);
                options.tol_scale = tol_scale;
                options.fault = parse_fault(fault);
                return cmd_validate(options, common, std::cout, std::cerr);
            }
            FigureOptions options;
            for (const std::string& p : points) {
                options.points.push_back(parse_pair(p));
            }
            if (pairs.size() % 2 != 0) {
                throw UsageError("--pair expects points in twos");
            }
            for (std::size_t i = 0; i < pairs.size(); i += 2) {
                options.pairs.emplace_back(parse_pair(pairs[i]), parse_pair(pairs[i + 1]));
            }
            options.grid = parse_grid_spec(figure_grid);
            return cmd_figure(kind, options, common, std::cout);
        },
        std::cerr);
}
