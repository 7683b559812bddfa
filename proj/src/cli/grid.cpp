#include "apollonian/cli/grid.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "apollonian/cli/record.hpp"

namespace apollonian::cli {

namespace {

int parse_count(const std::string& text, const std::string& whole)
{
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || text.empty() || value < 1) {
        throw UsageError("bad grid spec '" + whole + "' (expected RxAxD@rmax with positive counts)");
    }
    return value;
}

Vec2 unit(double angle) { return {std::cos(angle), std::sin(angle)}; }

}  // namespace

GridSpec parse_grid_spec(const std::string& text)
{
    GridSpec spec;
    std::string counts = text;
    const auto at = text.find('@');
    if (at != std::string::npos) {
        counts = text.substr(0, at);
        const std::string radius = text.substr(at + 1);
        std::size_t used = 0;
        try {
            spec.r_max = std::stod(radius, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != radius.size() || radius.empty() || !(spec.r_max > 0.0 && spec.r_max < 1.0)) {
            throw UsageError("bad grid spec '" + text + "' (rmax must lie in (0, 1))");
        }
    }
    const auto x1 = counts.find('x');
    const auto x2 = x1 == std::string::npos ? std::string::npos : counts.find('x', x1 + 1);
    if (x2 == std::string::npos) {
        throw UsageError("bad grid spec '" + text + "' (expected RxAxD@rmax)");
    }
    spec.n_radii = parse_count(counts.substr(0, x1), text);
    spec.n_angles = parse_count(counts.substr(x1 + 1, x2 - x1 - 1), text);
    spec.n_directions = parse_count(counts.substr(x2 + 1), text);
    return spec;
}

std::string format_grid_spec(const GridSpec& spec)
{
    return fmt::format("{}x{}x{}@{}", spec.n_radii, spec.n_angles, spec.n_directions, spec.r_max);
}

std::vector<DiscPoint> grid_points(const GridSpec& spec)
{
    std::vector<DiscPoint> points{DiscPoint::origin()};
    for (int i = 1; i <= spec.n_radii; ++i) {
        const double r = spec.r_max * i / spec.n_radii;
        for (int j = 0; j < spec.n_angles; ++j) {
            points.emplace_back(r * unit(2.0 * std::numbers::pi * j / spec.n_angles));
        }
    }
    return points;
}

std::vector<GridCell> grid_cells(const GridSpec& spec)
{
    std::vector<GridCell> cells;
    for (const DiscPoint& x : grid_points(spec)) {
        for (int k = 0; k < spec.n_directions; ++k) {
            const Vec2 xi = unit(2.0 * std::numbers::pi * k / spec.n_directions);
            const double r = norm(x.vec());
            const bool parallel = r > 0.0 && std::abs(cross(x.vec(), xi)) <= 1e-12 * r;
            cells.push_back({x, xi, parallel});
        }
    }
    return cells;
}

DiscPoint SeededRng::disc_point(double r_max)
{
    const double r = r_max * std::sqrt(uniform());
    const double angle = 2.0 * std::numbers::pi * uniform();
    return DiscPoint(r * unit(angle));
}

Vec2 SeededRng::direction()
{
    return unit(2.0 * std::numbers::pi * uniform());
}

}  // namespace apollonian::cli
