#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "apollonian/cli/record.hpp"
#include "apollonian/cli/validation.hpp"

namespace apollonian::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidationFailure = 1;
inline constexpr int kExitUsage = 2;  // also domain and degenerate-input errors
inline constexpr int kExitBoundary = 3;

struct CommonOptions {
    OutputFormat format = OutputFormat::text;
    std::optional<std::string> out_path;
};

struct GeodesicOptions {
    double t_end = 1.0;
    double step = 1e-3;
    double boundary_margin = 0.05;
};

struct FigureOptions {
    std::vector<Vec2> points;                     // indicatrix
    std::vector<std::pair<Vec2, Vec2>> pairs;     // geodesics
    GridSpec grid;                                // curvature-field
};

/// Writes the record for dist. Exit status is returned; errors propagate.
int cmd_dist(Vec2 z1, Vec2 z2, const CommonOptions& common, std::ostream& out);

int cmd_curvature(Vec2 x, Vec2 xi, const CommonOptions& common, std::ostream& out);

/// Path table (t, x1, x2, v1, v2, F, residual) to --out, or to out when no
/// path is given; with --out a summary record goes to out. On a boundary
/// exit the partial path is still written and kExitBoundary returned.
int cmd_geodesic(Vec2 x0, Vec2 xi0, const GeodesicOptions& options, const CommonOptions& common, std::ostream& out,
                 std::ostream& err);

/// Report body to out (or --out), wall time to err.
int cmd_validate(const ValidationOptions& options, const CommonOptions& common, std::ostream& out,
                 std::ostream& err);

/// kind: indicatrix, geodesics, curvature-field. Writes the SVG to --out
/// (default figure-<kind>.svg) and a record describing it to out.
int cmd_figure(const std::string& kind, const FigureOptions& options, const CommonOptions& common,
               std::ostream& out);

/// Runs body, mapping library errors to exit statuses with a one-line
/// diagnostic on err.
int run_guarded(const std::function<int()>& body, std::ostream& err);

}  // namespace apollonian::cli
