#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "apollonian/types.hpp"

namespace apollonian::cli {

/// Sweep over the disc: the origin plus n_radii radii r_max * i / n_radii,
/// each at n_angles equally spaced angles, paired with n_directions unit
/// tangent directions at equally spaced angles. When the two angle sets
/// overlap (equal counts, say) the grid contains parallel and antiparallel
/// (x, xi) pairs.
struct GridSpec {
    int n_radii = 9;
    int n_angles = 16;
    int n_directions = 16;
    double r_max = 0.9;
};

/// "RxAxD@rmax", e.g. "9x16x16@0.9". "@rmax" may be omitted.
GridSpec parse_grid_spec(const std::string& text);
std::string format_grid_spec(const GridSpec& spec);

struct GridCell {
    DiscPoint x;
    Vec2 xi;
    bool parallel;  // |x cross xi| <= 1e-12 |x| |xi| with x != 0
};

std::vector<DiscPoint> grid_points(const GridSpec& spec);
std::vector<GridCell> grid_cells(const GridSpec& spec);

/// mt19937_64 with a fixed double conversion, so draws are identical
/// across standard libraries.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Uniform with respect to area in the disc of radius r_max.
    DiscPoint disc_point(double r_max);
    /// Unit vector at a uniform angle.
    Vec2 direction();

private:
    std::mt19937_64 engine_;
};

}  // namespace apollonian::cli
