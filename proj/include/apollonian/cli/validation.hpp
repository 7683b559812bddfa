#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "apollonian/cli/grid.hpp"

namespace apollonian::cli {

enum class Fault { none, tau_sign };

Fault parse_fault(const std::string& name);

struct ValidationOptions {
    std::uint64_t seed = 20240601;
    GridSpec grid;
    double tol_scale = 1.0;
    Fault fault = Fault::none;
};

struct CheckResult {
    std::string id;
    std::string grid;     // grid spec or sample description
    double max_residual;
    double tolerance;
    bool pass;            // max_residual <= tolerance
    std::string note;     // empty unless the check needs context
};

struct ValidationReport {
    std::vector<CheckResult> checks;
    std::uint64_t seed = 0;
    double wall_seconds = 0.0;

    bool all_pass() const;
    std::size_t failures() const;
    /// Everything except the wall time, so equal seeds give equal bodies.
    std::string body() const;
};

/// Runs the property suites of every module over the grid and seeded
/// samples.
ValidationReport run_validation(const ValidationOptions& options);

}  // namespace apollonian::cli
