#pragma once

#include <array>
#include <cstddef>

// Fourth-order central difference stencils over a point in R^N.
//
// Second derivatives taken with a two-point stencil at h ~ 1e-5 carry a
// rounding floor of eps / h^2 ~ 2e-6 relative, which is the same size as
// the tolerances the oracles are checked against. The five-point stencils
// below reach O(h^4) truncation at h ~ 1e-3, where rounding sits near 1e-10.
namespace apollonian::numdiff {

template <std::size_t N>
using Point = std::array<double, N>;

inline constexpr std::array<double, 4> kFirstOffsets{-2.0, -1.0, 1.0, 2.0};
inline constexpr std::array<double, 4> kFirstWeights{1.0 / 12.0, -8.0 / 12.0, 8.0 / 12.0, -1.0 / 12.0};

/// df/dp_i.
template <std::size_t N, class F>
double partial(F&& f, Point<N> p, std::size_t i, double h)
{
    double sum = 0.0;
    const double base = p[i];
    for (std::size_t k = 0; k < 4; ++k) {
        p[i] = base + kFirstOffsets[k] * h;
        sum += kFirstWeights[k] * f(p);
    }
    return sum / h;
}

/// d^2 f / dp_i dp_j. The diagonal case uses the five-point second
/// difference, the mixed case nests two first-derivative stencils.
template <std::size_t N, class F>
double second_partial(F&& f, Point<N> p, std::size_t i, std::size_t j, double hi, double hj)
{
    if (i == j) {
        const double base = p[i];
        auto at = [&](double offset) {
            p[i] = base + offset * hi;
            return f(p);
        };
        const double value = -at(2.0) + 16.0 * at(1.0) - 30.0 * at(0.0) + 16.0 * at(-1.0) - at(-2.0);
        return value / (12.0 * hi * hi);
    }
    double sum = 0.0;
    const double base_i = p[i];
    const double base_j = p[j];
    for (std::size_t a = 0; a < 4; ++a) {
        for (std::size_t b = 0; b < 4; ++b) {
            p[i] = base_i + kFirstOffsets[a] * hi;
            p[j] = base_j + kFirstOffsets[b] * hj;
            sum += kFirstWeights[a] * kFirstWeights[b] * f(p);
        }
    }
    return sum / (hi * hj);
}

}  // namespace apollonian::numdiff
