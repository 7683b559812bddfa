#pragma once

#include <string>
#include <vector>

#include "apollonian/types.hpp"

namespace apollonian::cli {

/// Minimal SVG writer in disc coordinates: the square [-extent, extent]^2
/// maps onto a pixels x pixels canvas with the x2 axis pointing up.
class SvgCanvas {
public:
    explicit SvgCanvas(double extent = 1.1, int pixels = 640);

    void circle(Vec2 center, double radius, const std::string& stroke, double width = 1.5,
                const std::string& fill = "none");
    void polyline(const std::vector<Vec2>& points, const std::string& stroke, double width = 1.5,
                  bool closed = false);
    void marker(Vec2 p, const std::string& fill, double radius_px = 4.0);
    void square(Vec2 center, double side, const std::string& fill);
    void label(Vec2 p, const std::string& text, double size_px = 12.0);

    std::string render() const;

private:
    double sx(double x) const;
    double sy(double y) const;
    double scale() const;

    double extent_;
    int pixels_;
    std::vector<std::string> items_;
};

}  // namespace apollonian::cli
