#include "apollonian/cli/svg.hpp"

#include <fmt/format.h>

namespace apollonian::cli {

SvgCanvas::SvgCanvas(double extent, int pixels) : extent_(extent), pixels_(pixels) {}

double SvgCanvas::scale() const { return pixels_ / (2.0 * extent_); }
double SvgCanvas::sx(double x) const { return (x + extent_) * scale(); }
double SvgCanvas::sy(double y) const { return (extent_ - y) * scale(); }

void SvgCanvas::circle(Vec2 center, double radius, const std::string& stroke, double width, const std::string& fill)
{
    items_.push_back(fmt::format(R"(<circle cx="{:.4f}" cy="{:.4f}" r="{:.4f}" stroke="{}" stroke-width="{}" fill="{}"/>)",
                                 sx(center.x), sy(center.y), radius * scale(), stroke, width, fill));
}

void SvgCanvas::polyline(const std::vector<Vec2>& points, const std::string& stroke, double width, bool closed)
{
    std::string coords;
    for (const Vec2& p : points) {
        coords += fmt::format("{:.4f},{:.4f} ", sx(p.x), sy(p.y));
    }
    if (!coords.empty()) {
        coords.pop_back();
    }
    items_.push_back(fmt::format(R"(<{} points="{}" stroke="{}" stroke-width="{}" fill="none"/>)",
                                 closed ? "polygon" : "polyline", coords, stroke, width));
}

void SvgCanvas::marker(Vec2 p, const std::string& fill, double radius_px)
{
    items_.push_back(fmt::format(R"(<circle cx="{:.4f}" cy="{:.4f}" r="{}" fill="{}"/>)", sx(p.x), sy(p.y), radius_px,
                                 fill));
}

void SvgCanvas::square(Vec2 center, double side, const std::string& fill)
{
    const double px = side * scale();
    items_.push_back(fmt::format(R"(<rect x="{:.4f}" y="{:.4f}" width="{:.4f}" height="{:.4f}" fill="{}"/>)",
                                 sx(center.x) - px / 2, sy(center.y) - px / 2, px, px, fill));
}

void SvgCanvas::label(Vec2 p, const std::string& text, double size_px)
{
    items_.push_back(fmt::format(R"(<text x="{:.4f}" y="{:.4f}" font-family="sans-serif" font-size="{}">{}</text>)",
                                 sx(p.x), sy(p.y), size_px, text));
}

std::string SvgCanvas::render() const
{
    std::string out = fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{0}\" viewBox=\"0 0 {0} {0}\">\n"
        "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n",
        pixels_);
    for (const std::string& item : items_) {
        out += item;
        out += '\n';
    }
    out += "</svg>\n";
    return out;
}

}  // namespace apollonian::cli
