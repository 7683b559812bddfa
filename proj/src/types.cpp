#include "apollonian/types.hpp"

#include <algorithm>
#include <sstream>

namespace apollonian {

double max_abs(const Mat2& m)
{
    return std::max({std::abs(m[0][0]), std::abs(m[0][1]), std::abs(m[1][0]), std::abs(m[1][1])});
}

DiscPoint::DiscPoint(double x1, double x2) : p_{x1, x2}
{
    if (!std::isfinite(x1) || !std::isfinite(x2) || apollonian::norm_sq(p_) >= 1.0) {
        throw DomainError("point " + to_string(p_) + " is not inside the open unit disc");
    }
}

BoundaryPoint::BoundaryPoint(double a1, double a2) : a_{a1, a2}
{
    if (!(std::abs(norm(a_) - 1.0) <= 1e-12)) {
        throw DomainError("point " + to_string(a_) + " is not on the unit circle");
    }
}

std::string to_string(Vec2 v)
{
    std::ostringstream os;
    os.precision(17);
    os << '(' << v.x << ", " << v.y << ')';
    return os.str();
}

}  // namespace apollonian
