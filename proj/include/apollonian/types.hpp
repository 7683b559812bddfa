#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace apollonian {

// Error hierarchy. Every failure raised by the library derives from Error so
// callers (the CLI in particular) can map them to exit codes in one place.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A point lies outside the open unit disc, or outside the region where a
// numeric route is allowed to run.
class DomainError : public Error {
public:
    using Error::Error;
};

// Two points coincide where a construction needs distinct points.
class DegenerateInputError : public Error {
public:
    using Error::Error;
};

// Tensor and curvature quantities live on the slit tangent bundle.
class ZeroVectorError : public Error {
public:
    using Error::Error;
};

// Lorentz quadratic form is negative on the vector (timelike).
class ImaginaryNormError : public Error {
public:
    using Error::Error;
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr double operator[](int i) const { return i == 0 ? x : y; }
    constexpr double& operator[](int i) { return i == 0 ? x : y; }

    constexpr Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
    constexpr Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }
    constexpr Vec2& operator*=(double s) { x *= s; y *= s; return *this; }

    friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
    friend constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
    friend constexpr Vec2 operator*(Vec2 a, double s) { return {s * a.x, s * a.y}; }
    friend constexpr Vec2 operator/(Vec2 a, double s) { return {a.x / s, a.y / s}; }
    friend constexpr bool operator==(Vec2, Vec2) = default;
};

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
constexpr double norm_sq(Vec2 a) { return dot(a, a); }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
constexpr Vec2 perp(Vec2 a) { return {-a.y, a.x}; }

// Tangent vectors are plain components in the coordinate frame of the disc.
using TangentVector = Vec2;

// Row-major 2x2 matrix, m[i][j].
using Mat2 = std::array<std::array<double, 2>, 2>;

inline double trace(const Mat2& m) { return m[0][0] + m[1][1]; }
inline double det(const Mat2& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
inline Vec2 apply(const Mat2& m, Vec2 v)
{
    return {m[0][0] * v.x + m[0][1] * v.y, m[1][0] * v.x + m[1][1] * v.y};
}
double max_abs(const Mat2& m);

using Vec3 = std::array<double, 3>;

/// A point strictly inside the open unit disc. Construction rejects the
/// boundary and the exterior with DomainError.
class DiscPoint {
public:
    DiscPoint(double x1, double x2);
    explicit DiscPoint(Vec2 p) : DiscPoint(p.x, p.y) {}

    static DiscPoint origin() { return DiscPoint(0.0, 0.0); }

    double x1() const { return p_.x; }
    double x2() const { return p_.y; }
    Vec2 vec() const { return p_; }
    double norm_sq() const { return apollonian::norm_sq(p_); }
    // 1 - |x|^2, the conformal factor every closed form is built from.
    double gap() const { return 1.0 - norm_sq(); }

    friend bool operator==(const DiscPoint&, const DiscPoint&) = default;

private:
    Vec2 p_;
};

/// A point on the unit circle, |a| = 1 within 1e-12.
class BoundaryPoint {
public:
    BoundaryPoint(double a1, double a2);
    explicit BoundaryPoint(Vec2 a) : BoundaryPoint(a.x, a.y) {}

    double a1() const { return a_.x; }
    double a2() const { return a_.y; }
    Vec2 vec() const { return a_; }
    double angle() const { return std::atan2(a_.y, a_.x); }

private:
    Vec2 a_;
};

std::string to_string(Vec2 v);

}  // namespace apollonian
