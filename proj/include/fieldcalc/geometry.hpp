#pragma once
// 3-vector algebra, points in 3-space under Cartesian / cylindrical / spherical
// coordinates, and position-dependent unit-basis vector fields.
//
// Conventions (used consistently across the library):
//   s     distance from the z axis          (cylindrical radial)
//   r     distance from the origin          (spherical radial)
//   theta polar angle from +z, in [0, pi]
//   phi   azimuth from +x toward +y, in (-pi, pi]; reported as 0 on the z axis

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace fieldcalc {

using Real = double;

// A displacement or field value in 3-space. Units depend on context:
// meters for displacements, N/C for E fields, tesla for B fields.
struct Vec3 {
    Real x{0.0}, y{0.0}, z{0.0};

    Vec3() = default;
    Vec3(Real x_, Real y_, Real z_) : x(x_), y(y_), z(z_) {}

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3 operator*(Real c) const { return {x * c, y * c, z * c}; }
    Vec3 operator/(Real c) const { return {x / c, y / c, z / c}; }

    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    Vec3& operator*=(Real c) { x *= c; y *= c; z *= c; return *this; }
};

inline Vec3 operator*(Real c, const Vec3& v) { return v * c; }

inline Real dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y,
            a.z * b.x - a.x * b.z,
            a.x * b.y - a.y * b.x};
}

inline Real magnitude(const Vec3& v) { return std::sqrt(dot(v, v)); }

inline Vec3 normalize(const Vec3& v) {
    const Real m = magnitude(v);
    if (m == 0.0) throw std::domain_error("zero-vector normalization");
    return v / m;
}

// A point in 3-space, stored as a Cartesian triple in meters. Points and
// displacements are distinct types; their difference is a Vec3.
struct Position {
    Real x{0.0}, y{0.0}, z{0.0};

    Position() = default;
    Position(Real x_, Real y_, Real z_) : x(x_), y(y_), z(z_) {}
};

inline Position operator+(const Position& p, const Vec3& v) { return {p.x + v.x, p.y + v.y, p.z + v.z}; }
inline Position operator-(const Position& p, const Vec3& v) { return {p.x - v.x, p.y - v.y, p.z - v.z}; }
inline Vec3 operator-(const Position& a, const Position& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }

// target - source, in meters
inline Vec3 displacement(const Position& source, const Position& target) { return target - source; }

inline Position fromCartesian(Real x, Real y, Real z) { return {x, y, z}; }

inline Position fromCylindrical(Real s, Real phi, Real z) {
    if (s < 0.0) throw std::domain_error("fromCylindrical: negative radial coordinate");
    return {s * std::cos(phi), s * std::sin(phi), z};
}

inline Position fromSpherical(Real r, Real theta, Real phi) {
    if (r < 0.0) throw std::domain_error("fromSpherical: negative radial coordinate");
    const Real st = std::sin(theta);
    return {r * st * std::cos(phi), r * st * std::sin(phi), r * std::cos(theta)};
}

namespace detail {
// Azimuth in (-pi, pi]; 0 on the z axis. Negative-zero y is normalized so the
// -x axis reports +pi, keeping the branch half-open.
inline Real azimuth(Real x, Real y) {
    if (x == 0.0 && y == 0.0) return 0.0;
    const Real yy = (y == 0.0) ? 0.0 : y;
    return std::atan2(yy, x);
}
}  // namespace detail

inline std::array<Real, 3> toCartesianCoordinates(const Position& p) { return {p.x, p.y, p.z}; }

// (s, phi, z)
inline std::array<Real, 3> toCylindricalCoordinates(const Position& p) {
    return {std::hypot(p.x, p.y), detail::azimuth(p.x, p.y), p.z};
}

// (r, theta, phi); the origin reports (0, 0, 0)
inline std::array<Real, 3> toSphericalCoordinates(const Position& p) {
    const Real s = std::hypot(p.x, p.y);
    const Real r = std::sqrt(p.x * p.x + p.y * p.y + p.z * p.z);
    return {r, std::atan2(s, p.z), detail::azimuth(p.x, p.y)};
}

// Fields are plain functions of position; they are the library's common
// currency for both analysis and physics.
using ScalarField = std::function<Real(const Position&)>;
using VectorField = std::function<Vec3(const Position&)>;

// -- position-dependent unit-basis vectors ---------------------------------
//
// The Cartesian triple is constant; the cylindrical/spherical bases rotate
// with the point. Where a direction genuinely does not exist (sHat/phiHat on
// the z axis, rHat/thetaHat at the origin) evaluation is an error rather than
// an arbitrary vector.

inline Vec3 xHat(const Position&) { return {1.0, 0.0, 0.0}; }
inline Vec3 yHat(const Position&) { return {0.0, 1.0, 0.0}; }
inline Vec3 zHat(const Position&) { return {0.0, 0.0, 1.0}; }

inline Vec3 sHat(const Position& p) {
    if (p.x == 0.0 && p.y == 0.0) throw std::domain_error("basis undefined on singular locus");
    const Real s = std::hypot(p.x, p.y);
    return {p.x / s, p.y / s, 0.0};
}

inline Vec3 phiHat(const Position& p) {
    if (p.x == 0.0 && p.y == 0.0) throw std::domain_error("basis undefined on singular locus");
    const Real s = std::hypot(p.x, p.y);
    return {-p.y / s, p.x / s, 0.0};
}

inline Vec3 rHat(const Position& p) {
    const Real r = std::sqrt(p.x * p.x + p.y * p.y + p.z * p.z);
    if (r == 0.0) throw std::domain_error("basis undefined on singular locus");
    return {p.x / r, p.y / r, p.z / r};
}

inline Vec3 thetaHat(const Position& p) {
    const Real s = std::hypot(p.x, p.y);
    const Real r = std::sqrt(p.x * p.x + p.y * p.y + p.z * p.z);
    if (r == 0.0) throw std::domain_error("basis undefined on singular locus");
    const Real cosTheta = p.z / r;
    const Real sinTheta = s / r;
    // phi = 0 convention on the z axis
    const Real cosPhi = (s == 0.0) ? 1.0 : p.x / s;
    const Real sinPhi = (s == 0.0) ? 0.0 : p.y / s;
    return {cosTheta * cosPhi, cosTheta * sinPhi, -sinTheta};
}

enum class UnitBasis { XHat, YHat, ZHat, SHat, PhiHat, RHat, ThetaHat };

inline VectorField unitBasisField(UnitBasis which) {
    switch (which) {
        case UnitBasis::XHat: return [](const Position& p) { return xHat(p); };
        case UnitBasis::YHat: return [](const Position& p) { return yHat(p); };
        case UnitBasis::ZHat: return [](const Position& p) { return zHat(p); };
        case UnitBasis::SHat: return [](const Position& p) { return sHat(p); };
        case UnitBasis::PhiHat: return [](const Position& p) { return phiHat(p); };
        case UnitBasis::RHat: return [](const Position& p) { return rHat(p); };
        case UnitBasis::ThetaHat: return [](const Position& p) { return thetaHat(p); };
    }
    throw std::invalid_argument("unitBasisField: unknown basis");
}

}  // namespace fieldcalc
