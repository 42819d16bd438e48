#pragma once
// Parametric geometric domains (curves, surfaces, volumes), a library of
// standard shapes, and boundary extraction.
//
// Orientation conventions:
//   * a Curve is oriented by increasing parameter;
//   * a Surface is oriented along d(surfFunc)/ds x d(surfFunc)/dt;
//   * boundaryOfSurface traverses the four parameter edges so that the loop
//     obeys the right-hand rule with respect to the surface normal;
//   * boundaryOfVolume faces carry outward normals (the parametrization must
//     be positively oriented: ds . (dt x du) >= 0, as all shape constructors
//     here guarantee).

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fieldcalc/geometry.hpp"

namespace fieldcalc {

// Map of one parameter into space over [startParam, endParam].
struct Curve {
    std::function<Position(Real)> curveFunc;
    Real startParam{0.0};
    Real endParam{0.0};
};

// Map of two parameters (s, t) into space; the limits of t may depend on s,
// which makes shapes like triangles and disks easy to describe.
struct Surface {
    std::function<Position(Real, Real)> surfFunc;
    Real sLo{0.0}, sHi{0.0};
    std::function<Real(Real)> tLo, tHi;
};

// Map of three parameters (s, t, u) into space with nested limits: t limits
// depend on s, u limits on (s, t).
struct Volume {
    std::function<Position(Real, Real, Real)> volFunc;
    Real sLo{0.0}, sHi{0.0};
    std::function<Real(Real)> tLo, tHi;
    std::function<Real(Real, Real)> uLo, uHi;
};

// The four parameter edges of a surface as one piecewise curve on [0, 4],
// one unit of parameter per edge: t-low edge forward in s, s-high edge
// forward in t, t-high edge backward in s, s-low edge backward in t.
inline Curve boundaryOfSurface(const Surface& surf) {
    const Surface s = surf;  // capture by value
    auto f = [s](Real t) -> Position {
        const Real sSpan = s.sHi - s.sLo;
        if (t < 1.0) {
            const Real sv = s.sLo + t * sSpan;
            return s.surfFunc(sv, s.tLo(sv));
        }
        if (t < 2.0) {
            const Real lo = s.tLo(s.sHi), hi = s.tHi(s.sHi);
            return s.surfFunc(s.sHi, lo + (t - 1.0) * (hi - lo));
        }
        if (t < 3.0) {
            const Real sv = s.sHi - (t - 2.0) * sSpan;
            return s.surfFunc(sv, s.tHi(sv));
        }
        const Real lo = s.tLo(s.sLo), hi = s.tHi(s.sLo);
        return s.surfFunc(s.sLo, hi - (t - 3.0) * (hi - lo));
    };
    return Curve{f, 0.0, 4.0};
}

namespace detail {

struct FaceProbe {
    std::vector<Position> centers;
    Vec3 vectorArea{};
    Real scalarArea{0.0};
};

// Coarse grid probe of a face, used only to classify boundary faces. Cell
// centers are corner averages (invariant under parameter reversal) and areas
// come from triangle pairs, whose total vector area depends only on the face
// boundary, so coincident opposite faces cancel exactly.
inline FaceProbe probeFace(const Surface& f, int k) {
    FaceProbe probe;
    std::vector<std::vector<Position>> grid(static_cast<size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) {
        const Real sv = f.sLo + (f.sHi - f.sLo) * static_cast<Real>(i) / k;
        const Real lo = f.tLo(sv), hi = f.tHi(sv);
        auto& row = grid[static_cast<size_t>(i)];
        row.reserve(static_cast<size_t>(k) + 1);
        for (int j = 0; j <= k; ++j) {
            row.push_back(f.surfFunc(sv, lo + (hi - lo) * static_cast<Real>(j) / k));
        }
    }
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            const Position& a = grid[i][j];
            const Position& b = grid[i + 1][j];
            const Position& c = grid[i + 1][j + 1];
            const Position& d = grid[i][j + 1];
            const Vec3 tri1 = 0.5 * cross(b - a, c - a);
            const Vec3 tri2 = 0.5 * cross(c - a, d - a);
            probe.vectorArea += tri1 + tri2;
            probe.scalarArea += magnitude(tri1) + magnitude(tri2);
            probe.centers.push_back(Position{(a.x + b.x + c.x + d.x) / 4,
                                             (a.y + b.y + c.y + d.y) / 4,
                                             (a.z + b.z + c.z + d.z) / 4});
        }
    }
    return probe;
}

inline Real spread(const std::vector<Position>& pts) {
    Real loX = pts[0].x, hiX = pts[0].x, loY = pts[0].y, hiY = pts[0].y, loZ = pts[0].z, hiZ = pts[0].z;
    for (const Position& p : pts) {
        loX = std::min(loX, p.x); hiX = std::max(hiX, p.x);
        loY = std::min(loY, p.y); hiY = std::max(hiY, p.y);
        loZ = std::min(loZ, p.z); hiZ = std::max(hiZ, p.z);
    }
    return std::sqrt((hiX - loX) * (hiX - loX) + (hiY - loY) * (hiY - loY) + (hiZ - loZ) * (hiZ - loZ));
}

// A periodic parameter closes a volume on itself and leaves two coincident
// faces of equal area and opposite orientation (for a ball, the meridian
// half-disks at phi = 0 and 2*pi). Such a pair contributes nothing to the
// true boundary and is detected by point-set coincidence.
inline bool coincidentOppositePair(const FaceProbe& a, const FaceProbe& b) {
    const Real scale = a.scalarArea + b.scalarArea;
    if (scale <= 0.0) return false;
    const Real extent = std::max(spread(a.centers), spread(b.centers));
    if (a.scalarArea < 1e-12 * extent * extent || b.scalarArea < 1e-12 * extent * extent) return false;
    if (magnitude(a.vectorArea + b.vectorArea) > 1e-6 * scale) return false;
    const Real tol = 1e-6 * (extent > 0.0 ? extent : 1.0);
    auto matches = [tol](const std::vector<Position>& from, const std::vector<Position>& to) {
        for (const Position& p : from) {
            Real best = std::numeric_limits<Real>::max();
            for (const Position& q : to) best = std::min(best, magnitude(p - q));
            if (best > tol) return false;
        }
        return true;
    };
    return matches(a.centers, b.centers) && matches(b.centers, a.centers);
}

}  // namespace detail

// The six parameter faces of a volume, oriented outward. Degenerate faces
// (poles, axes, a collapsed radial origin) are kept and simply carry ~zero
// area; coincident seam pairs from periodic parameters are dropped.
inline std::vector<Surface> boundaryOfVolume(const Volume& vol) {
    const Volume v = vol;
    std::vector<Surface> faces;

    // s = sLo, t reversed so the normal (-dt) x du points outward
    {
        const Real lo = v.tLo(v.sLo), hi = v.tHi(v.sLo);
        const Real sum = lo + hi;
        faces.push_back(Surface{
            [v, sum](Real a, Real b) { return v.volFunc(v.sLo, sum - a, b); },
            lo, hi,
            [v, sum](Real a) { return v.uLo(v.sLo, sum - a); },
            [v, sum](Real a) { return v.uHi(v.sLo, sum - a); }});
    }
    // s = sHi, natural (t, u)
    faces.push_back(Surface{
        [v](Real t, Real u) { return v.volFunc(v.sHi, t, u); },
        v.tLo(v.sHi), v.tHi(v.sHi),
        [v](Real t) { return v.uLo(v.sHi, t); },
        [v](Real t) { return v.uHi(v.sHi, t); }});
    // t = tLo(s), natural (s, u)
    faces.push_back(Surface{
        [v](Real s, Real u) { return v.volFunc(s, v.tLo(s), u); },
        v.sLo, v.sHi,
        [v](Real s) { return v.uLo(s, v.tLo(s)); },
        [v](Real s) { return v.uHi(s, v.tLo(s)); }});
    // t = tHi(s), s reversed
    {
        const Real sum = v.sLo + v.sHi;
        faces.push_back(Surface{
            [v, sum](Real a, Real u) { return v.volFunc(sum - a, v.tHi(sum - a), u); },
            v.sLo, v.sHi,
            [v, sum](Real a) { return v.uLo(sum - a, v.tHi(sum - a)); },
            [v, sum](Real a) { return v.uHi(sum - a, v.tHi(sum - a)); }});
    }
    // u = uLo(s, t), s reversed
    {
        const Real sum = v.sLo + v.sHi;
        faces.push_back(Surface{
            [v, sum](Real a, Real t) { return v.volFunc(sum - a, t, v.uLo(sum - a, t)); },
            v.sLo, v.sHi,
            [v, sum](Real a) { return v.tLo(sum - a); },
            [v, sum](Real a) { return v.tHi(sum - a); }});
    }
    // u = uHi(s, t), natural (s, t)
    faces.push_back(Surface{
        [v](Real s, Real t) { return v.volFunc(s, t, v.uHi(s, t)); },
        v.sLo, v.sHi,
        [v](Real s) { return v.tLo(s); },
        [v](Real s) { return v.tHi(s); }});

    std::array<detail::FaceProbe, 6> probes;
    for (size_t i = 0; i < 6; ++i) probes[i] = detail::probeFace(faces[i], 6);

    std::array<bool, 6> keep{true, true, true, true, true, true};
    const std::pair<size_t, size_t> opposing[3] = {{0, 1}, {2, 3}, {4, 5}};
    for (const auto& [i, j] : opposing) {
        if (detail::coincidentOppositePair(probes[i], probes[j])) keep[i] = keep[j] = false;
    }

    std::vector<Surface> result;
    for (size_t i = 0; i < 6; ++i) {
        if (keep[i]) result.push_back(std::move(faces[i]));
    }
    return result;
}

// -- shape library ----------------------------------------------------------

namespace detail {

struct Frame {
    Vec3 e1, e2, e3;
};

// Deterministic right-handed orthonormal frame with e3 along `axis`.
// For axis = +z this is exactly (x, y, z).
inline Frame frameFromAxis(const Vec3& axis) {
    const Real m = magnitude(axis);
    if (m == 0.0) throw std::domain_error("shape axis must be nonzero");
    const Vec3 e3 = axis / m;
    const Vec3 ref = (std::abs(e3.z) < 0.9) ? Vec3{0.0, 0.0, 1.0} : Vec3{0.0, 1.0, 0.0};
    const Vec3 e1 = normalize(cross(ref, e3));
    return Frame{e1, cross(e3, e1), e3};
}

inline std::function<Real(Real)> constantLimit(Real c) {
    return [c](Real) { return c; };
}

inline std::function<Real(Real, Real)> constantLimit2(Real c) {
    return [c](Real, Real) { return c; };
}

inline constexpr Real twoPi = 6.283185307179586476925286766559;

}  // namespace detail

inline Curve segment(const Position& p0, const Position& p1) {
    const Vec3 edge = p1 - p0;
    if (magnitude(edge) == 0.0) throw std::domain_error("segment: endpoints coincide");
    return Curve{[p0, edge](Real t) { return p0 + t * edge; }, 0.0, 1.0};
}

// Circle of given radius about `center`, lying in the plane normal to `axis`,
// traversed counterclockwise as seen from the axis tip. With axis = +z this
// is (R cos t, R sin t, 0) for t in [0, 2*pi].
inline Curve circle(Real radius, const Position& center = {}, const Vec3& axis = {0.0, 0.0, 1.0}) {
    if (radius <= 0.0) throw std::domain_error("circle: radius must be positive");
    const detail::Frame f = detail::frameFromAxis(axis);
    return Curve{[radius, center, f](Real t) {
                     return center + radius * std::cos(t) * f.e1 + radius * std::sin(t) * f.e2;
                 },
                 0.0, detail::twoPi};
}

inline Curve helix(Real radius, Real pitch, Real turns, const Position& center = {},
                   const Vec3& axis = {0.0, 0.0, 1.0}) {
    if (radius <= 0.0) throw std::domain_error("helix: radius must be positive");
    if (turns <= 0.0) throw std::domain_error("helix: turns must be positive");
    const detail::Frame f = detail::frameFromAxis(axis);
    return Curve{[radius, pitch, center, f](Real t) {
                     return center + radius * std::cos(t) * f.e1 + radius * std::sin(t) * f.e2 +
                            (pitch * t / detail::twoPi) * f.e3;
                 },
                 0.0, detail::twoPi * turns};
}

inline Surface rectangleIn3D(const Position& corner, const Vec3& edge1, const Vec3& edge2) {
    if (magnitude(cross(edge1, edge2)) <= 1e-12 * magnitude(edge1) * magnitude(edge2)) {
        throw std::domain_error("rectangleIn3D: edge vectors must be independent");
    }
    return Surface{[corner, edge1, edge2](Real s, Real t) { return corner + s * edge1 + t * edge2; },
                   0.0, 1.0, detail::constantLimit(0.0), detail::constantLimit(1.0)};
}

// Disk parametrized as a slab with s = R sin(alpha), t limits +-R cos(alpha):
// the limits are smooth in the first parameter and the boundary curve is
// exactly the rim circle, traversed at uniform angular speed. Normal along
// `axis`.
inline Surface disk(Real radius, const Position& center = {}, const Vec3& axis = {0.0, 0.0, 1.0}) {
    if (radius <= 0.0) throw std::domain_error("disk: radius must be positive");
    const detail::Frame f = detail::frameFromAxis(axis);
    constexpr Real halfPi = 1.5707963267948966;
    return Surface{[center, f, radius](Real alpha, Real t) {
                       return center + (radius * std::sin(alpha)) * f.e1 + t * f.e2;
                   },
                   -halfPi, halfPi,
                   [radius](Real alpha) { return -radius * std::cos(alpha); },
                   [radius](Real alpha) { return radius * std::cos(alpha); }};
}

// Sphere about `center`, parametrized (theta, phi); normal points outward.
inline Surface sphereSurface(Real radius, const Position& center = {}) {
    if (radius <= 0.0) throw std::domain_error("sphereSurface: radius must be positive");
    return Surface{[radius, center](Real theta, Real phi) {
                       const Real st = std::sin(theta);
                       return center + Vec3{radius * st * std::cos(phi), radius * st * std::sin(phi),
                                            radius * std::cos(theta)};
                   },
                   0.0, 3.14159265358979323846, detail::constantLimit(0.0),
                   detail::constantLimit(detail::twoPi)};
}

// Solid ball parametrized (r, theta, phi); positively oriented.
inline Volume ball(Real radius, const Position& center = {}) {
    if (radius <= 0.0) throw std::domain_error("ball: radius must be positive");
    return Volume{[center](Real r, Real theta, Real phi) {
                      const Real st = std::sin(theta);
                      return center + Vec3{r * st * std::cos(phi), r * st * std::sin(phi),
                                           r * std::cos(theta)};
                  },
                  0.0, radius,
                  detail::constantLimit(0.0), detail::constantLimit(3.14159265358979323846),
                  detail::constantLimit2(0.0), detail::constantLimit2(detail::twoPi)};
}

// Solid cylinder parametrized (rho, phi, along-axis); positively oriented.
inline Volume cylinderVolume(Real radius, Real height, const Position& baseCenter = {},
                             const Vec3& axis = {0.0, 0.0, 1.0}) {
    if (radius <= 0.0) throw std::domain_error("cylinderVolume: radius must be positive");
    if (height <= 0.0) throw std::domain_error("cylinderVolume: height must be positive");
    const detail::Frame f = detail::frameFromAxis(axis);
    return Volume{[baseCenter, f](Real rho, Real phi, Real zeta) {
                      return baseCenter + rho * std::cos(phi) * f.e1 + rho * std::sin(phi) * f.e2 +
                             zeta * f.e3;
                  },
                  0.0, radius,
                  detail::constantLimit(0.0), detail::constantLimit(detail::twoPi),
                  detail::constantLimit2(0.0), detail::constantLimit2(height)};
}

// Parallelepiped spanned by a right-handed edge triple.
inline Volume box(const Position& corner, const Vec3& edge1, const Vec3& edge2, const Vec3& edge3) {
    const Real det = dot(edge1, cross(edge2, edge3));
    if (det <= 1e-12 * magnitude(edge1) * magnitude(edge2) * magnitude(edge3)) {
        throw std::domain_error("box: edges must form a right-handed independent triple");
    }
    return Volume{[corner, edge1, edge2, edge3](Real s, Real t, Real u) {
                      return corner + s * edge1 + t * edge2 + u * edge3;
                  },
                  0.0, 1.0,
                  detail::constantLimit(0.0), detail::constantLimit(1.0),
                  detail::constantLimit2(0.0), detail::constantLimit2(1.0)};
}

}  // namespace fieldcalc
