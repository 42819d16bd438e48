#pragma once
// Samplers that discretize domains, the nine line/surface/volume integrals,
// and central-difference differential operators.
//
// All samplers emit deterministic, ordered lists; integrals sum in sampler
// order with no compensated summation, so identical inputs give bit-identical
// results.

#include <cmath>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "fieldcalc/domains.hpp"
#include "fieldcalc/errors.hpp"
#include "fieldcalc/geometry.hpp"

namespace fieldcalc {

struct CurvePoint {
    Position position;  // image of the segment's parameter midpoint
    Vec3 dl;            // chord from segment start-point to end-point
};

struct SurfacePoint {
    Position position;  // centroid of the triangle's vertex images
    Vec3 da;            // triangle vector area, oriented along ds x dt
};

struct VolumePoint {
    Position position;  // image of the cell's parameter midpoint
    Real dv;            // cell volume estimate
};

using CurveSampler = std::function<std::vector<CurvePoint>(const Curve&)>;
using SurfaceSampler = std::function<std::vector<SurfacePoint>(const Surface&)>;
using VolumeSampler = std::function<std::vector<VolumePoint>(const Volume&)>;

inline constexpr int defaultCurveResolution = 1000;
inline constexpr int defaultSurfaceResolution = 200;
inline constexpr int defaultVolumeResolution = 40;
inline constexpr Real defaultStep = 1e-6;

// n equal-parameter-width segments; midpoint positions, chord vectors.
inline CurveSampler curveSample(int n) {
    if (n < 1) throw std::invalid_argument("curveSample: n must be >= 1");
    return [n](const Curve& c) {
        std::vector<CurvePoint> out;
        out.reserve(static_cast<size_t>(n));
        const Real a = c.startParam, b = c.endParam;
        const Real h = (b - a) / n;
        Position prev = c.curveFunc(a);
        for (int k = 0; k < n; ++k) {
            const Position mid = c.curveFunc(a + (k + 0.5) * h);
            const Position next = c.curveFunc(k + 1 == n ? b : a + (k + 1) * h);
            out.push_back(CurvePoint{mid, next - prev});
            prev = next;
        }
        return out;
    };
}

// n x n parameter cells honoring the s-dependent t limits, each cell split
// into two triangles by the (i,j)->(i+1,j+1) diagonal. Each triangle emits
// the centroid of its vertex images and the vector area
// (v1-v0) x (v2-v0) / 2, oriented along ds x dt.
inline SurfaceSampler surfaceSample(int n) {
    if (n < 1) throw std::invalid_argument("surfaceSample: n must be >= 1");
    return [n](const Surface& f) {
        const size_t nn = static_cast<size_t>(n);
        std::vector<std::vector<Position>> grid(nn + 1);
        for (size_t i = 0; i <= nn; ++i) {
            const Real sv = f.sLo + (f.sHi - f.sLo) * static_cast<Real>(i) / n;
            const Real lo = f.tLo(sv), hi = f.tHi(sv);
            auto& row = grid[i];
            row.reserve(nn + 1);
            for (size_t j = 0; j <= nn; ++j) {
                row.push_back(f.surfFunc(sv, lo + (hi - lo) * static_cast<Real>(j) / n));
            }
        }
        std::vector<SurfacePoint> out;
        out.reserve(2 * nn * nn);
        auto emit = [&out](const Position& v0, const Position& v1, const Position& v2) {
            out.push_back(SurfacePoint{
                Position{(v0.x + v1.x + v2.x) / 3, (v0.y + v1.y + v2.y) / 3, (v0.z + v1.z + v2.z) / 3},
                0.5 * cross(v1 - v0, v2 - v0)});
        };
        for (size_t i = 0; i < nn; ++i) {
            for (size_t j = 0; j < nn; ++j) {
                const Position& a = grid[i][j];
                const Position& b = grid[i + 1][j];
                const Position& c = grid[i + 1][j + 1];
                const Position& d = grid[i][j + 1];
                emit(a, b, c);
                emit(a, c, d);
            }
        }
        return out;
    };
}

// n^3 parameter cells honoring the nested limits. Each cell emits the image
// of its parameter midpoint and dv = |e1 . (e2 x e3)|, where the e's are
// central-difference edge vectors spanning the cell about its midpoint
// (exact for affine maps, second-order accurate in general).
inline VolumeSampler volumeSample(int n) {
    if (n < 1) throw std::invalid_argument("volumeSample: n must be >= 1");
    return [n](const Volume& v) {
        auto g = [&v](Real a, Real b, Real c) {
            const Real s = v.sLo + a * (v.sHi - v.sLo);
            const Real tl = v.tLo(s), th = v.tHi(s);
            const Real t = tl + b * (th - tl);
            const Real ul = v.uLo(s, t), uh = v.uHi(s, t);
            return v.volFunc(s, t, ul + c * (uh - ul));
        };
        const Real h = 1.0 / n;
        std::vector<VolumePoint> out;
        out.reserve(static_cast<size_t>(n) * n * n);
        for (int i = 0; i < n; ++i) {
            const Real a = (i + 0.5) * h;
            for (int j = 0; j < n; ++j) {
                const Real b = (j + 0.5) * h;
                for (int k = 0; k < n; ++k) {
                    const Real c = (k + 0.5) * h;
                    const Vec3 e1 = g(a + h / 2, b, c) - g(a - h / 2, b, c);
                    const Vec3 e2 = g(a, b + h / 2, c) - g(a, b - h / 2, c);
                    const Vec3 e3 = g(a, b, c + h / 2) - g(a, b, c - h / 2);
                    out.push_back(VolumePoint{g(a, b, c), std::abs(dot(e1, cross(e2, e3)))});
                }
            }
        }
        return out;
    };
}

namespace detail {

// Singularity errors already carry the offending position; anything else is
// wrapped so the failing sample travels with it.
inline Real evalScalar(const ScalarField& f, const Position& p) {
    try {
        return f(p);
    } catch (const FieldSingularityError&) {
        throw;
    } catch (const FieldEvaluationError&) {
        throw;
    } catch (const std::exception& e) {
        throw FieldEvaluationError(p, e.what());
    }
}

inline Vec3 evalVector(const VectorField& f, const Position& p) {
    try {
        return f(p);
    } catch (const FieldSingularityError&) {
        throw;
    } catch (const FieldEvaluationError&) {
        throw;
    } catch (const std::exception& e) {
        throw FieldEvaluationError(p, e.what());
    }
}

}  // namespace detail

// -- the nine integrals ------------------------------------------------------
//
// Each has a form taking pre-drawn samples (useful when one source is probed
// at many field points) and a (sampler, field, domain) form.

inline Real scalarLineIntegral(std::span<const CurvePoint> samples, const ScalarField& f) {
    Real total = 0.0;
    for (const CurvePoint& s : samples) total += detail::evalScalar(f, s.position) * magnitude(s.dl);
    return total;
}

inline Vec3 vectorLineIntegral(std::span<const CurvePoint> samples, const VectorField& f) {
    Vec3 total;
    for (const CurvePoint& s : samples) total += detail::evalVector(f, s.position) * magnitude(s.dl);
    return total;
}

inline Real dottedLineIntegral(std::span<const CurvePoint> samples, const VectorField& f) {
    Real total = 0.0;
    for (const CurvePoint& s : samples) total += dot(detail::evalVector(f, s.position), s.dl);
    return total;
}

inline Vec3 crossedLineIntegral(std::span<const CurvePoint> samples, const VectorField& f) {
    Vec3 total;
    for (const CurvePoint& s : samples) total += cross(detail::evalVector(f, s.position), s.dl);
    return total;
}

inline Real scalarSurfaceIntegral(std::span<const SurfacePoint> samples, const ScalarField& f) {
    Real total = 0.0;
    for (const SurfacePoint& s : samples) total += detail::evalScalar(f, s.position) * magnitude(s.da);
    return total;
}

inline Vec3 vectorSurfaceIntegral(std::span<const SurfacePoint> samples, const VectorField& f) {
    Vec3 total;
    for (const SurfacePoint& s : samples) total += detail::evalVector(f, s.position) * magnitude(s.da);
    return total;
}

inline Real dottedSurfaceIntegral(std::span<const SurfacePoint> samples, const VectorField& f) {
    Real total = 0.0;
    for (const SurfacePoint& s : samples) total += dot(detail::evalVector(f, s.position), s.da);
    return total;
}

inline Real scalarVolumeIntegral(std::span<const VolumePoint> samples, const ScalarField& f) {
    Real total = 0.0;
    for (const VolumePoint& s : samples) total += detail::evalScalar(f, s.position) * s.dv;
    return total;
}

inline Vec3 vectorVolumeIntegral(std::span<const VolumePoint> samples, const VectorField& f) {
    Vec3 total;
    for (const VolumePoint& s : samples) total += detail::evalVector(f, s.position) * s.dv;
    return total;
}

inline Real scalarLineIntegral(const CurveSampler& approx, const ScalarField& f, const Curve& c) {
    return scalarLineIntegral(approx(c), f);
}
inline Vec3 vectorLineIntegral(const CurveSampler& approx, const VectorField& f, const Curve& c) {
    return vectorLineIntegral(approx(c), f);
}
inline Real dottedLineIntegral(const CurveSampler& approx, const VectorField& f, const Curve& c) {
    return dottedLineIntegral(approx(c), f);
}
inline Vec3 crossedLineIntegral(const CurveSampler& approx, const VectorField& f, const Curve& c) {
    return crossedLineIntegral(approx(c), f);
}
inline Real scalarSurfaceIntegral(const SurfaceSampler& approx, const ScalarField& f, const Surface& s) {
    return scalarSurfaceIntegral(approx(s), f);
}
inline Vec3 vectorSurfaceIntegral(const SurfaceSampler& approx, const VectorField& f, const Surface& s) {
    return vectorSurfaceIntegral(approx(s), f);
}
inline Real dottedSurfaceIntegral(const SurfaceSampler& approx, const VectorField& f, const Surface& s) {
    return dottedSurfaceIntegral(approx(s), f);
}
inline Real scalarVolumeIntegral(const VolumeSampler& approx, const ScalarField& f, const Volume& v) {
    return scalarVolumeIntegral(approx(v), f);
}
inline Vec3 vectorVolumeIntegral(const VolumeSampler& approx, const VectorField& f, const Volume& v) {
    return vectorVolumeIntegral(approx(v), f);
}

// -- differential operators --------------------------------------------------

template <class F>
Real derivative(Real dt, F&& f, Real t) {
    return (f(t + dt / 2) - f(t - dt / 2)) / dt;
}

inline VectorField gradient(Real d, ScalarField f) {
    if (d <= 0.0) throw std::invalid_argument("gradient: step must be positive");
    return [d, f = std::move(f)](const Position& p) {
        const Real half = d / 2;
        return Vec3{(f(Position{p.x + half, p.y, p.z}) - f(Position{p.x - half, p.y, p.z})) / d,
                    (f(Position{p.x, p.y + half, p.z}) - f(Position{p.x, p.y - half, p.z})) / d,
                    (f(Position{p.x, p.y, p.z + half}) - f(Position{p.x, p.y, p.z - half})) / d};
    };
}

inline ScalarField divergence(Real d, VectorField f) {
    if (d <= 0.0) throw std::invalid_argument("divergence: step must be positive");
    return [d, f = std::move(f)](const Position& p) {
        const Real half = d / 2;
        const Vec3 xp = f(Position{p.x + half, p.y, p.z}), xm = f(Position{p.x - half, p.y, p.z});
        const Vec3 yp = f(Position{p.x, p.y + half, p.z}), ym = f(Position{p.x, p.y - half, p.z});
        const Vec3 zp = f(Position{p.x, p.y, p.z + half}), zm = f(Position{p.x, p.y, p.z - half});
        return ((xp.x - xm.x) + (yp.y - ym.y) + (zp.z - zm.z)) / d;
    };
}

inline VectorField curl(Real d, VectorField f) {
    if (d <= 0.0) throw std::invalid_argument("curl: step must be positive");
    return [d, f = std::move(f)](const Position& p) {
        const Real half = d / 2;
        const Vec3 xp = f(Position{p.x + half, p.y, p.z}), xm = f(Position{p.x - half, p.y, p.z});
        const Vec3 yp = f(Position{p.x, p.y + half, p.z}), ym = f(Position{p.x, p.y - half, p.z});
        const Vec3 zp = f(Position{p.x, p.y, p.z + half}), zm = f(Position{p.x, p.y, p.z - half});
        return Vec3{((yp.z - ym.z) - (zp.y - zm.y)) / d,
                    ((zp.x - zm.x) - (xp.z - xm.z)) / d,
                    ((xp.y - xm.y) - (yp.x - ym.x)) / d};
    };
}

}  // namespace fieldcalc
