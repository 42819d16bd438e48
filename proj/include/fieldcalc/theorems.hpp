#pragma once
// Numerical checkers for the fundamental theorems of vector calculus:
// gradient theorem, Stokes' theorem, divergence theorem. Each reports both
// sides and the residual.

#include <algorithm>
#include <cmath>

#include "fieldcalc/calculus.hpp"
#include "fieldcalc/domains.hpp"
#include "fieldcalc/geometry.hpp"

namespace fieldcalc {

struct TheoremReport {
    Real lhs{0.0};
    Real rhs{0.0};
    Real absoluteResidual{0.0};
    Real relativeResidual{0.0};
};

namespace detail {
// The 1e-300 floor keeps two exact zeros reporting a relative residual of 0
// instead of dividing by zero.
inline TheoremReport makeReport(Real lhs, Real rhs) {
    const Real absR = std::abs(lhs - rhs);
    const Real denom = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    return TheoremReport{lhs, rhs, absR, absR / denom};
}
}  // namespace detail

// Integral of grad f along c versus f(end) - f(start).
inline TheoremReport checkGradientTheorem(const ScalarField& f, const Curve& c,
                                          Real d = defaultStep,
                                          const CurveSampler& sampler = curveSample(defaultCurveResolution)) {
    const Real lhs = dottedLineIntegral(sampler, gradient(d, f), c);
    const Real rhs = f(c.curveFunc(c.endParam)) - f(c.curveFunc(c.startParam));
    return detail::makeReport(lhs, rhs);
}

// Flux of curl F through s versus circulation of F around its boundary.
inline TheoremReport checkStokes(const VectorField& f, const Surface& s,
                                 Real d = defaultStep,
                                 const SurfaceSampler& surfSampler = surfaceSample(defaultSurfaceResolution),
                                 const CurveSampler& curveSampler = curveSample(defaultCurveResolution)) {
    const Real lhs = dottedSurfaceIntegral(surfSampler, curl(d, f), s);
    const Real rhs = dottedLineIntegral(curveSampler, f, boundaryOfSurface(s));
    return detail::makeReport(lhs, rhs);
}

// Integral of div F over v versus total flux of F through its boundary faces.
inline TheoremReport checkDivergenceTheorem(const VectorField& f, const Volume& v,
                                            Real d = defaultStep,
                                            const VolumeSampler& volSampler = volumeSample(defaultVolumeResolution),
                                            const SurfaceSampler& surfSampler = surfaceSample(defaultSurfaceResolution)) {
    const Real lhs = scalarVolumeIntegral(volSampler, divergence(d, f), v);
    Real rhs = 0.0;
    for (const Surface& face : boundaryOfVolume(v)) {
        rhs += dottedSurfaceIntegral(surfSampler, f, face);
    }
    return detail::makeReport(lhs, rhs);
}

}  // namespace fieldcalc
