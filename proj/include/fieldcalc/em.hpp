#pragma once
// Charge and current distributions as algebraic data, and the static field
// constructions: Coulomb superposition for E, Biot-Savart for B. SI units
// throughout (coulombs, amperes, N/C, tesla).

#include <cmath>
#include <memory>
#include <numbers>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "fieldcalc/calculus.hpp"
#include "fieldcalc/domains.hpp"
#include "fieldcalc/errors.hpp"
#include "fieldcalc/geometry.hpp"

namespace fieldcalc {

struct PhysicalConstants {
    Real epsilon0 = 8.8541878128e-12;              // F/m (CODATA)
    Real mu0 = 4.0 * std::numbers::pi * 1e-7;      // H/m
};

// Probes closer than this to a source sample are an error: silently huge
// values would corrupt every integral downstream.
inline constexpr Real sourceCoincidenceTolerance = 1e-12;  // meters

struct PointCharge {
    Real charge{0.0};  // coulombs
    Position at;
};

struct LineCharge {
    ScalarField lambda;  // C/m
    Curve along;
    int resolution = defaultCurveResolution;
};

struct SurfaceCharge {
    ScalarField sigma;  // C/m^2
    Surface on;
    int resolution = defaultSurfaceResolution;
};

struct VolumeCharge {
    ScalarField rho;  // C/m^3
    Volume in;
    int resolution = defaultVolumeResolution;
};

class ChargeDistribution;

struct MultipleCharges {
    std::vector<ChargeDistribution> parts;
};

class ChargeDistribution {
public:
    using Value = std::variant<PointCharge, LineCharge, SurfaceCharge, VolumeCharge, MultipleCharges>;

    template <class T, class = std::enable_if_t<
                           !std::is_same_v<std::decay_t<T>, ChargeDistribution> &&
                           std::is_constructible_v<Value, T&&>>>
    ChargeDistribution(T&& v) : value_(std::forward<T>(v)) {}

    const Value& value() const { return value_; }

private:
    Value value_;
};

struct LineCurrent {
    Real current{0.0};  // amperes
    Curve along;
    int resolution = defaultCurveResolution;
};

class CurrentDistribution;

struct MultipleCurrents {
    std::vector<CurrentDistribution> parts;
};

class CurrentDistribution {
public:
    using Value = std::variant<LineCurrent, MultipleCurrents>;

    template <class T, class = std::enable_if_t<
                           !std::is_same_v<std::decay_t<T>, CurrentDistribution> &&
                           std::is_constructible_v<Value, T&&>>>
    CurrentDistribution(T&& v) : value_(std::forward<T>(v)) {}

    const Value& value() const { return value_; }

private:
    Value value_;
};

namespace detail {

// (r - r') / |r - r'|^3, guarding against probe/source coincidence.
inline Vec3 inverseSquareDirection(const Position& source, const Position& fieldPoint) {
    const Vec3 d = displacement(source, fieldPoint);
    const Real m = magnitude(d);
    if (m < sourceCoincidenceTolerance) {
        throw FieldSingularityError(fieldPoint, "probe coincides with a source point");
    }
    return d / (m * m * m);
}

}  // namespace detail

// Electric field of a charge distribution by Coulomb superposition.
// Continuous distributions integrate lambda/sigma/rho times
// (r - r')/|r - r'|^3 over their domain with the distribution's sampler
// resolution; the result is scaled by 1/(4 pi epsilon0).
inline VectorField eField(const ChargeDistribution& dist, const PhysicalConstants& pc = {}) {
    const Real coulomb = 1.0 / (4.0 * std::numbers::pi * pc.epsilon0);
    return std::visit(
        [&](const auto& d) -> VectorField {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, PointCharge>) {
                return [coulomb, d](const Position& r) {
                    return (coulomb * d.charge) * detail::inverseSquareDirection(d.at, r);
                };
            } else if constexpr (std::is_same_v<T, LineCharge>) {
                auto samples = std::make_shared<const std::vector<CurvePoint>>(
                    curveSample(d.resolution)(d.along));
                const ScalarField lambda = d.lambda;
                return [coulomb, samples, lambda](const Position& r) {
                    const VectorField integrand = [&](const Position& src) {
                        return lambda(src) * detail::inverseSquareDirection(src, r);
                    };
                    return coulomb * vectorLineIntegral(*samples, integrand);
                };
            } else if constexpr (std::is_same_v<T, SurfaceCharge>) {
                auto samples = std::make_shared<const std::vector<SurfacePoint>>(
                    surfaceSample(d.resolution)(d.on));
                const ScalarField sigma = d.sigma;
                return [coulomb, samples, sigma](const Position& r) {
                    const VectorField integrand = [&](const Position& src) {
                        return sigma(src) * detail::inverseSquareDirection(src, r);
                    };
                    return coulomb * vectorSurfaceIntegral(*samples, integrand);
                };
            } else if constexpr (std::is_same_v<T, VolumeCharge>) {
                auto samples = std::make_shared<const std::vector<VolumePoint>>(
                    volumeSample(d.resolution)(d.in));
                const ScalarField rho = d.rho;
                return [coulomb, samples, rho](const Position& r) {
                    const VectorField integrand = [&](const Position& src) {
                        return rho(src) * detail::inverseSquareDirection(src, r);
                    };
                    return coulomb * vectorVolumeIntegral(*samples, integrand);
                };
            } else {
                std::vector<VectorField> members;
                members.reserve(d.parts.size());
                for (const ChargeDistribution& part : d.parts) members.push_back(eField(part, pc));
                return [members](const Position& r) {
                    Vec3 total;
                    for (const VectorField& m : members) total += m(r);
                    return total;
                };
            }
        },
        dist.value());
}

// Magnetic field of a line current by the Biot-Savart law:
// B(r) = -mu0 I / (4 pi) * Integral_C (r - r')/|r - r'|^3 x dl'.
inline VectorField bFieldFromLineCurrent(Real current, const Curve& wire,
                                         int resolution = defaultCurveResolution,
                                         const PhysicalConstants& pc = {}) {
    const Real coeff = -pc.mu0 * current / (4.0 * std::numbers::pi);
    auto samples = std::make_shared<const std::vector<CurvePoint>>(curveSample(resolution)(wire));
    return [coeff, samples](const Position& r) {
        const VectorField integrand = [&r](const Position& src) {
            return detail::inverseSquareDirection(src, r);
        };
        return coeff * crossedLineIntegral(*samples, integrand);
    };
}

inline VectorField bField(const CurrentDistribution& dist, const PhysicalConstants& pc = {}) {
    return std::visit(
        [&](const auto& d) -> VectorField {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, LineCurrent>) {
                return bFieldFromLineCurrent(d.current, d.along, d.resolution, pc);
            } else {
                std::vector<VectorField> members;
                members.reserve(d.parts.size());
                for (const CurrentDistribution& part : d.parts) members.push_back(bField(part, pc));
                return [members](const Position& r) {
                    Vec3 total;
                    for (const VectorField& m : members) total += m(r);
                    return total;
                };
            }
        },
        dist.value());
}

// Total charge in coulombs: the density integrated over the carrier domain.
inline Real totalCharge(const ChargeDistribution& dist) {
    return std::visit(
        [](const auto& d) -> Real {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, PointCharge>) {
                return d.charge;
            } else if constexpr (std::is_same_v<T, LineCharge>) {
                return scalarLineIntegral(curveSample(d.resolution), d.lambda, d.along);
            } else if constexpr (std::is_same_v<T, SurfaceCharge>) {
                return scalarSurfaceIntegral(surfaceSample(d.resolution), d.sigma, d.on);
            } else if constexpr (std::is_same_v<T, VolumeCharge>) {
                return scalarVolumeIntegral(volumeSample(d.resolution), d.rho, d.in);
            } else {
                Real total = 0.0;
                for (const ChargeDistribution& part : d.parts) total += totalCharge(part);
                return total;
            }
        },
        dist.value());
}

}  // namespace fieldcalc
