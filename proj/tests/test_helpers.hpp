#pragma once
// Shared helpers for the test suites: seeded generators and random
// polynomial fields of degree <= 3.

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "fieldcalc/geometry.hpp"

namespace testhelp {

using fieldcalc::Position;
using fieldcalc::Real;
using fieldcalc::ScalarField;
using fieldcalc::Vec3;
using fieldcalc::VectorField;

inline std::mt19937 seededRng(unsigned seed) { return std::mt19937{seed}; }

inline Vec3 randomVec(std::mt19937& rng, Real lo = -2.0, Real hi = 2.0) {
    std::uniform_real_distribution<Real> d(lo, hi);
    return Vec3{d(rng), d(rng), d(rng)};
}

inline Position randomPosition(std::mt19937& rng, Real lo = -2.0, Real hi = 2.0) {
    std::uniform_real_distribution<Real> d(lo, hi);
    return Position{d(rng), d(rng), d(rng)};
}

// All monomial exponents (a, b, c) with a + b + c <= 3.
inline const std::vector<std::array<int, 3>>& cubicMonomials() {
    static const std::vector<std::array<int, 3>> exps = [] {
        std::vector<std::array<int, 3>> out;
        for (int a = 0; a <= 3; ++a)
            for (int b = 0; a + b <= 3; ++b)
                for (int c = 0; a + b + c <= 3; ++c) out.push_back({a, b, c});
        return out;
    }();
    return exps;
}

struct PolynomialScalar {
    std::vector<Real> coeffs;  // one per cubicMonomials() entry

    Real operator()(const Position& p) const {
        const auto& exps = cubicMonomials();
        Real total = 0.0;
        for (size_t i = 0; i < exps.size(); ++i) {
            Real term = coeffs[i];
            for (int k = 0; k < exps[i][0]; ++k) term *= p.x;
            for (int k = 0; k < exps[i][1]; ++k) term *= p.y;
            for (int k = 0; k < exps[i][2]; ++k) term *= p.z;
            total += term;
        }
        return total;
    }
};

inline PolynomialScalar randomPolynomial(std::mt19937& rng) {
    std::uniform_real_distribution<Real> d(-2.0, 2.0);
    PolynomialScalar p;
    p.coeffs.resize(cubicMonomials().size());
    for (Real& c : p.coeffs) c = d(rng);
    return p;
}

inline ScalarField randomScalarField(std::mt19937& rng) {
    auto p = randomPolynomial(rng);
    return [p](const Position& pos) { return p(pos); };
}

inline VectorField randomVectorField(std::mt19937& rng) {
    auto px = randomPolynomial(rng);
    auto py = randomPolynomial(rng);
    auto pz = randomPolynomial(rng);
    return [px, py, pz](const Position& pos) { return Vec3{px(pos), py(pos), pz(pos)}; };
}

}  // namespace testhelp
