#include "catch_amalgamated.hpp"

#include <cmath>
#include <numbers>

#include "fieldcalc/calculus.hpp"
#include "fieldcalc/domains.hpp"
#include "test_helpers.hpp"

using namespace fieldcalc;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
constexpr Real pi = std::numbers::pi;

// the homework rectangle: x = 0 plane, y in [0,2], z in [-4,4], normal +x
Surface homeworkRect() {
    return Surface{[](Real y, Real z) { return Position{0, y, z}; },
                   0.0, 2.0,
                   [](Real) { return -4.0; },
                   [](Real) { return 4.0; }};
}

Real sampledArea(const Surface& s, int n = 40) {
    return scalarSurfaceIntegral(surfaceSample(n), [](const Position&) { return 1.0; }, s);
}
}  // namespace

TEST_CASE("boundary of the homework rectangle hits the stated corners") {
    const Curve b = boundaryOfSurface(homeworkRect());
    REQUIRE(b.startParam == 0.0);
    REQUIRE(b.endParam == 4.0);

    const Position p0 = b.curveFunc(0.0);
    REQUIRE(p0.x == 0.0);
    REQUIRE(p0.y == 0.0);
    REQUIRE(p0.z == -4.0);

    const Position p2 = b.curveFunc(2.0);
    REQUIRE(p2.x == 0.0);
    REQUIRE(p2.y == 2.0);
    REQUIRE(p2.z == 4.0);

    // one unit of parameter per edge, matching the 4-piece pattern
    const Position mid1 = b.curveFunc(0.5);
    REQUIRE_THAT(mid1.y, WithinAbs(1.0, 1e-12));
    REQUIRE_THAT(mid1.z, WithinAbs(-4.0, 1e-12));
    const Position mid4 = b.curveFunc(3.5);
    REQUIRE_THAT(mid4.y, WithinAbs(0.0, 1e-12));
    REQUIRE_THAT(mid4.z, WithinAbs(0.0, 1e-12));
}

TEST_CASE("boundary of a disk is its rim circle") {
    const Curve rim = boundaryOfSurface(disk(1.0));
    const Real chordLength =
        scalarLineIntegral(curveSample(1000), [](const Position&) { return 1.0; }, rim);
    REQUIRE_THAT(chordLength, WithinRel(2 * pi, 0.01));
    // every boundary point lies on the unit circle
    for (int i = 0; i < 40; ++i) {
        const Position p = rim.curveFunc(4.0 * i / 40.0);
        REQUIRE_THAT(std::hypot(p.x, p.y), WithinAbs(1.0, 1e-9));
        REQUIRE(p.z == 0.0);
    }
}

TEST_CASE("boundary orientation obeys the right-hand rule") {
    // constant field: circulation around any closed boundary is ~0
    const VectorField constZ = [](const Position&) { return Vec3{0, 0, 1}; };
    const Real zero =
        dottedLineIntegral(curveSample(1000), constZ, boundaryOfSurface(disk(1.0)));
    REQUIRE_THAT(zero, WithinAbs(0.0, 1e-9));

    // F = (-y/2, x/2, 0) has curl z-hat: circulation = area for +z-normal surfaces
    const VectorField rot = [](const Position& p) { return Vec3{-p.y / 2, p.x / 2, 0}; };
    const Real diskCirc =
        dottedLineIntegral(curveSample(1000), rot, boundaryOfSurface(disk(1.0)));
    REQUIRE_THAT(diskCirc, WithinRel(pi, 0.01));

    const Surface sq = rectangleIn3D(Position{0, 0, 0}, Vec3{1, 0, 0}, Vec3{0, 1, 0});
    const Real sqCirc = dottedLineIntegral(curveSample(1000), rot, boundaryOfSurface(sq));
    REQUIRE_THAT(sqCirc, WithinRel(1.0, 0.01));
}

TEST_CASE("boundary of a ball is the sphere alone") {
    const auto faces = boundaryOfVolume(ball(1.0));
    Real totalArea = 0.0;
    int nonDegenerate = 0;
    for (const Surface& f : faces) {
        const Real area = sampledArea(f);
        totalArea += area;
        if (area > 1e-6) {
            ++nonDegenerate;
            // the non-degenerate face lies on the unit sphere, oriented outward
            const auto samples = surfaceSample(32)(f);
            for (const auto& s : samples) {
                REQUIRE_THAT(magnitude(Vec3{s.position.x, s.position.y, s.position.z}),
                             WithinAbs(1.0, 0.02));
                if (magnitude(s.da) > 1e-9) {
                    REQUIRE(dot(s.da, Vec3{s.position.x, s.position.y, s.position.z}) > 0.0);
                }
            }
        }
    }
    REQUIRE(nonDegenerate == 1);
    REQUIRE_THAT(totalArea, WithinRel(4 * pi, 0.01));
}

TEST_CASE("boundary of a unit cube is six unit faces") {
    const auto faces = boundaryOfVolume(box(Position{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}));
    REQUIRE(faces.size() == 6);
    Vec3 vectorTotal;
    Real scalarTotal = 0.0;
    for (const Surface& f : faces) {
        const Real area = sampledArea(f, 8);
        REQUIRE_THAT(area, WithinRel(1.0, 0.01));
        scalarTotal += area;
        const auto samples = surfaceSample(8)(f);
        for (const auto& s : samples) vectorTotal += s.da;
    }
    REQUIRE(magnitude(vectorTotal) <= 1e-6 * scalarTotal);
}

TEST_CASE("closed boundaries have vanishing total vector area") {
    const Volume shapes[] = {ball(1.3, Position{0.2, -0.1, 0.5}), cylinderVolume(0.8, 2.0)};
    for (const Volume& v : shapes) {
        Vec3 vectorTotal;
        Real scalarTotal = 0.0;
        for (const Surface& f : boundaryOfVolume(v)) {
            for (const auto& s : surfaceSample(24)(f)) {
                vectorTotal += s.da;
                scalarTotal += magnitude(s.da);
            }
        }
        REQUIRE(magnitude(vectorTotal) <= 1e-6 * scalarTotal);
    }
}

TEST_CASE("boundary of a cylinder: lateral face and two caps") {
    const auto faces = boundaryOfVolume(cylinderVolume(1.0, 2.0));
    Real totalArea = 0.0;
    for (const Surface& f : faces) totalArea += sampledArea(f);
    REQUIRE_THAT(totalArea, WithinRel(6 * pi, 0.01));  // 2*pi*R*h + 2*pi*R^2
}

TEST_CASE("shape constructors") {
    const Curve seg = segment(Position{0, 0, 0}, Position{0, 0, 2});
    const Position segMid = seg.curveFunc((seg.startParam + seg.endParam) / 2);
    REQUIRE(segMid.x == 0.0);
    REQUIRE(segMid.y == 0.0);
    REQUIRE(segMid.z == 1.0);

    const Curve loop = circle(1.0);
    const Position q = loop.curveFunc(pi / 2);
    REQUIRE_THAT(q.x, WithinAbs(0.0, 1e-12));
    REQUIRE_THAT(q.y, WithinAbs(1.0, 1e-12));
    REQUIRE(q.z == 0.0);

    const Real ballVolume =
        scalarVolumeIntegral(volumeSample(40), [](const Position&) { return 1.0; }, ball(1.0));
    REQUIRE_THAT(ballVolume, WithinRel(4 * pi / 3, 0.01));

    const Curve h = helix(1.0, 0.5, 3.0);
    const Position hEnd = h.curveFunc(h.endParam);
    REQUIRE_THAT(hEnd.z, WithinAbs(1.5, 1e-9));  // pitch * turns
}

TEST_CASE("degenerate shape inputs are domain errors") {
    REQUIRE_THROWS_AS(circle(0.0), std::domain_error);
    REQUIRE_THROWS_AS(circle(-1.0), std::domain_error);
    REQUIRE_THROWS_AS(segment(Position{1, 2, 3}, Position{1, 2, 3}), std::domain_error);
    REQUIRE_THROWS_AS(rectangleIn3D(Position{}, Vec3{1, 0, 0}, Vec3{2, 0, 0}), std::domain_error);
    REQUIRE_THROWS_AS(sphereSurface(0.0), std::domain_error);
    REQUIRE_THROWS_AS(ball(-2.0), std::domain_error);
    REQUIRE_THROWS_AS(cylinderVolume(1.0, 0.0), std::domain_error);
    // left-handed edge triple
    REQUIRE_THROWS_AS(box(Position{}, {1, 0, 0}, {0, 0, 1}, {0, 1, 0}), std::domain_error);
    REQUIRE_THROWS_AS(helix(1.0, 0.5, 0.0), std::domain_error);
}
