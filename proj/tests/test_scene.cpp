#include "catch_amalgamated.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "fieldcalc/scene.hpp"
#include "fieldcalc/theorems.hpp"

using namespace fieldcalc;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("minimal point-charge scene") {
    const Scene scene = parseScene(R"json({
        "charges": [{"type": "point", "q": 1e-9, "at": [0, 0, 0]}],
        "fields": {"E": {"type": "eField"}}
    })json");
    REQUIRE(scene.charges.size() == 1);
    REQUIRE(scene.vectorFields.count("E") == 1);
    const Vec3 v = scene.vectorFields.at("E")(Position{1, 0, 0});
    REQUIRE_THAT(magnitude(v), WithinRel(8.9875517873e9 * 1e-9, 1e-6));
}

TEST_CASE("dangling shape references name the missing shape") {
    try {
        parseScene(R"json({
            "currents": [{"type": "line", "current": 1.0, "curve": "loopX"}]
        })json");
        FAIL("expected SceneParseError");
    } catch (const SceneParseError& e) {
        REQUIRE(std::string(e.what()).find("loopX") != std::string::npos);
    }
}

TEST_CASE("the homework scene parses to the expected configuration") {
    const Scene scene = parseScene(R"json({
        "shapes": {
            "rect": {"kind": "parametricSurface",
                     "x": "0", "y": "s", "z": "t",
                     "s0": 0, "s1": 2, "t0": -4, "t1": 4},
            "bdy": {"kind": "boundary", "of": "rect"}
        },
        "fields": {"F": {"type": "vector", "components": ["0", "-z", "y"]}}
    })json");
    const VectorField& f = scene.vectorFields.at("F");
    const Vec3 v = f(Position{0, 1, 2});
    REQUIRE(v.x == 0.0);
    REQUIRE(v.y == -2.0);
    REQUIRE(v.z == 1.0);

    const auto report = checkStokes(f, scene.surfaces.at("rect"), 1e-6, surfaceSample(200),
                                    curveSample(1000));
    REQUIRE_THAT(report.lhs, WithinAbs(32.0, 1e-4));
    REQUIRE_THAT(report.rhs, WithinAbs(32.0, 1e-4));

    const Curve& bdy = scene.curves.at("bdy");
    const Position corner = bdy.curveFunc(0.0);
    REQUIRE(corner.x == 0.0);
    REQUIRE(corner.y == 0.0);
    REQUIRE(corner.z == -4.0);
}

TEST_CASE("serialize-parse round trip is stable") {
    const std::string text = R"json({
        "charges": [{"type": "point", "q": 2e-9, "at": [0.5, 0, 0]}],
        "shapes": {"loop": {"kind": "circle", "radius": 1.0}},
        "currents": [{"type": "line", "current": 2.0, "curve": "loop", "n": 500}],
        "fields": {"B": {"type": "bField"}, "f": {"type": "scalar", "expr": "x^2+y"}},
        "slices": {"yz": {"origin": [0,0,0], "uAxis": [0,1,0], "vAxis": [0,0,1],
                          "uRange": [-2,2], "vRange": [-2,2]}},
        "queries": [{"command": "eval", "field": "B", "at": [0, 0, 2]}]
    })json";
    const Scene once = parseScene(text);
    const std::string serialized = serializeScene(once);
    const Scene twice = parseScene(serialized);
    REQUIRE(serializeScene(twice) == serialized);
    REQUIRE(once.doc == twice.doc);

    // behavior survives the round trip
    const Vec3 a = once.vectorFields.at("B")(Position{0, 0, 2});
    const Vec3 b = twice.vectorFields.at("B")(Position{0, 0, 2});
    REQUIRE(a.x == b.x);
    REQUIRE(a.y == b.y);
    REQUIRE(a.z == b.z);
    REQUIRE(once.queries.size() == 1);
}

TEST_CASE("constants can be overridden") {
    const std::string base = R"json({
        "charges": [{"type": "point", "q": 1e-9, "at": [0, 0, 0]}],
        "fields": {"E": {"type": "eField"}}
    })json";
    const std::string doubled = R"json({
        "constants": {"epsilon0": 1.77083756256e-11},
        "charges": [{"type": "point", "q": 1e-9, "at": [0, 0, 0]}],
        "fields": {"E": {"type": "eField"}}
    })json";
    const Vec3 e1 = parseScene(base).vectorFields.at("E")(Position{1, 0, 0});
    const Vec3 e2 = parseScene(doubled).vectorFields.at("E")(Position{1, 0, 0});
    REQUIRE_THAT(e2.x, WithinRel(e1.x / 2.0, 1e-9));
}

TEST_CASE("multiple errors are reported together") {
    try {
        parseScene(R"json({
            "shapes": {"bad": {"kind": "circle", "radius": -1}},
            "fields": {"F": {"type": "vector", "components": ["0", "qq", "y"]}},
            "bogus": {}
        })json");
        FAIL("expected SceneParseError");
    } catch (const SceneParseError& e) {
        REQUIRE(e.errors().size() >= 3);
        const std::string what = e.what();
        REQUIRE(what.find("radius") != std::string::npos);
        REQUIRE(what.find("qq") != std::string::npos);
        REQUIRE(what.find("bogus") != std::string::npos);
    }
}

TEST_CASE("invalid documents and invariant violations") {
    REQUIRE_THROWS_AS(parseScene("not json at all {"), SceneParseError);
    REQUIRE_THROWS_AS(parseScene("[1,2,3]"), SceneParseError);
    // reversed parameter range
    REQUIRE_THROWS_AS(parseScene(R"json({
        "shapes": {"c": {"kind": "parametricCurve", "x": "t", "y": "0", "z": "0",
                          "t0": 1, "t1": 0}}
    })json"), SceneParseError);
    // reversed t limits on a surface
    REQUIRE_THROWS_AS(parseScene(R"json({
        "shapes": {"s": {"kind": "parametricSurface", "x": "s", "y": "t", "z": "0",
                          "s0": 0, "s1": 1, "t0": 1, "t1": 0}}
    })json"), SceneParseError);
    // queries referencing unknown names
    REQUIRE_THROWS_AS(parseScene(R"json({
        "queries": [{"command": "eval", "field": "nope", "at": [0,0,0]}]
    })json"), SceneParseError);
    REQUIRE_THROWS_AS(parseScene(R"json({
        "fields": {"f": {"type": "scalar", "expr": "x"}},
        "queries": [{"command": "integrate", "kind": "scalarLineIntegral",
                     "field": "f", "domain": "ghost"}]
    })json"), SceneParseError);
}

TEST_CASE("malformed documents are rejected, never crash") {
    // number overflow is reported as a parse error too
    REQUIRE_THROWS_AS(parseScene(R"json({"constants": {"epsilon0": 8.85e1878128}})json"),
                      SceneParseError);

    const std::string base = R"json({
        "charges": [{"type": "point", "q": 1e-9, "at": [0, 0, 0]}],
        "shapes": {"loop": {"kind": "circle", "radius": 1}},
        "currents": [{"type": "line", "current": 1.0, "curve": "loop"}],
        "fields": {"E": {"type": "eField"}},
        "queries": [{"command": "eval", "field": "E", "at": [1,0,0]}]
    })json";
    std::mt19937 rng{42};
    std::uniform_int_distribution<size_t> posDist(0, base.size() - 1);
    std::uniform_int_distribution<int> charDist(32, 126);
    std::uniform_int_distribution<int> opDist(0, 3);
    for (int i = 0; i < 500; ++i) {
        std::string mutated = base;
        const int op = opDist(rng);
        const size_t at = posDist(rng);
        if (op == 0) mutated[at] = static_cast<char>(charDist(rng));
        else if (op == 1) mutated.erase(at, 1 + at % 7);
        else if (op == 2) mutated.insert(at, 1, static_cast<char>(charDist(rng)));
        else mutated = mutated.substr(0, at);
        try {
            parseScene(mutated);
        } catch (const SceneParseError&) {
            // expected for most mutations
        }
    }
    SUCCEED("500 mutations handled");
}

TEST_CASE("per-distribution resolution overrides") {
    const Scene scene = parseScene(R"json({
        "shapes": {"wire": {"kind": "segment", "from": [0, -1, 0], "to": [0, 1, 0]}},
        "charges": [{"type": "line", "lambda": "1e-9", "curve": "wire", "n": 17}]
    })json");
    REQUIRE(scene.charges.size() == 1);
    const auto& lc = std::get<LineCharge>(scene.charges[0].value());
    REQUIRE(lc.resolution == 17);
}

TEST_CASE("shape library kinds are all constructible from JSON") {
    const Scene scene = parseScene(R"json({
        "shapes": {
            "seg":  {"kind": "segment", "from": [0,0,0], "to": [1,0,0]},
            "loop": {"kind": "circle", "radius": 2, "center": [1,0,0], "axis": [0,0,1]},
            "coil": {"kind": "helix", "radius": 1, "pitch": 0.3, "turns": 2},
            "sq":   {"kind": "rectangle", "corner": [0,0,0], "edge1": [1,0,0], "edge2": [0,1,0]},
            "dk":   {"kind": "disk", "radius": 1},
            "sph":  {"kind": "sphereSurface", "radius": 1},
            "bl":   {"kind": "ball", "radius": 1},
            "cyl":  {"kind": "cylinder", "radius": 1, "height": 2},
            "cube": {"kind": "box", "corner": [0,0,0], "edge1": [1,0,0], "edge2": [0,1,0], "edge3": [0,0,1]},
            "pc":   {"kind": "parametricCurve", "x": "cos(t)", "y": "sin(t)", "z": "t/10", "t0": 0, "t1": 6.283185307179586},
            "ps":   {"kind": "parametricSurface", "x": "s", "y": "t", "z": "s*t", "s0": 0, "s1": 1, "t0": 0, "t1": "1-s"},
            "pv":   {"kind": "parametricVolume", "x": "s", "y": "t", "z": "u",
                      "s0": 0, "s1": 1, "t0": 0, "t1": "1-s", "u0": 0, "u1": "1-s-t"}
        }
    })json");
    REQUIRE(scene.curves.size() == 4);
    REQUIRE(scene.surfaces.size() == 4);
    REQUIRE(scene.volumes.size() == 4);

    // the parametric volume is the standard simplex: volume 1/6
    const Real simplexVolume = scalarVolumeIntegral(
        volumeSample(40), [](const Position&) { return 1.0; }, scene.volumes.at("pv"));
    REQUIRE_THAT(simplexVolume, WithinRel(1.0 / 6.0, 0.01));
}
