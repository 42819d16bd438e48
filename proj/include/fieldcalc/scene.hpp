#pragma once
// Scene files: a JSON description of charge/current distributions, named
// shapes, fields, plane slices, and queries. See docs/scene-schema.md for the
// full schema. parseScene validates everything it can up front and reports
// all problems at once, each tagged with its location in the document.

#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "fieldcalc/calculus.hpp"
#include "fieldcalc/domains.hpp"
#include "fieldcalc/em.hpp"
#include "fieldcalc/expression.hpp"
#include "fieldcalc/geometry.hpp"
#include "fieldcalc/viz.hpp"

namespace fieldcalc {

struct SceneError {
    std::string where;    // JSON-path-like location, e.g. "shapes.loop.radius"
    std::string message;
};

class SceneParseError : public std::runtime_error {
public:
    explicit SceneParseError(std::vector<SceneError> errors)
        : std::runtime_error(format(errors)), errors_(std::move(errors)) {}

    const std::vector<SceneError>& errors() const { return errors_; }

private:
    static std::string format(const std::vector<SceneError>& errors) {
        std::string out = "scene has " + std::to_string(errors.size()) + " error(s):";
        for (const SceneError& e : errors) out += "\n  " + e.where + ": " + e.message;
        return out;
    }

    std::vector<SceneError> errors_;
};

struct Query {
    std::string command;  // eval | integrate | check | plot
    nlohmann::json params;
};

struct Scene {
    PhysicalConstants constants;
    std::vector<ChargeDistribution> charges;
    std::vector<CurrentDistribution> currents;
    std::map<std::string, Curve> curves;
    std::map<std::string, Surface> surfaces;
    std::map<std::string, Volume> volumes;
    std::map<std::string, ScalarField> scalarFields;
    std::map<std::string, VectorField> vectorFields;
    std::map<std::string, PlaneSlice> slices;
    std::vector<Query> queries;
    nlohmann::json doc;  // normalized document; serializeScene emits this
};

namespace detail {

class SceneParser {
public:
    Scene parse(const std::string& text) {
        try {
            scene_.doc = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {  // parse errors, number overflow
            fail("document", e.what());
            throw SceneParseError(std::move(errors_));
        }
        if (!scene_.doc.is_object()) {
            fail("document", "top level must be a JSON object");
            throw SceneParseError(std::move(errors_));
        }
        for (const auto& [key, value] : scene_.doc.items()) {
            if (key != "constants" && key != "charges" && key != "currents" && key != "shapes" &&
                key != "fields" && key != "slices" && key != "queries") {
                fail(key, "unknown section");
            }
        }
        parseConstants();
        parseShapes();
        parseCharges();
        parseCurrents();
        parseFields();
        parseSlices();
        parseQueries();
        if (!errors_.empty()) throw SceneParseError(std::move(errors_));
        return std::move(scene_);
    }

private:
    void fail(const std::string& where, const std::string& message) {
        errors_.push_back(SceneError{where, message});
    }

    // -- low-level readers ---------------------------------------------------

    std::optional<Real> getReal(const nlohmann::json& j, const std::string& key,
                                const std::string& where, bool required = true) {
        if (!j.contains(key)) {
            if (required) fail(where + "." + key, "missing required number");
            return std::nullopt;
        }
        if (!j[key].is_number()) {
            fail(where + "." + key, "expected a number");
            return std::nullopt;
        }
        return j[key].get<Real>();
    }

    std::optional<int> getInt(const nlohmann::json& j, const std::string& key,
                              const std::string& where) {
        if (!j.contains(key)) return std::nullopt;
        if (!j[key].is_number_integer() || j[key].get<long long>() < 1) {
            fail(where + "." + key, "expected a positive integer");
            return std::nullopt;
        }
        return j[key].get<int>();
    }

    std::optional<std::string> getString(const nlohmann::json& j, const std::string& key,
                                         const std::string& where, bool required = true) {
        if (!j.contains(key)) {
            if (required) fail(where + "." + key, "missing required string");
            return std::nullopt;
        }
        if (!j[key].is_string()) {
            fail(where + "." + key, "expected a string");
            return std::nullopt;
        }
        return j[key].get<std::string>();
    }

    std::optional<std::array<Real, 3>> getTriple(const nlohmann::json& j, const std::string& key,
                                                 const std::string& where, bool required = true) {
        if (!j.contains(key)) {
            if (required) fail(where + "." + key, "missing required [x, y, z] triple");
            return std::nullopt;
        }
        const nlohmann::json& a = j[key];
        if (!a.is_array() || a.size() != 3 || !a[0].is_number() || !a[1].is_number() ||
            !a[2].is_number()) {
            fail(where + "." + key, "expected an [x, y, z] number triple");
            return std::nullopt;
        }
        return std::array<Real, 3>{a[0].get<Real>(), a[1].get<Real>(), a[2].get<Real>()};
    }

    std::optional<Position> getPosition(const nlohmann::json& j, const std::string& key,
                                        const std::string& where, bool required = true,
                                        Position fallback = {}) {
        auto t = getTriple(j, key, where, required);
        if (!t) return required ? std::nullopt : std::optional<Position>(fallback);
        return Position{(*t)[0], (*t)[1], (*t)[2]};
    }

    std::optional<Vec3> getVec3(const nlohmann::json& j, const std::string& key,
                                const std::string& where, bool required = true,
                                Vec3 fallback = {0.0, 0.0, 1.0}) {
        auto t = getTriple(j, key, where, required);
        if (!t) return required ? std::nullopt : std::optional<Vec3>(fallback);
        return Vec3{(*t)[0], (*t)[1], (*t)[2]};
    }

    // Expressions may be written as strings or plain JSON numbers.
    std::optional<Expression> getExpression(const nlohmann::json& j, const std::string& where,
                                            std::span<const std::string> vars) {
        std::string source;
        if (j.is_string()) source = j.get<std::string>();
        else if (j.is_number()) source = j.dump();
        else {
            fail(where, "expected an expression string or number");
            return std::nullopt;
        }
        try {
            return Expression::parse(source, vars);
        } catch (const ExpressionError& e) {
            fail(where, e.what());
            return std::nullopt;
        }
    }

    std::optional<Expression> getExpressionKey(const nlohmann::json& j, const std::string& key,
                                               const std::string& where,
                                               std::span<const std::string> vars) {
        if (!j.contains(key)) {
            fail(where + "." + key, "missing required expression");
            return std::nullopt;
        }
        return getExpression(j[key], where + "." + key, vars);
    }

    // -- sections -------------------------------------------------------------

    void parseConstants() {
        if (!scene_.doc.contains("constants")) return;
        const nlohmann::json& c = scene_.doc["constants"];
        if (!c.is_object()) {
            fail("constants", "expected an object");
            return;
        }
        for (const auto& [key, value] : c.items()) {
            if (key == "epsilon0" || key == "mu0") {
                if (!value.is_number() || value.get<Real>() <= 0.0) {
                    fail("constants." + key, "expected a positive number");
                } else if (key == "epsilon0") {
                    scene_.constants.epsilon0 = value.get<Real>();
                } else {
                    scene_.constants.mu0 = value.get<Real>();
                }
            } else {
                fail("constants." + key, "unknown constant");
            }
        }
    }

    void parseShapes() {
        if (!scene_.doc.contains("shapes")) return;
        const nlohmann::json& shapes = scene_.doc["shapes"];
        if (!shapes.is_object()) {
            fail("shapes", "expected an object of name -> shape");
            return;
        }
        // boundary shapes reference other shapes, so resolve them last
        std::vector<std::pair<std::string, nlohmann::json>> boundaries;
        for (const auto& [name, def] : shapes.items()) {
            const std::string where = "shapes." + name;
            if (!def.is_object()) {
                fail(where, "expected an object");
                continue;
            }
            auto kind = getString(def, "kind", where);
            if (!kind) continue;
            if (*kind == "boundary") {
                boundaries.emplace_back(name, def);
                continue;
            }
            parseShape(name, *kind, def, where);
        }
        for (const auto& [name, def] : boundaries) {
            const std::string where = "shapes." + name;
            auto of = getString(def, "of", where);
            if (!of) continue;
            auto it = scene_.surfaces.find(*of);
            if (it == scene_.surfaces.end()) {
                fail(where + ".of", "no surface named '" + *of + "'");
                continue;
            }
            addCurve(name, boundaryOfSurface(it->second), where);
        }
    }

    void parseShape(const std::string& name, const std::string& kind, const nlohmann::json& def,
                    const std::string& where) {
        try {
            if (kind == "segment") {
                auto from = getPosition(def, "from", where);
                auto to = getPosition(def, "to", where);
                if (from && to) addCurve(name, segment(*from, *to), where);
            } else if (kind == "circle") {
                auto radius = getReal(def, "radius", where);
                auto center = getPosition(def, "center", where, false);
                auto axis = getVec3(def, "axis", where, false);
                if (radius) addCurve(name, circle(*radius, *center, *axis), where);
            } else if (kind == "helix") {
                auto radius = getReal(def, "radius", where);
                auto pitch = getReal(def, "pitch", where);
                auto turns = getReal(def, "turns", where);
                auto center = getPosition(def, "center", where, false);
                auto axis = getVec3(def, "axis", where, false);
                if (radius && pitch && turns) {
                    addCurve(name, helix(*radius, *pitch, *turns, *center, *axis), where);
                }
            } else if (kind == "parametricCurve") {
                parseParametricCurve(name, def, where);
            } else if (kind == "rectangle") {
                auto corner = getPosition(def, "corner", where);
                auto e1 = getVec3(def, "edge1", where);
                auto e2 = getVec3(def, "edge2", where);
                if (corner && e1 && e2) addSurface(name, rectangleIn3D(*corner, *e1, *e2), where);
            } else if (kind == "disk") {
                auto radius = getReal(def, "radius", where);
                auto center = getPosition(def, "center", where, false);
                auto axis = getVec3(def, "axis", where, false);
                if (radius) addSurface(name, disk(*radius, *center, *axis), where);
            } else if (kind == "sphereSurface") {
                auto radius = getReal(def, "radius", where);
                auto center = getPosition(def, "center", where, false);
                if (radius) addSurface(name, sphereSurface(*radius, *center), where);
            } else if (kind == "parametricSurface") {
                parseParametricSurface(name, def, where);
            } else if (kind == "ball") {
                auto radius = getReal(def, "radius", where);
                auto center = getPosition(def, "center", where, false);
                if (radius) addVolume(name, ball(*radius, *center), where);
            } else if (kind == "cylinder") {
                auto radius = getReal(def, "radius", where);
                auto height = getReal(def, "height", where);
                auto base = getPosition(def, "base", where, false);
                auto axis = getVec3(def, "axis", where, false);
                if (radius && height) {
                    addVolume(name, cylinderVolume(*radius, *height, *base, *axis), where);
                }
            } else if (kind == "box") {
                auto corner = getPosition(def, "corner", where);
                auto e1 = getVec3(def, "edge1", where);
                auto e2 = getVec3(def, "edge2", where);
                auto e3 = getVec3(def, "edge3", where);
                if (corner && e1 && e2 && e3) addVolume(name, box(*corner, *e1, *e2, *e3), where);
            } else if (kind == "parametricVolume") {
                parseParametricVolume(name, def, where);
            } else {
                fail(where + ".kind", "unknown shape kind '" + kind + "'");
            }
        } catch (const std::domain_error& e) {
            fail(where, e.what());
        }
    }

    void parseParametricCurve(const std::string& name, const nlohmann::json& def,
                              const std::string& where) {
        static const std::vector<std::string> vars{"t"};
        auto ex = getExpressionKey(def, "x", where, vars);
        auto ey = getExpressionKey(def, "y", where, vars);
        auto ez = getExpressionKey(def, "z", where, vars);
        auto t0 = getReal(def, "t0", where);
        auto t1 = getReal(def, "t1", where);
        if (!(ex && ey && ez && t0 && t1)) return;
        Curve c{[ex = *ex, ey = *ey, ez = *ez](Real t) {
                    const std::array<Real, 1> v{t};
                    return Position{ex(v), ey(v), ez(v)};
                },
                *t0, *t1};
        addCurve(name, std::move(c), where);
    }

    // Limit of one variable: a number or an expression in s.
    std::optional<std::function<Real(Real)>> getLimit1(const nlohmann::json& def,
                                                       const std::string& key,
                                                       const std::string& where) {
        if (!def.contains(key)) {
            fail(where + "." + key, "missing required limit (number or expression in s)");
            return std::nullopt;
        }
        static const std::vector<std::string> vars{"s"};
        auto e = getExpression(def[key], where + "." + key, vars);
        if (!e) return std::nullopt;
        return std::function<Real(Real)>([e = *e](Real s) { return e(std::array<Real, 1>{s}); });
    }

    std::optional<std::function<Real(Real, Real)>> getLimit2(const nlohmann::json& def,
                                                             const std::string& key,
                                                             const std::string& where) {
        if (!def.contains(key)) {
            fail(where + "." + key, "missing required limit (number or expression in s, t)");
            return std::nullopt;
        }
        static const std::vector<std::string> vars{"s", "t"};
        auto e = getExpression(def[key], where + "." + key, vars);
        if (!e) return std::nullopt;
        return std::function<Real(Real, Real)>(
            [e = *e](Real s, Real t) { return e(std::array<Real, 2>{s, t}); });
    }

    void parseParametricSurface(const std::string& name, const nlohmann::json& def,
                                const std::string& where) {
        static const std::vector<std::string> vars{"s", "t"};
        auto ex = getExpressionKey(def, "x", where, vars);
        auto ey = getExpressionKey(def, "y", where, vars);
        auto ez = getExpressionKey(def, "z", where, vars);
        auto s0 = getReal(def, "s0", where);
        auto s1 = getReal(def, "s1", where);
        auto t0 = getLimit1(def, "t0", where);
        auto t1 = getLimit1(def, "t1", where);
        if (!(ex && ey && ez && s0 && s1 && t0 && t1)) return;
        Surface s{[ex = *ex, ey = *ey, ez = *ez](Real sv, Real tv) {
                      const std::array<Real, 2> v{sv, tv};
                      return Position{ex(v), ey(v), ez(v)};
                  },
                  *s0, *s1, *t0, *t1};
        addSurface(name, std::move(s), where);
    }

    void parseParametricVolume(const std::string& name, const nlohmann::json& def,
                               const std::string& where) {
        static const std::vector<std::string> vars{"s", "t", "u"};
        auto ex = getExpressionKey(def, "x", where, vars);
        auto ey = getExpressionKey(def, "y", where, vars);
        auto ez = getExpressionKey(def, "z", where, vars);
        auto s0 = getReal(def, "s0", where);
        auto s1 = getReal(def, "s1", where);
        auto t0 = getLimit1(def, "t0", where);
        auto t1 = getLimit1(def, "t1", where);
        auto u0 = getLimit2(def, "u0", where);
        auto u1 = getLimit2(def, "u1", where);
        if (!(ex && ey && ez && s0 && s1 && t0 && t1 && u0 && u1)) return;
        Volume v{[ex = *ex, ey = *ey, ez = *ez](Real sv, Real tv, Real uv) {
                     const std::array<Real, 3> w{sv, tv, uv};
                     return Position{ex(w), ey(w), ez(w)};
                 },
                 *s0, *s1, *t0, *t1, *u0, *u1};
        addVolume(name, std::move(v), where);
    }

    // -- shape registration with sampled invariant validation -----------------

    bool nameTaken(const std::string& name, const std::string& where) {
        if (scene_.curves.count(name) || scene_.surfaces.count(name) || scene_.volumes.count(name)) {
            fail(where, "duplicate shape name '" + name + "'");
            return true;
        }
        return false;
    }

    static bool finitePosition(const Position& p) {
        return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z);
    }

    void addCurve(const std::string& name, Curve c, const std::string& where) {
        if (nameTaken(name, where)) return;
        if (!(c.startParam <= c.endParam)) {
            fail(where, "curve parameter range is reversed");
            return;
        }
        for (int i = 0; i <= 4; ++i) {
            const Real t = c.startParam + (c.endParam - c.startParam) * i / 4.0;
            try {
                if (!finitePosition(c.curveFunc(t))) {
                    fail(where, "curve evaluates to a non-finite position at t=" + std::to_string(t));
                    return;
                }
            } catch (const std::exception& e) {
                fail(where, std::string("curve evaluation failed: ") + e.what());
                return;
            }
        }
        scene_.curves.emplace(name, std::move(c));
    }

    void addSurface(const std::string& name, Surface s, const std::string& where) {
        if (nameTaken(name, where)) return;
        if (!(s.sLo <= s.sHi)) {
            fail(where, "surface s range is reversed");
            return;
        }
        for (int i = 0; i <= 4; ++i) {
            const Real sv = s.sLo + (s.sHi - s.sLo) * i / 4.0;
            try {
                const Real lo = s.tLo(sv), hi = s.tHi(sv);
                if (!(lo <= hi)) {
                    fail(where, "surface t limits are reversed at s=" + std::to_string(sv));
                    return;
                }
                for (int j = 0; j <= 2; ++j) {
                    if (!finitePosition(s.surfFunc(sv, lo + (hi - lo) * j / 2.0))) {
                        fail(where, "surface evaluates to a non-finite position");
                        return;
                    }
                }
            } catch (const std::exception& e) {
                fail(where, std::string("surface evaluation failed: ") + e.what());
                return;
            }
        }
        scene_.surfaces.emplace(name, std::move(s));
    }

    void addVolume(const std::string& name, Volume v, const std::string& where) {
        if (nameTaken(name, where)) return;
        if (!(v.sLo <= v.sHi)) {
            fail(where, "volume s range is reversed");
            return;
        }
        for (int i = 0; i <= 3; ++i) {
            const Real sv = v.sLo + (v.sHi - v.sLo) * i / 3.0;
            try {
                const Real tlo = v.tLo(sv), thi = v.tHi(sv);
                if (!(tlo <= thi)) {
                    fail(where, "volume t limits are reversed at s=" + std::to_string(sv));
                    return;
                }
                for (int j = 0; j <= 3; ++j) {
                    const Real tv = tlo + (thi - tlo) * j / 3.0;
                    const Real ulo = v.uLo(sv, tv), uhi = v.uHi(sv, tv);
                    if (!(ulo <= uhi)) {
                        fail(where, "volume u limits are reversed at (s,t)=(" + std::to_string(sv) +
                                        "," + std::to_string(tv) + ")");
                        return;
                    }
                    if (!finitePosition(v.volFunc(sv, tv, (ulo + uhi) / 2))) {
                        fail(where, "volume evaluates to a non-finite position");
                        return;
                    }
                }
            } catch (const std::exception& e) {
                fail(where, std::string("volume evaluation failed: ") + e.what());
                return;
            }
        }
        scene_.volumes.emplace(name, std::move(v));
    }

    // -- charges / currents ----------------------------------------------------

    ScalarField densityField(const Expression& e) {
        static const std::vector<std::string> vars{"x", "y", "z"};
        return [e](const Position& p) { return e(std::array<Real, 3>{p.x, p.y, p.z}); };
    }

    std::optional<ChargeDistribution> parseCharge(const nlohmann::json& def,
                                                  const std::string& where) {
        static const std::vector<std::string> xyz{"x", "y", "z"};
        if (!def.is_object()) {
            fail(where, "expected an object");
            return std::nullopt;
        }
        auto type = getString(def, "type", where);
        if (!type) return std::nullopt;
        if (*type == "point") {
            auto q = getReal(def, "q", where);
            auto at = getPosition(def, "at", where);
            if (!(q && at)) return std::nullopt;
            return ChargeDistribution(PointCharge{*q, *at});
        }
        if (*type == "line") {
            auto lambda = getExpressionKey(def, "lambda", where, xyz);
            auto curveName = getString(def, "curve", where);
            auto n = getInt(def, "n", where);
            if (!(lambda && curveName)) return std::nullopt;
            auto it = scene_.curves.find(*curveName);
            if (it == scene_.curves.end()) {
                fail(where + ".curve", "no curve named '" + *curveName + "'");
                return std::nullopt;
            }
            return ChargeDistribution(LineCharge{densityField(*lambda), it->second,
                                                 n.value_or(defaultCurveResolution)});
        }
        if (*type == "surface") {
            auto sigma = getExpressionKey(def, "sigma", where, xyz);
            auto surfName = getString(def, "surface", where);
            auto n = getInt(def, "n", where);
            if (!(sigma && surfName)) return std::nullopt;
            auto it = scene_.surfaces.find(*surfName);
            if (it == scene_.surfaces.end()) {
                fail(where + ".surface", "no surface named '" + *surfName + "'");
                return std::nullopt;
            }
            return ChargeDistribution(SurfaceCharge{densityField(*sigma), it->second,
                                                    n.value_or(defaultSurfaceResolution)});
        }
        if (*type == "volume") {
            auto rho = getExpressionKey(def, "rho", where, xyz);
            auto volName = getString(def, "volume", where);
            auto n = getInt(def, "n", where);
            if (!(rho && volName)) return std::nullopt;
            auto it = scene_.volumes.find(*volName);
            if (it == scene_.volumes.end()) {
                fail(where + ".volume", "no volume named '" + *volName + "'");
                return std::nullopt;
            }
            return ChargeDistribution(VolumeCharge{densityField(*rho), it->second,
                                                   n.value_or(defaultVolumeResolution)});
        }
        if (*type == "multiple") {
            if (!def.contains("parts") || !def["parts"].is_array()) {
                fail(where + ".parts", "expected an array of charge distributions");
                return std::nullopt;
            }
            MultipleCharges multi;
            bool ok = true;
            size_t i = 0;
            for (const auto& part : def["parts"]) {
                auto parsed = parseCharge(part, where + ".parts[" + std::to_string(i++) + "]");
                if (parsed) multi.parts.push_back(std::move(*parsed));
                else ok = false;
            }
            if (!ok) return std::nullopt;
            return ChargeDistribution(std::move(multi));
        }
        fail(where + ".type", "unknown charge type '" + *type + "'");
        return std::nullopt;
    }

    void parseCharges() {
        if (!scene_.doc.contains("charges")) return;
        const nlohmann::json& charges = scene_.doc["charges"];
        if (!charges.is_array()) {
            fail("charges", "expected an array");
            return;
        }
        size_t i = 0;
        for (const auto& def : charges) {
            auto parsed = parseCharge(def, "charges[" + std::to_string(i++) + "]");
            if (parsed) scene_.charges.push_back(std::move(*parsed));
        }
    }

    std::optional<CurrentDistribution> parseCurrent(const nlohmann::json& def,
                                                    const std::string& where) {
        if (!def.is_object()) {
            fail(where, "expected an object");
            return std::nullopt;
        }
        auto type = getString(def, "type", where);
        if (!type) return std::nullopt;
        if (*type == "line") {
            auto current = getReal(def, "current", where);
            auto curveName = getString(def, "curve", where);
            auto n = getInt(def, "n", where);
            if (!(current && curveName)) return std::nullopt;
            auto it = scene_.curves.find(*curveName);
            if (it == scene_.curves.end()) {
                fail(where + ".curve", "no curve named '" + *curveName + "'");
                return std::nullopt;
            }
            return CurrentDistribution(LineCurrent{*current, it->second,
                                                   n.value_or(defaultCurveResolution)});
        }
        if (*type == "multiple") {
            if (!def.contains("parts") || !def["parts"].is_array()) {
                fail(where + ".parts", "expected an array of current distributions");
                return std::nullopt;
            }
            MultipleCurrents multi;
            bool ok = true;
            size_t i = 0;
            for (const auto& part : def["parts"]) {
                auto parsed = parseCurrent(part, where + ".parts[" + std::to_string(i++) + "]");
                if (parsed) multi.parts.push_back(std::move(*parsed));
                else ok = false;
            }
            if (!ok) return std::nullopt;
            return CurrentDistribution(std::move(multi));
        }
        fail(where + ".type", "unknown current type '" + *type + "'");
        return std::nullopt;
    }

    void parseCurrents() {
        if (!scene_.doc.contains("currents")) return;
        const nlohmann::json& currents = scene_.doc["currents"];
        if (!currents.is_array()) {
            fail("currents", "expected an array");
            return;
        }
        size_t i = 0;
        for (const auto& def : currents) {
            auto parsed = parseCurrent(def, "currents[" + std::to_string(i++) + "]");
            if (parsed) scene_.currents.push_back(std::move(*parsed));
        }
    }

    void parseFields() {
        if (!scene_.doc.contains("fields")) return;
        const nlohmann::json& fields = scene_.doc["fields"];
        if (!fields.is_object()) {
            fail("fields", "expected an object of name -> field");
            return;
        }
        static const std::vector<std::string> xyz{"x", "y", "z"};
        for (const auto& [name, def] : fields.items()) {
            const std::string where = "fields." + name;
            if (!def.is_object()) {
                fail(where, "expected an object");
                continue;
            }
            if (scene_.scalarFields.count(name) || scene_.vectorFields.count(name)) {
                fail(where, "duplicate field name");
                continue;
            }
            auto type = getString(def, "type", where);
            if (!type) continue;
            if (*type == "eField") {
                scene_.vectorFields.emplace(
                    name, eField(ChargeDistribution(MultipleCharges{scene_.charges}),
                                 scene_.constants));
            } else if (*type == "bField") {
                scene_.vectorFields.emplace(
                    name, bField(CurrentDistribution(MultipleCurrents{scene_.currents}),
                                 scene_.constants));
            } else if (*type == "vector") {
                if (!def.contains("components") || !def["components"].is_array() ||
                    def["components"].size() != 3) {
                    fail(where + ".components", "expected three component expressions");
                    continue;
                }
                auto ex = getExpression(def["components"][0], where + ".components[0]", xyz);
                auto ey = getExpression(def["components"][1], where + ".components[1]", xyz);
                auto ez = getExpression(def["components"][2], where + ".components[2]", xyz);
                if (!(ex && ey && ez)) continue;
                scene_.vectorFields.emplace(
                    name, VectorField([ex = *ex, ey = *ey, ez = *ez](const Position& p) {
                        const std::array<Real, 3> v{p.x, p.y, p.z};
                        return Vec3{ex(v), ey(v), ez(v)};
                    }));
            } else if (*type == "scalar") {
                auto e = getExpressionKey(def, "expr", where, xyz);
                if (!e) continue;
                scene_.scalarFields.emplace(name, densityField(*e));
            } else {
                fail(where + ".type", "unknown field type '" + *type + "'");
            }
        }
    }

    void parseSlices() {
        if (!scene_.doc.contains("slices")) return;
        const nlohmann::json& slices = scene_.doc["slices"];
        if (!slices.is_object()) {
            fail("slices", "expected an object of name -> slice");
            return;
        }
        for (const auto& [name, def] : slices.items()) {
            const std::string where = "slices." + name;
            if (!def.is_object()) {
                fail(where, "expected an object");
                continue;
            }
            auto origin = getPosition(def, "origin", where, false);
            auto uAxis = getVec3(def, "uAxis", where);
            auto vAxis = getVec3(def, "vAxis", where);
            auto uRange = getTriplePair(def, "uRange", where);
            auto vRange = getTriplePair(def, "vRange", where);
            if (!(origin && uAxis && vAxis && uRange && vRange)) continue;
            if (magnitude(*uAxis) == 0.0 || magnitude(*vAxis) == 0.0) {
                fail(where, "slice axes must be nonzero");
                continue;
            }
            scene_.slices.emplace(name, makePlaneSlice(*origin, *uAxis, *vAxis, (*uRange)[0],
                                                       (*uRange)[1], (*vRange)[0], (*vRange)[1]));
        }
    }

    std::optional<std::array<Real, 2>> getTriplePair(const nlohmann::json& j, const std::string& key,
                                                     const std::string& where) {
        if (!j.contains(key) || !j[key].is_array() || j[key].size() != 2 ||
            !j[key][0].is_number() || !j[key][1].is_number()) {
            fail(where + "." + key, "expected a [lo, hi] number pair");
            return std::nullopt;
        }
        const Real lo = j[key][0].get<Real>(), hi = j[key][1].get<Real>();
        if (!(lo < hi)) {
            fail(where + "." + key, "range must satisfy lo < hi");
            return std::nullopt;
        }
        return std::array<Real, 2>{lo, hi};
    }

    void parseQueries() {
        if (!scene_.doc.contains("queries")) return;
        const nlohmann::json& queries = scene_.doc["queries"];
        if (!queries.is_array()) {
            fail("queries", "expected an array");
            return;
        }
        size_t i = 0;
        for (const auto& def : queries) {
            const std::string where = "queries[" + std::to_string(i++) + "]";
            if (!def.is_object()) {
                fail(where, "expected an object");
                continue;
            }
            auto command = getString(def, "command", where);
            if (!command) continue;
            if (*command == "eval") {
                requireField(def, where, true);
            } else if (*command == "integrate") {
                requireField(def, where, std::nullopt);
                requireShape(def, "domain", where);
            } else if (*command == "check") {
                requireField(def, where, std::nullopt);
                requireShape(def, "domain", where);
            } else if (*command == "plot") {
                requireField(def, where, true);
                auto sliceName = getString(def, "slice", where);
                if (sliceName && !scene_.slices.count(*sliceName)) {
                    fail(where + ".slice", "no slice named '" + *sliceName + "'");
                }
                getString(def, "out", where);
            } else {
                fail(where + ".command", "unknown command '" + *command + "'");
                continue;
            }
            scene_.queries.push_back(Query{*command, def});
        }
    }

    // vectorOnly: true -> must be a vector field; nullopt -> either kind
    void requireField(const nlohmann::json& def, const std::string& where,
                      std::optional<bool> vectorOnly) {
        auto fieldName = getString(def, "field", where);
        if (!fieldName) return;
        const bool isVector = scene_.vectorFields.count(*fieldName) > 0;
        const bool isScalar = scene_.scalarFields.count(*fieldName) > 0;
        if (!isVector && !isScalar) {
            fail(where + ".field", "no field named '" + *fieldName + "'");
        } else if (vectorOnly.value_or(false) && !isVector) {
            fail(where + ".field", "field '" + *fieldName + "' must be a vector field");
        }
    }

    void requireShape(const nlohmann::json& def, const std::string& key, const std::string& where) {
        auto name = getString(def, key, where);
        if (!name) return;
        if (!scene_.curves.count(*name) && !scene_.surfaces.count(*name) &&
            !scene_.volumes.count(*name)) {
            fail(where + "." + key, "no shape named '" + *name + "'");
        }
    }

    Scene scene_;
    std::vector<SceneError> errors_;
};

}  // namespace detail

inline Scene parseScene(const std::string& text) { return detail::SceneParser().parse(text); }

inline std::string serializeScene(const Scene& scene) { return scene.doc.dump(2) + "\n"; }

}  // namespace fieldcalc
