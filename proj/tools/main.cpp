// Command-line front end: evaluate fields, run the nine integrals, check the
// fundamental theorems, and render gradient-shaded field plots, all driven by
// JSON scene files (docs/scene-schema.md).
//
// Exit codes: 0 success, 2 usage/parse error, 3 check-threshold failure,
// 4 runtime singularity or I/O failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fieldcalc/fieldcalc.hpp"

namespace {

using namespace fieldcalc;

constexpr int exitOk = 0;
constexpr int exitUsage = 2;
constexpr int exitCheckFailed = 3;
constexpr int exitRuntime = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open scene file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Position parseProbe(const std::string& text) {
    double x = 0, y = 0, z = 0;
    char trailing = 0;
    if (std::sscanf(text.c_str(), " %lf , %lf , %lf %c", &x, &y, &z, &trailing) != 3) {
        throw UsageError("probe must be 'x,y,z', got '" + text + "'");
    }
    return Position{x, y, z};
}

const VectorField& vectorFieldNamed(const Scene& scene, const std::string& name) {
    auto it = scene.vectorFields.find(name);
    if (it != scene.vectorFields.end()) return it->second;
    if (scene.scalarFields.count(name)) {
        throw UsageError("field '" + name + "' is a scalar field; a vector field is required");
    }
    throw UsageError("no field named '" + name + "'");
}

const ScalarField& scalarFieldNamed(const Scene& scene, const std::string& name) {
    auto it = scene.scalarFields.find(name);
    if (it != scene.scalarFields.end()) return it->second;
    if (scene.vectorFields.count(name)) {
        throw UsageError("field '" + name + "' is a vector field; a scalar field is required");
    }
    throw UsageError("no field named '" + name + "'");
}

const Curve& curveNamed(const Scene& scene, const std::string& name, const std::string& role) {
    auto it = scene.curves.find(name);
    if (it == scene.curves.end()) {
        throw UsageError(role + " requires a curve; '" + name + "' is not a defined curve");
    }
    return it->second;
}

const Surface& surfaceNamed(const Scene& scene, const std::string& name, const std::string& role) {
    auto it = scene.surfaces.find(name);
    if (it == scene.surfaces.end()) {
        throw UsageError(role + " requires a surface; '" + name + "' is not a defined surface");
    }
    return it->second;
}

const Volume& volumeNamed(const Scene& scene, const std::string& name, const std::string& role) {
    auto it = scene.volumes.find(name);
    if (it == scene.volumes.end()) {
        throw UsageError(role + " requires a volume; '" + name + "' is not a defined volume");
    }
    return it->second;
}

void runEval(const Scene& scene, const std::string& fieldName,
             const std::vector<std::string>& probeTexts, std::ostream& out) {
    const VectorField& field = vectorFieldNamed(scene, fieldName);
    std::vector<Position> probes;
    probes.reserve(probeTexts.size());
    for (const std::string& t : probeTexts) probes.push_back(parseProbe(t));
    for (const Position& p : probes) {
        const Vec3 v = field(p);
        out << fmt17(p.x) << ' ' << fmt17(p.y) << ' ' << fmt17(p.z) << " : " << fmt17(v.x) << ' '
            << fmt17(v.y) << ' ' << fmt17(v.z) << '\n';
    }
}

void runIntegrate(const Scene& scene, const std::string& kind, const std::string& fieldName,
                  const std::string& domainName, std::optional<int> n, std::ostream& out) {
    auto printScalar = [&out](Real v) { out << fmt17(v) << '\n'; };
    auto printVector = [&out](const Vec3& v) {
        out << fmt17(v.x) << ' ' << fmt17(v.y) << ' ' << fmt17(v.z) << '\n';
    };
    if (kind == "scalarLineIntegral") {
        printScalar(scalarLineIntegral(curveSample(n.value_or(defaultCurveResolution)),
                                       scalarFieldNamed(scene, fieldName),
                                       curveNamed(scene, domainName, kind)));
    } else if (kind == "vectorLineIntegral") {
        printVector(vectorLineIntegral(curveSample(n.value_or(defaultCurveResolution)),
                                       vectorFieldNamed(scene, fieldName),
                                       curveNamed(scene, domainName, kind)));
    } else if (kind == "dottedLineIntegral") {
        printScalar(dottedLineIntegral(curveSample(n.value_or(defaultCurveResolution)),
                                       vectorFieldNamed(scene, fieldName),
                                       curveNamed(scene, domainName, kind)));
    } else if (kind == "crossedLineIntegral") {
        printVector(crossedLineIntegral(curveSample(n.value_or(defaultCurveResolution)),
                                        vectorFieldNamed(scene, fieldName),
                                        curveNamed(scene, domainName, kind)));
    } else if (kind == "scalarSurfaceIntegral") {
        printScalar(scalarSurfaceIntegral(surfaceSample(n.value_or(defaultSurfaceResolution)),
                                          scalarFieldNamed(scene, fieldName),
                                          surfaceNamed(scene, domainName, kind)));
    } else if (kind == "vectorSurfaceIntegral") {
        printVector(vectorSurfaceIntegral(surfaceSample(n.value_or(defaultSurfaceResolution)),
                                          vectorFieldNamed(scene, fieldName),
                                          surfaceNamed(scene, domainName, kind)));
    } else if (kind == "dottedSurfaceIntegral") {
        printScalar(dottedSurfaceIntegral(surfaceSample(n.value_or(defaultSurfaceResolution)),
                                          vectorFieldNamed(scene, fieldName),
                                          surfaceNamed(scene, domainName, kind)));
    } else if (kind == "scalarVolumeIntegral") {
        printScalar(scalarVolumeIntegral(volumeSample(n.value_or(defaultVolumeResolution)),
                                         scalarFieldNamed(scene, fieldName),
                                         volumeNamed(scene, domainName, kind)));
    } else if (kind == "vectorVolumeIntegral") {
        printVector(vectorVolumeIntegral(volumeSample(n.value_or(defaultVolumeResolution)),
                                         vectorFieldNamed(scene, fieldName),
                                         volumeNamed(scene, domainName, kind)));
    } else {
        throw UsageError("unknown integral kind '" + kind + "'");
    }
}

int runCheck(const Scene& scene, const std::string& theorem, const std::string& fieldName,
             const std::string& domainName, Real step, int nCurve, int nSurface, int nVolume,
             Real threshold, std::ostream& out) {
    TheoremReport report;
    if (theorem == "gradient") {
        report = checkGradientTheorem(scalarFieldNamed(scene, fieldName),
                                      curveNamed(scene, domainName, "gradient theorem"), step,
                                      curveSample(nCurve));
    } else if (theorem == "stokes") {
        report = checkStokes(vectorFieldNamed(scene, fieldName),
                             surfaceNamed(scene, domainName, "Stokes' theorem"), step,
                             surfaceSample(nSurface), curveSample(nCurve));
    } else if (theorem == "divergence") {
        report = checkDivergenceTheorem(vectorFieldNamed(scene, fieldName),
                                        volumeNamed(scene, domainName, "divergence theorem"), step,
                                        volumeSample(nVolume), surfaceSample(nSurface));
    } else {
        throw UsageError("unknown theorem '" + theorem + "' (expected gradient|stokes|divergence)");
    }
    out << fmt17(report.lhs) << ' ' << fmt17(report.rhs) << ' ' << fmt17(report.absoluteResidual)
        << ' ' << fmt17(report.relativeResidual) << '\n';
    return report.relativeResidual < threshold ? exitOk : exitCheckFailed;
}

std::function<Real(Real)> scaleByName(const std::string& name) {
    if (name == "cbrt") return [](Real x) { return std::cbrt(x); };
    if (name == "linear") return [](Real x) { return x; };
    if (name == "log1p") return [](Real x) { return std::log1p(x); };
    throw UsageError("unknown scale '" + name + "' (expected cbrt|linear|log1p)");
}

void runPlot(const Scene& scene, const std::string& fieldName, const std::string& sliceName,
             int gridN, const std::string& outPath, const std::string& scaleName, Real arrowLength,
             std::ostream& out) {
    const VectorField& field = vectorFieldNamed(scene, fieldName);
    auto it = scene.slices.find(sliceName);
    if (it == scene.slices.end()) throw UsageError("no slice named '" + sliceName + "'");
    RenderSpec spec;
    spec.scale = scaleByName(scaleName);
    spec.gridN = gridN;
    spec.outputPath = outPath;
    spec.arrowLength = arrowLength;
    const RenderResult result = renderVectorField(spec, it->second, field);
    for (const std::string& w : result.warnings) std::cerr << "warning: " << w << '\n';
    out << outPath << '\n';
    out << "max_magnitude " << fmt17(result.maxMagnitude) << '\n';
}

int runQueries(const Scene& scene, std::ostream& out) {
    int worst = exitOk;
    for (const Query& q : scene.queries) {
        const nlohmann::json& p = q.params;
        if (q.command == "eval") {
            std::vector<std::string> probes;
            const nlohmann::json& at = p.at("at");
            auto tripleToText = [](const nlohmann::json& t) {
                return t[0].dump() + "," + t[1].dump() + "," + t[2].dump();
            };
            if (at.is_array() && !at.empty() && at[0].is_array()) {
                for (const auto& t : at) probes.push_back(tripleToText(t));
            } else {
                probes.push_back(tripleToText(at));
            }
            runEval(scene, p.at("field").get<std::string>(), probes, out);
        } else if (q.command == "integrate") {
            std::optional<int> n;
            if (p.contains("n")) n = p.at("n").get<int>();
            runIntegrate(scene, p.at("kind").get<std::string>(), p.at("field").get<std::string>(),
                         p.at("domain").get<std::string>(), n, out);
        } else if (q.command == "check") {
            const int code = runCheck(
                scene, p.at("theorem").get<std::string>(), p.at("field").get<std::string>(),
                p.at("domain").get<std::string>(), p.value("step", defaultStep),
                p.value("n-curve", defaultCurveResolution),
                p.value("n-surface", defaultSurfaceResolution),
                p.value("n-volume", defaultVolumeResolution), p.value("threshold", 1e-2), out);
            worst = std::max(worst, code);
        } else if (q.command == "plot") {
            runPlot(scene, p.at("field").get<std::string>(), p.at("slice").get<std::string>(),
                    p.value("n", 20), p.at("out").get<std::string>(), p.value("scale", "cbrt"),
                    p.value("arrow-length", 0.8), out);
        }
    }
    return worst;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical vector calculus and static electromagnetics"};
    app.require_subcommand(1);

    std::string scenePath, fieldName, domainName, kind, theorem, sliceName, outPath;
    std::string scaleName = "cbrt";
    std::vector<std::string> probes;
    int n = 0;
    bool nGiven = false;
    int gridN = 20;
    int nCurve = fieldcalc::defaultCurveResolution;
    int nSurface = fieldcalc::defaultSurfaceResolution;
    int nVolume = fieldcalc::defaultVolumeResolution;
    double step = fieldcalc::defaultStep;
    double threshold = 1e-2;
    double arrowLength = 0.8;

    CLI::App* evalCmd = app.add_subcommand("eval", "evaluate a vector field at probe points");
    evalCmd->add_option("scene", scenePath, "scene file")->required();
    evalCmd->add_option("--field", fieldName, "vector field name")->required();
    evalCmd->add_option("--at", probes, "probe point x,y,z (repeatable)")->required();

    CLI::App* integrateCmd = app.add_subcommand("integrate", "run one of the nine integrals");
    integrateCmd->add_option("scene", scenePath, "scene file")->required();
    integrateCmd->add_option("--kind", kind, "integral kind (e.g. dottedSurfaceIntegral)")->required();
    integrateCmd->add_option("--field", fieldName, "field name")->required();
    integrateCmd->add_option("--domain", domainName, "domain shape name")->required();
    integrateCmd->add_option("--n", n, "sampler resolution override")->check(CLI::PositiveNumber);

    CLI::App* checkCmd = app.add_subcommand("check", "check a fundamental theorem");
    checkCmd->add_option("scene", scenePath, "scene file")->required();
    checkCmd->add_option("--theorem", theorem, "gradient|stokes|divergence")->required();
    checkCmd->add_option("--field", fieldName, "field name")->required();
    checkCmd->add_option("--domain", domainName, "domain shape name")->required();
    checkCmd->add_option("--step", step, "differentiation step")->check(CLI::PositiveNumber);
    checkCmd->add_option("--n-curve", nCurve, "curve sampler resolution")->check(CLI::PositiveNumber);
    checkCmd->add_option("--n-surface", nSurface, "surface sampler resolution")->check(CLI::PositiveNumber);
    checkCmd->add_option("--n-volume", nVolume, "volume sampler resolution")->check(CLI::PositiveNumber);
    checkCmd->add_option("--threshold", threshold, "relative-residual pass threshold")
        ->check(CLI::PositiveNumber);

    CLI::App* plotCmd = app.add_subcommand("plot", "render a gradient-shaded arrow grid as SVG");
    plotCmd->add_option("scene", scenePath, "scene file")->required();
    plotCmd->add_option("--field", fieldName, "vector field name")->required();
    plotCmd->add_option("--slice", sliceName, "plane slice name")->required();
    plotCmd->add_option("--n", gridN, "arrows per direction")->required()->check(CLI::PositiveNumber);
    plotCmd->add_option("--out", outPath, "output SVG path")->required();
    plotCmd->add_option("--scale", scaleName, "magnitude scale: cbrt|linear|log1p");
    plotCmd->add_option("--arrow-length", arrowLength, "arrow length as a cell fraction")
        ->check(CLI::PositiveNumber);

    CLI::App* runCmd = app.add_subcommand("run", "execute the scene's queries section");
    runCmd->add_option("scene", scenePath, "scene file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << '\n';
        return exitUsage;
    }
    nGiven = integrateCmd->count("--n") > 0;

    try {
        const fieldcalc::Scene scene = fieldcalc::parseScene(readFile(scenePath));
        if (evalCmd->parsed()) {
            runEval(scene, fieldName, probes, std::cout);
        } else if (integrateCmd->parsed()) {
            runIntegrate(scene, kind, fieldName, domainName,
                         nGiven ? std::optional<int>(n) : std::nullopt, std::cout);
        } else if (checkCmd->parsed()) {
            return runCheck(scene, theorem, fieldName, domainName, step, nCurve, nSurface, nVolume,
                            threshold, std::cout);
        } else if (plotCmd->parsed()) {
            runPlot(scene, fieldName, sliceName, gridN, outPath, scaleName, arrowLength, std::cout);
        } else if (runCmd->parsed()) {
            return runQueries(scene, std::cout);
        }
        return exitOk;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exitUsage;
    } catch (const fieldcalc::SceneParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exitUsage;
    } catch (const fieldcalc::ExpressionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exitUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed query parameters: " << e.what() << '\n';
        return exitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exitRuntime;
    }
}
