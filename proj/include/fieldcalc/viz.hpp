#pragma once
// Gradient-shaded arrow-grid rendering of a vector field on a plane slice,
// written as SVG 1.1. Arrow length is fixed; field strength is encoded as
// arrow darkness (white = zero, black = grid maximum after the monotone
// scale function is applied).

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fieldcalc/errors.hpp"
#include "fieldcalc/geometry.hpp"

namespace fieldcalc {

// Which plane we are looking at and how a 3-vector becomes a 2-D arrow.
struct PlaneSlice {
    std::function<Position(Real, Real)> embed;
    std::function<std::array<Real, 2>(const Vec3&)> project;
    Real uLo{0.0}, uHi{0.0};
    Real vLo{0.0}, vHi{0.0};
};

inline PlaneSlice makePlaneSlice(const Position& origin, const Vec3& uAxis, const Vec3& vAxis,
                                 Real uLo, Real uHi, Real vLo, Real vHi) {
    const Vec3 uHat = normalize(uAxis);
    const Vec3 vHat = normalize(vAxis);
    return PlaneSlice{
        [origin, uAxis, vAxis](Real u, Real v) { return origin + u * uAxis + v * vAxis; },
        [uHat, vHat](const Vec3& w) { return std::array<Real, 2>{dot(w, uHat), dot(w, vHat)}; },
        uLo, uHi, vLo, vHi};
}

struct RenderSpec {
    std::function<Real(Real)> scale = [](Real x) { return std::cbrt(x); };  // monotone, scale(0)=0
    int gridN = 20;
    std::string outputPath;
    Real arrowLength = 0.8;  // fraction of cell size
};

struct ArrowInfo {
    int iu{0}, iv{0};      // cell indices
    Real u{0.0}, v{0.0};   // cell center in slice coordinates
    Real magnitude{0.0};   // |F| at the cell center
    Real intensity{0.0};   // 0 = white, 1 = black
    int grayLevel{255};    // stroke component: round(255 * (1 - intensity))
};

struct RenderResult {
    std::string svg;
    std::vector<ArrowInfo> arrows;
    std::vector<std::string> warnings;  // one per singular cell
    Real maxMagnitude{0.0};
};

namespace detail {

inline void appendf(std::string& out, const char* fmt, ...) {
    char buf[512];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buf, sizeof(buf), fmt, args);
    va_end(args);
    out += buf;
}

}  // namespace detail

// Render without touching the filesystem; deterministic byte-for-byte.
inline RenderResult renderVectorFieldToString(const RenderSpec& spec, const PlaneSlice& slice,
                                              const VectorField& field) {
    if (spec.gridN < 2) throw std::invalid_argument("renderVectorField: gridN must be >= 2");
    const int n = spec.gridN;
    const Real du = (slice.uHi - slice.uLo) / n;
    const Real dv = (slice.vHi - slice.vLo) / n;

    struct Cell {
        Real u, v;
        std::optional<Vec3> value;
    };
    std::vector<Cell> cells;
    cells.reserve(static_cast<size_t>(n) * n);

    RenderResult result;
    Real maxScaled = 0.0;
    for (int iv = 0; iv < n; ++iv) {
        for (int iu = 0; iu < n; ++iu) {
            const Real u = slice.uLo + (iu + 0.5) * du;
            const Real v = slice.vLo + (iv + 0.5) * dv;
            Cell cell{u, v, std::nullopt};
            try {
                const Vec3 value = field(slice.embed(u, v));
                cell.value = value;
                const Real mag = magnitude(value);
                result.maxMagnitude = std::max(result.maxMagnitude, mag);
                maxScaled = std::max(maxScaled, spec.scale(mag));
            } catch (const FieldSingularityError& e) {
                result.warnings.push_back(std::string("cell omitted: ") + e.what());
            } catch (const FieldEvaluationError& e) {
                result.warnings.push_back(std::string("cell omitted: ") + e.what());
            }
            cells.push_back(cell);
        }
    }

    const Real cellPx = 32.0;
    const Real widthPx = cellPx * n;
    std::string& svg = result.svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    detail::appendf(svg,
                    "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
                    "width=\"%.0f\" height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n",
                    widthPx, widthPx, widthPx, widthPx);
    detail::appendf(svg, "<rect width=\"%.0f\" height=\"%.0f\" fill=\"white\"/>\n", widthPx, widthPx);

    const Real arrowPx = spec.arrowLength * cellPx;
    const Real strokePx = 0.06 * cellPx;
    size_t cellIndex = 0;
    for (int iv = 0; iv < n; ++iv) {
        for (int iu = 0; iu < n; ++iu, ++cellIndex) {
            const Cell& cell = cells[cellIndex];
            if (!cell.value) continue;
            const std::array<Real, 2> proj = slice.project(*cell.value);
            const Real pm = std::hypot(proj[0], proj[1]);
            if (pm == 0.0) continue;  // no direction to draw

            const Real mag = magnitude(*cell.value);
            const Real intensity =
                maxScaled > 0.0 ? std::clamp(spec.scale(mag) / maxScaled, 0.0, 1.0) : 0.0;
            const int gray = static_cast<int>(std::lround(255.0 * (1.0 - intensity)));

            // screen coordinates: y grows downward
            const Real cx = (iu + 0.5) * cellPx;
            const Real cy = widthPx - (iv + 0.5) * cellPx;
            const Real dx = proj[0] / pm;
            const Real dy = -proj[1] / pm;
            const Real tipX = cx + 0.5 * arrowPx * dx, tipY = cy + 0.5 * arrowPx * dy;
            const Real tailX = cx - 0.5 * arrowPx * dx, tailY = cy - 0.5 * arrowPx * dy;
            const Real headLen = 0.35 * arrowPx, headHalf = 0.14 * arrowPx;
            const Real baseX = tipX - headLen * dx, baseY = tipY - headLen * dy;
            const Real perpX = -dy, perpY = dx;

            detail::appendf(svg,
                            "<g class=\"arrow\" data-u=\"%.17g\" data-v=\"%.17g\" "
                            "stroke=\"rgb(%d,%d,%d)\" fill=\"rgb(%d,%d,%d)\" stroke-width=\"%.2f\">",
                            cell.u, cell.v, gray, gray, gray, gray, gray, gray, strokePx);
            detail::appendf(svg, "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\"/>",
                            tailX, tailY, baseX, baseY);
            detail::appendf(svg, "<path d=\"M %.2f %.2f L %.2f %.2f L %.2f %.2f Z\"/>",
                            tipX, tipY, baseX + headHalf * perpX, baseY + headHalf * perpY,
                            baseX - headHalf * perpX, baseY - headHalf * perpY);
            svg += "</g>\n";

            result.arrows.push_back(ArrowInfo{iu, iv, cell.u, cell.v, mag, intensity, gray});
        }
    }
    svg += "</svg>\n";
    return result;
}

// Render and write the SVG to spec.outputPath.
inline RenderResult renderVectorField(const RenderSpec& spec, const PlaneSlice& slice,
                                      const VectorField& field) {
    RenderResult result = renderVectorFieldToString(spec, slice, field);
    std::ofstream out(spec.outputPath, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + spec.outputPath);
    out << result.svg;
    out.flush();
    if (!out) throw IoError("error writing output file: " + spec.outputPath);
    return result;
}

}  // namespace fieldcalc
