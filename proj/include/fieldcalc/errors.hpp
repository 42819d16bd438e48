#pragma once
// Error types that carry the position at which field evaluation failed.

#include <cstdio>
#include <stdexcept>
#include <string>

#include "fieldcalc/geometry.hpp"

namespace fieldcalc {

namespace detail {
inline std::string formatPosition(const Position& p) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "(%.17g, %.17g, %.17g)", p.x, p.y, p.z);
    return buf;
}
}  // namespace detail

// Thrown when a field is probed too close to one of its sources.
class FieldSingularityError : public std::runtime_error {
public:
    FieldSingularityError(const Position& at, const std::string& detail)
        : std::runtime_error("field singularity at " + detail::formatPosition(at) + ": " + detail),
          at_(at) {}

    const Position& at() const { return at_; }

private:
    Position at_;
};

// Wraps any failure raised while evaluating a field at a sample point, so the
// offending position travels with the error.
class FieldEvaluationError : public std::runtime_error {
public:
    FieldEvaluationError(const Position& at, const std::string& inner)
        : std::runtime_error("field evaluation failed at sample " + detail::formatPosition(at) +
                             ": " + inner),
          at_(at) {}

    const Position& at() const { return at_; }

private:
    Position at_;
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace fieldcalc
