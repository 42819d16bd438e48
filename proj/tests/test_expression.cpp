#include "catch_amalgamated.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "fieldcalc/expression.hpp"

using fieldcalc::Expression;
using fieldcalc::ExpressionError;
using Catch::Matchers::WithinAbs;

namespace {
const std::vector<std::string> xyz{"x", "y", "z"};

double evalXyz(const std::string& src, double x, double y, double z) {
    return Expression::parse(src, xyz)(std::array<double, 3>{x, y, z});
}
}  // namespace

TEST_CASE("arithmetic and precedence") {
    REQUIRE(evalXyz("1+2*3", 0, 0, 0) == 7.0);
    REQUIRE(evalXyz("(1+2)*3", 0, 0, 0) == 9.0);
    REQUIRE(evalXyz("2^3^2", 0, 0, 0) == 512.0);  // right-associative
    REQUIRE(evalXyz("-2^2", 0, 0, 0) == -4.0);    // unary minus binds looser than ^
    REQUIRE(evalXyz("6/3/2", 0, 0, 0) == 1.0);
    REQUIRE(evalXyz("1 - 2 - 3", 0, 0, 0) == -4.0);
    REQUIRE(evalXyz("--3", 0, 0, 0) == 3.0);
}

TEST_CASE("variables, functions, constants") {
    REQUIRE(evalXyz("x^2 + y*z", 3, 2, 5) == 19.0);
    REQUIRE_THAT(evalXyz("sin(pi/2)", 0, 0, 0), WithinAbs(1.0, 1e-15));
    REQUIRE_THAT(evalXyz("cos(0)", 0, 0, 0), WithinAbs(1.0, 1e-15));
    REQUIRE_THAT(evalXyz("exp(1)", 0, 0, 0), WithinAbs(std::numbers::e, 1e-14));
    REQUIRE(evalXyz("sqrt(16)", 0, 0, 0) == 4.0);
    REQUIRE(evalXyz("-z", 0, 0, 2.5) == -2.5);
    REQUIRE_THAT(evalXyz("2*pi", 0, 0, 0), WithinAbs(2 * std::numbers::pi, 1e-15));
    REQUIRE(evalXyz("1e-9", 0, 0, 0) == 1e-9);
    REQUIRE(evalXyz("(y-1)/sqrt((y-1)^2)", 0, 3, 0) == 1.0);

    const std::vector<std::string> tVar{"t"};
    const Expression e = Expression::parse("cos(t) + t^2", tVar);
    REQUIRE_THAT(e(std::array<double, 1>{0.0}), WithinAbs(1.0, 1e-15));
    REQUIRE(e.source() == "cos(t) + t^2");
}

TEST_CASE("parse errors carry positions") {
    REQUIRE_THROWS_AS(Expression::parse("x +", xyz), ExpressionError);
    REQUIRE_THROWS_AS(Expression::parse("2 * w", xyz), ExpressionError);
    REQUIRE_THROWS_AS(Expression::parse("sin 3", xyz), ExpressionError);
    REQUIRE_THROWS_AS(Expression::parse("(1+2", xyz), ExpressionError);
    REQUIRE_THROWS_AS(Expression::parse("1 2", xyz), ExpressionError);
    REQUIRE_THROWS_AS(Expression::parse("", xyz), ExpressionError);

    try {
        Expression::parse("x + bogus", xyz);
        FAIL("expected ExpressionError");
    } catch (const ExpressionError& e) {
        REQUIRE(std::string(e.what()).find("bogus") != std::string::npos);
        REQUIRE(e.position() == 4);
    }
}

TEST_CASE("division by zero follows IEEE semantics") {
    REQUIRE(std::isinf(evalXyz("1/x", 0, 0, 0)));
    REQUIRE(std::isnan(evalXyz("sqrt(x)", -1, 0, 0)));
}
