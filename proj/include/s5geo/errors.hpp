#pragma once

#include <stdexcept>
#include <string>

namespace s5geo {

struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// sin(beta) below the guard band: e5 undefined (contact angle 0 or pi).
struct BetaDegenerate : GeometryError {
    BetaDegenerate() : GeometryError("contact angle degenerate: sin(beta) < 1e-6") {}
};

// sin(alpha) below the guard band: e3, e4 undefined.
struct AlphaDegenerate : GeometryError {
    AlphaDegenerate() : GeometryError("holomorphic angle degenerate: sin(alpha) < 1e-6") {}
};

struct DegenerateMetric : GeometryError {
    DegenerateMetric() : GeometryError("induced metric degenerate: EG - F^2 <= 1e-14") {}
};

struct NonFinite : GeometryError {
    NonFinite() : GeometryError("non-finite value in derivative data") {}
};

struct InvalidRadii : GeometryError {
    explicit InvalidRadii(const std::string& what) : GeometryError("invalid radii: " + what) {}
};

struct DegenerateExponents : GeometryError {
    DegenerateExponents() : GeometryError("exponent rows induce a degenerate metric") {}
};

struct InfeasibleConstraint : GeometryError {
    explicit InfeasibleConstraint(const std::string& what)
        : GeometryError("infeasible constraint: " + what) {}
};

struct NotMinimal : GeometryError {
    NotMinimal() : GeometryError("surface is not minimal on enough of the grid") {}
};

}  // namespace s5geo
