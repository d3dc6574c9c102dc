#ifndef CURVEMODULI_ERRORS_HPP
#define CURVEMODULI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace curvemoduli {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed external input (bad JSON shape, unparsable rationals). CLI exit 2.
struct ParseError : Error {
    using Error::Error;
};

// A mathematical precondition was violated. CLI exit 3.
struct DomainError : Error {
    using Error::Error;
};

struct DependentLinearForms : DomainError {
    DependentLinearForms() : DomainError("linear forms are not independent") {}
};

struct PointNotOnCurve : DomainError {
    PointNotOnCurve() : DomainError("point does not lie on the curve") {}
};

struct DegreeTooSmall : DomainError {
    explicit DegreeTooSmall(int d)
        : DomainError("degree must be at least 3, got " + std::to_string(d)) {}
};

struct DegreeMismatch : DomainError {
    explicit DegreeMismatch(const std::string& what) : DomainError(what) {}
};

struct ZeroDeterminant : DomainError {
    ZeroDeterminant() : DomainError("matrix has identically zero determinant") {}
};

struct NotInSingularLocus : DomainError {
    NotInSingularLocus() : DomainError("matrix does not define a singular sheaf") {}
};

struct NotNormalized : DomainError {
    NotNormalized() : DomainError("matrix is not in the standard chart (z1, z2) = (x1, x2)") {}
};

struct TangentVectorNotNormal : DomainError {
    TangentVectorNotNormal() : DomainError("tangent vector has zero residue, not a normal direction") {}
};

} // namespace curvemoduli

#endif
