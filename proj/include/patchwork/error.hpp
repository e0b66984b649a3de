#pragma once

#include <stdexcept>
#include <string>

namespace patchwork {

enum class ErrorKind {
    DimensionMismatch,
    DegreeOverflow,
    DependentBasis,
    IndexOutOfRange,
    NonPrimitiveSimplex,
    VolumeMismatch,
    DanglingFace,
    SingularPolytope,
    UnknownSimplex,
    SizeMismatch,
    InvalidIndexSet,
    BoundarySimplex,
    NotAVertexOf,
    NotInLine,
    NotRhoUniform,
    WrongDimension,
    SedDimensionMismatch,
    UnsupportedDimension,
    CellCapExceeded,
    TooManyVertices,
    InvalidInput,
    IoError,
};

const char* error_kind_name(ErrorKind kind);

/**
 * Single exception type for the library.  The kind distinguishes validation
 * failures (bad input data) from resource-cap refusals and internal errors.
 */
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

    bool is_resource_cap() const {
        return kind_ == ErrorKind::CellCapExceeded || kind_ == ErrorKind::TooManyVertices;
    }

private:
    ErrorKind kind_;
};

}  // namespace patchwork
