#include "patchwork/error.hpp"

namespace patchwork {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::DegreeOverflow: return "DegreeOverflow";
        case ErrorKind::DependentBasis: return "DependentBasis";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::NonPrimitiveSimplex: return "NonPrimitiveSimplex";
        case ErrorKind::VolumeMismatch: return "VolumeMismatch";
        case ErrorKind::DanglingFace: return "DanglingFace";
        case ErrorKind::SingularPolytope: return "SingularPolytope";
        case ErrorKind::UnknownSimplex: return "UnknownSimplex";
        case ErrorKind::SizeMismatch: return "SizeMismatch";
        case ErrorKind::InvalidIndexSet: return "InvalidIndexSet";
        case ErrorKind::BoundarySimplex: return "BoundarySimplex";
        case ErrorKind::NotAVertexOf: return "NotAVertexOf";
        case ErrorKind::NotInLine: return "NotInLine";
        case ErrorKind::NotRhoUniform: return "NotRhoUniform";
        case ErrorKind::WrongDimension: return "WrongDimension";
        case ErrorKind::SedDimensionMismatch: return "SedDimensionMismatch";
        case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
        case ErrorKind::CellCapExceeded: return "CellCapExceeded";
        case ErrorKind::TooManyVertices: return "TooManyVertices";
        case ErrorKind::InvalidInput: return "InvalidInput";
        case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

}  // namespace patchwork
