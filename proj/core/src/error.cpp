#include "scarftree/error.hpp"

namespace scarftree {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::EmptyFace: return "EmptyFace";
    case ErrorCode::TooManyVertices: return "TooManyVertices";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::NotAFacet: return "NotAFacet";
    case ErrorCode::NotAFace: return "NotAFace";
    case ErrorCode::InvalidStep: return "InvalidStep";
    case ErrorCode::BadFacePair: return "BadFacePair";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::NotAForest: return "NotAForest";
    case ErrorCode::EmptyList: return "EmptyList";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotMinimal: return "NotMinimal";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::DivisibilityViolation: return "DivisibilityViolation";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::NotAResolution: return "NotAResolution";
    case ErrorCode::InternalClosureViolation: return "InternalClosureViolation";
    case ErrorCode::BoundaryOfSimplex: return "BoundaryOfSimplex";
    case ErrorCode::DegenerateVertexFacet: return "DegenerateVertexFacet";
    case ErrorCode::BadH: return "BadH";
    case ErrorCode::IndexMismatch: return "IndexMismatch";
    case ErrorCode::InvalidVertexName: return "InvalidVertexName";
    case ErrorCode::IOError: return "IOError";
  }
  return "Unknown";
}

}  // namespace scarftree
