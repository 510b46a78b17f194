#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace scarftree {

enum class ErrorCode {
  EmptyInput,
  EmptyFace,
  TooManyVertices,
  UnknownVertex,
  NotAFacet,
  NotAFace,
  InvalidStep,
  BadFacePair,
  NotATree,
  NotAForest,
  EmptyList,
  ParseError,
  NotMinimal,
  UnknownVariable,
  DivisibilityViolation,
  InvalidField,
  ArityMismatch,
  NotAResolution,
  InternalClosureViolation,
  BoundaryOfSimplex,
  DegenerateVertexFacet,
  BadH,
  IndexMismatch,
  InvalidVertexName,
  IOError,
};

std::string_view to_string(ErrorCode code);

// Single exception type for every recoverable failure in the library. The
// code is what callers branch on; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse failures carry the offending position (byte offset into the input).
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(ErrorCode::ParseError,
              message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace scarftree
