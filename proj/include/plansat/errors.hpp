#pragma once

#include <stdexcept>
#include <string>

namespace plansat {

enum class ErrorCode {
    BadParameter,
    VertexCountMismatch,
    NotMaximalPlanar,
    TooFewVertices,
    MalformedRotation,
    MalformedAnchor,
    NotAddable,
    UnknownEdge,
    FlipCreatesParallelEdge,
    NotFlippable,
    NotASubgraph,
    PreconditionFailed,
    InternalClaimFailed,
    InsufficientTriangularFaces,
    TooLarge,
    ParseError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace plansat
