#pragma once

#include <stdexcept>
#include <string>

namespace planarlab {

enum class Errc {
    InvalidVertexCount,
    LoopEdge,
    DuplicateEdge,
    VertexOutOfRange,
    MissingEdge,
    MalformedEncoding,
    NotPlanarInput,
    Disconnected,
    NotPlanar,
    PatternTooLarge,
    PatternNotTwoEdgeConnected,
    UnknownPattern,
    ResourceLimit,
    IoFailure,
    ChecksumMismatch,
    VersionUnsupported,
    EmptyClass,
    EmptyClassBound,
    CensusMissing,
    NotTriangulation,
    InvalidArgument,
};

const char* to_string(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above so that
// callers (and tests) can branch on the kind without parsing messages.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace planarlab
