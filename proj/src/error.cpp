#include "planarlab/error.hpp"

namespace planarlab {

const char* to_string(Errc code) noexcept {
    switch (code) {
        case Errc::InvalidVertexCount: return "InvalidVertexCount";
        case Errc::LoopEdge: return "LoopEdge";
        case Errc::DuplicateEdge: return "DuplicateEdge";
        case Errc::VertexOutOfRange: return "VertexOutOfRange";
        case Errc::MissingEdge: return "MissingEdge";
        case Errc::MalformedEncoding: return "MalformedEncoding";
        case Errc::NotPlanarInput: return "NotPlanarInput";
        case Errc::Disconnected: return "Disconnected";
        case Errc::NotPlanar: return "NotPlanar";
        case Errc::PatternTooLarge: return "PatternTooLarge";
        case Errc::PatternNotTwoEdgeConnected: return "PatternNotTwoEdgeConnected";
        case Errc::UnknownPattern: return "UnknownPattern";
        case Errc::ResourceLimit: return "ResourceLimit";
        case Errc::IoFailure: return "IoFailure";
        case Errc::ChecksumMismatch: return "ChecksumMismatch";
        case Errc::VersionUnsupported: return "VersionUnsupported";
        case Errc::EmptyClass: return "EmptyClass";
        case Errc::EmptyClassBound: return "EmptyClassBound";
        case Errc::CensusMissing: return "CensusMissing";
        case Errc::NotTriangulation: return "NotTriangulation";
        case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace planarlab
