#include "orthocover/error.hpp"

namespace orthocover {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotClosedOrthogonal: return "NotClosedOrthogonal";
        case ErrorCode::SelfIntersecting: return "SelfIntersecting";
        case ErrorCode::CollinearRun: return "CollinearRun";
        case ErrorCode::TooFewVertices: return "TooFewVertices";
        case ErrorCode::CoordinateOverflow: return "CoordinateOverflow";
        case ErrorCode::NotConvexVertex: return "NotConvexVertex";
        case ErrorCode::NotValidSquare: return "NotValidSquare";
        case ErrorCode::MaterializationCapExceeded: return "MaterializationCapExceeded";
        case ErrorCode::PackOutsidePolygon: return "PackOutsidePolygon";
        case ErrorCode::InternalInvariantViolation: return "InternalInvariantViolation";
        case ErrorCode::NotSeparating: return "NotSeparating";
        case ErrorCode::RecursionDepthExceeded: return "RecursionDepthExceeded";
        case ErrorCode::LatticeCapExceeded: return "LatticeCapExceeded";
        case ErrorCode::NoSimplicialNode: return "NoSimplicialNode";
        case ErrorCode::SearchCapExceeded: return "SearchCapExceeded";
        case ErrorCode::GenerationFailed: return "GenerationFailed";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + (detail.empty() ? "" : ": " + detail)),
      code_(code) {}

bool is_input_error(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotClosedOrthogonal:
        case ErrorCode::SelfIntersecting:
        case ErrorCode::CollinearRun:
        case ErrorCode::TooFewVertices:
        case ErrorCode::CoordinateOverflow:
        case ErrorCode::ParseError:
            return true;
        default:
            return false;
    }
}

bool is_cap_error(ErrorCode code) {
    switch (code) {
        case ErrorCode::LatticeCapExceeded:
        case ErrorCode::SearchCapExceeded:
        case ErrorCode::MaterializationCapExceeded:
            return true;
        default:
            return false;
    }
}

}  // namespace orthocover
