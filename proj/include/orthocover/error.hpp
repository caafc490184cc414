#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orthocover {

enum class ErrorCode {
    NotClosedOrthogonal,
    SelfIntersecting,
    CollinearRun,
    TooFewVertices,
    CoordinateOverflow,
    NotConvexVertex,
    NotValidSquare,
    MaterializationCapExceeded,
    PackOutsidePolygon,
    InternalInvariantViolation,
    NotSeparating,
    RecursionDepthExceeded,
    LatticeCapExceeded,
    NoSimplicialNode,
    SearchCapExceeded,
    GenerationFailed,
    ParseError,
};

std::string_view to_string(ErrorCode code);

// Every library failure is reported through this type; `code()` is stable and
// the CLI maps it onto exit statuses.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Input problems (exit 2), resource caps (exit 3), everything else is a bug (exit 4).
bool is_input_error(ErrorCode code);
bool is_cap_error(ErrorCode code);

}  // namespace orthocover
