#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace brickwang {

enum class ErrorCode {
    TooFewColors,
    DuplicateCell,
    InvalidPartial,
    ConstraintIncomplete,
    NoCompletion,
    NotATree,
    TooLarge,
    Syntax,
    Schema,
    MissingBoundaryLeg,
    ExtraBoundaryLeg,
    ColorOutOfRange,
    InvalidTiling,
    InternalInvariant,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library. `path()` points at the offending
/// document field (JSON-pointer-ish, e.g. `$.boundary[3].color`) when the
/// error came from parsing, and is empty otherwise.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, std::string path = {})
        : std::runtime_error(message), code_(code), path_(std::move(path)) {}

    ErrorCode code() const noexcept { return code_; }
    const std::string& path() const noexcept { return path_; }

private:
    ErrorCode code_;
    std::string path_;
};

}  // namespace brickwang
