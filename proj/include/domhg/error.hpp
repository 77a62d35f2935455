#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace domhg {

enum class ErrorKind {
    EmptyFamily,
    EmptySetMember,
    OutOfGround,
    GroundMismatch,
    EmptyList,
    RankOutOfRange,
    InvalidGround,
    DuplicateLabel,
    OverlappingLabels,
    HasIsolatedVertex,
    FamilyArityMismatch,
    GroundTooLarge,
    NotAStarForest,
    PreconditionViolated,
    SearchSpaceExceeded,
    NotAnAntichain,
    ParseError,
    InvariantViolated,
};

constexpr std::string_view error_name(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::EmptyFamily: return "EmptyFamily";
        case ErrorKind::EmptySetMember: return "EmptySetMember";
        case ErrorKind::OutOfGround: return "OutOfGround";
        case ErrorKind::GroundMismatch: return "GroundMismatch";
        case ErrorKind::EmptyList: return "EmptyList";
        case ErrorKind::RankOutOfRange: return "RankOutOfRange";
        case ErrorKind::InvalidGround: return "InvalidGround";
        case ErrorKind::DuplicateLabel: return "DuplicateLabel";
        case ErrorKind::OverlappingLabels: return "OverlappingLabels";
        case ErrorKind::HasIsolatedVertex: return "HasIsolatedVertex";
        case ErrorKind::FamilyArityMismatch: return "FamilyArityMismatch";
        case ErrorKind::GroundTooLarge: return "GroundTooLarge";
        case ErrorKind::NotAStarForest: return "NotAStarForest";
        case ErrorKind::PreconditionViolated: return "PreconditionViolated";
        case ErrorKind::SearchSpaceExceeded: return "SearchSpaceExceeded";
        case ErrorKind::NotAnAntichain: return "NotAnAntichain";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::InvariantViolated: return "InvariantViolated";
    }
    return "Unknown";
}

/// Errors raised by parsing are reported with exit code 2 by the CLI; all
/// others are domain errors.
constexpr bool is_parse_error(ErrorKind kind) noexcept {
    return kind == ErrorKind::ParseError || kind == ErrorKind::NotAnAntichain ||
           kind == ErrorKind::DuplicateLabel;
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_name(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace domhg
