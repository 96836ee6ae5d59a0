#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace arrspec {

enum class ErrorKind {
    InvalidInput,
    ZeroNormal,
    DuplicateHyperplane,
    NotEssential,
    FlatNotFound,
    DegenerateOrientation,
    EmptyFibre,
    DegenerateWeights,
    TooManyFaces,
    MultiplicityMismatch,
    NotAnEigenvector,
    DimensionMismatch,
    DeskScaleExceeded,
    ParseError,
};

constexpr std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::ZeroNormal: return "ZeroNormal";
    case ErrorKind::DuplicateHyperplane: return "DuplicateHyperplane";
    case ErrorKind::NotEssential: return "NotEssential";
    case ErrorKind::FlatNotFound: return "FlatNotFound";
    case ErrorKind::DegenerateOrientation: return "DegenerateOrientation";
    case ErrorKind::EmptyFibre: return "EmptyFibre";
    case ErrorKind::DegenerateWeights: return "DegenerateWeights";
    case ErrorKind::TooManyFaces: return "TooManyFaces";
    case ErrorKind::MultiplicityMismatch: return "MultiplicityMismatch";
    case ErrorKind::NotAnEigenvector: return "NotAnEigenvector";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DeskScaleExceeded: return "DeskScaleExceeded";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace arrspec
