#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace geophase {

enum class ErrorKind {
    NotHermitian,
    NotUnitTrace,
    NotPSD,
    NonFinite,
    NotSquare,
    DimensionMismatch,
    IndexOutOfRange,
    InvalidArgument,
    VanishingVisibility,
    VanishingOverlap,
    Parse,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this type; kind() lets callers
// (notably the CLI exit-code mapping) branch without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace geophase
