#include "geophase/error.hpp"

namespace geophase {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotHermitian: return "NotHermitian";
        case ErrorKind::NotUnitTrace: return "NotUnitTrace";
        case ErrorKind::NotPSD: return "NotPSD";
        case ErrorKind::NonFinite: return "NonFinite";
        case ErrorKind::NotSquare: return "NotSquare";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::VanishingVisibility: return "VanishingVisibility";
        case ErrorKind::VanishingOverlap: return "VanishingOverlap";
        case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

}  // namespace geophase
