#pragma once

#include <stdexcept>
#include <string>

namespace icw {

enum class ErrorKind {
    NotInField,
    InversionOfZero,
    DimensionMismatch,
    IndexOutOfRange,
    DuplicateIndex,
    OddPairSet,
    NotDecodable,
    MissingSideInformation,
    InconsistentInputs,
    UnsupportedWidth,
    PreconditionFailed,
    UnknownFixture,
    ParseError,
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::NotInField: return "NotInField";
        case ErrorKind::InversionOfZero: return "InversionOfZero";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::DuplicateIndex: return "DuplicateIndex";
        case ErrorKind::OddPairSet: return "OddPairSet";
        case ErrorKind::NotDecodable: return "NotDecodable";
        case ErrorKind::MissingSideInformation: return "MissingSideInformation";
        case ErrorKind::InconsistentInputs: return "InconsistentInputs";
        case ErrorKind::UnsupportedWidth: return "UnsupportedWidth";
        case ErrorKind::PreconditionFailed: return "PreconditionFailed";
        case ErrorKind::UnknownFixture: return "UnknownFixture";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace icw
