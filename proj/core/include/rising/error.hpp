#pragma once

#include <stdexcept>
#include <string>

namespace rising {

enum class ErrorKind {
    DomainError,
    RangeError,
    NotInvertible,
    NotIncreasing,
    EnvelopeOrderViolated,
    EndpointsNotPreserved,
    OverlapError,
    OutOfRange,
    StageOverflow,
    InternalOrderViolation,
    CapReached,
    ReflectionCollision,
    NotInImage,
    InvalidDisk,
    Overflow,
    ParseError,
    ValidationError,
    BudgetExceeded,
    IoError,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }
    const char* kind_name() const { return error_kind_name(kind_); }

private:
    ErrorKind kind_;
};

}  // namespace rising
