#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace gazekit {

/// Raised when a domain invariant is violated. `field()` names the offending
/// attribute (e.g. "persons[2].waving") so callers can report exactly what
/// was wrong with the input.
class ValidationError : public std::runtime_error {
public:
    ValidationError(std::string field, const std::string& what)
        : std::runtime_error(field + ": " + what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Raised for filesystem / stream / format failures.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace gazekit
