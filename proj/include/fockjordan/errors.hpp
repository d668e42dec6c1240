#pragma once

#include <stdexcept>
#include <string>

namespace fockjordan {

/// Raised when an argument lies outside the domain of an operation.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an exact identity that must hold is violated. Seeing one of
/// these means an operator was built incorrectly.
class IntegrityError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace fockjordan
