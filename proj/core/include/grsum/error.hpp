#pragma once

#include <stdexcept>
#include <string>

namespace grsum {

/// A caller supplied parameters outside an operation's domain.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A request exceeds a hard size guard (e.g. 2^n enumeration).
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Two routes that must agree did not, or a value that must be integral was not.
/// Signals a convention or implementation bug rather than bad input.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace grsum
