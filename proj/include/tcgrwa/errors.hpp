// errors.hpp - exception types raised by the library and mapped to CLI exit codes

#pragma once

#include <stdexcept>
#include <string>

namespace tcgrwa {

/// Invalid input: negative indices, out-of-range parameters, mismatched dimensions.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Numerical failure: solver breakdown, uncertified truncation, incomplete basis expansion.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A matrix handed to a routine violates its structural precondition (e.g. not Hermitian).
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace tcgrwa
