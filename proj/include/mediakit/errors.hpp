#pragma once

#include <stdexcept>
#include <string>

namespace mediakit {

// Base for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad input data: unknown ids, malformed files, out-of-range parameters.
struct InputError : Error {
    using Error::Error;
};

// A token system that violates structural uniqueness (e.g. two tokens with
// the same action, which makes reverse pairing ambiguous).
struct MalformedSystemError : InputError {
    using InputError::InputError;
};

// An operation was called outside its stated precondition.
struct PreconditionError : Error {
    using Error::Error;
};

// An exhaustive enumeration hit its node budget before finishing.
struct BudgetError : Error {
    using Error::Error;
};

// A verification step that is impossible to fail on valid inputs failed;
// signals a bug rather than bad data.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace mediakit
