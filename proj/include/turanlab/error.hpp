#pragma once

#include <stdexcept>
#include <string>

namespace turanlab {

// Base for all recoverable errors thrown by the library. The CLI maps these
// to exit code 2 (usage/config error); anything else escaping is a bug.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad function argument (out-of-range vertex, self-loop, malformed params).
class ArgumentError : public Error {
public:
    using Error::Error;
};

// Graph too large for the representation (vertex cap, pattern-order limit).
class CapacityError : public Error {
public:
    using Error::Error;
};

// Malformed graph6 input.
class DecodeError : public Error {
public:
    using Error::Error;
};

// Invalid construction spec or environment configuration.
class SpecError : public Error {
public:
    using Error::Error;
};

// A verify target was invoked with parameters outside its hypotheses.
class HypothesisError : public Error {
public:
    using Error::Error;
};

} // namespace turanlab
