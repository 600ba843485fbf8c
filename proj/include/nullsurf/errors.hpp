#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nullsurf {

// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Expression text rejected by the parser. `offset` is the byte position of
// the offending character in the input.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : Error(msg + " (at byte " + std::to_string(offset) + ")"), offset(offset) {}

    std::size_t offset;
};

// Evaluation left the domain of a function (sqrt of a negative value, log of
// a non-positive value, division by zero) or produced a non-finite value.
class EvalError : public Error {
public:
    using Error::Error;
};

// A parameter fell outside a declared interval.
class OutOfDomainError : public Error {
public:
    using Error::Error;
};

// Frame construction failed: vanishing curvature or no usable auxiliary
// direction.
class FrameError : public Error {
public:
    using Error::Error;
};

// Scene document violates the schema. `where` is a JSON-pointer-style path
// into the document.
class SceneError : public Error {
public:
    SceneError(const std::string& where, const std::string& msg)
        : Error(where + ": " + msg), where(where) {}

    std::string where;
};

// A check was invoked while its precondition does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace nullsurf
