#pragma once

#include <stdexcept>
#include <string>

namespace orbitlab {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operands live in different scalar domains.
class DomainMismatch : public Error {
public:
    using Error::Error;
};

// Matrix or vector dimensions do not fit the operation.
class ShapeMismatch : public Error {
public:
    using Error::Error;
};

// A precondition on the arguments was violated.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

class SingularMatrix : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

// Two routes that must agree did not; never silently recovered.
class InternalInconsistency : public Error {
public:
    using Error::Error;
};

}  // namespace orbitlab
