#pragma once

#include <stdexcept>
#include <string>

namespace gainrank {

// Base of every error raised by the library. The CLI maps these to exit 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed graph: loop, duplicate edge, vertex id out of range, mixed gain modes.
class GraphError : public Error {
public:
    using Error::Error;
};

// A gain that is not of unit modulus, or an unparsable gain literal.
class GainError : public Error {
public:
    using Error::Error;
};

// An exact-only operation was handed approximate data (or the reverse).
class ModeError : public Error {
public:
    using Error::Error;
};

// Approximate gain product too close to a Type boundary to classify.
class AmbiguityError : public Error {
public:
    using Error::Error;
};

// Matrix that fails a structural precondition (non-square, non-Hermitian, non-finite).
class MatrixError : public Error {
public:
    using Error::Error;
};

// Invalid generator parameters (parity mismatch, bad probability, ...).
class ParameterError : public Error {
public:
    using Error::Error;
};

// Raised when a constructed instance fails its own certification. Never expected.
class CertificationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace gainrank
