#pragma once

#include <stdexcept>
#include <string>

namespace paradoxkit {

// All library errors derive from Error so callers can catch one type.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A requested enumeration would exceed the configured size cap.
class ResourceError : public Error {
public:
    using Error::Error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

class DegenerateInputError : public Error {
public:
    using Error::Error;
};

// Something that cannot happen if the mathematics is right did happen.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

// Malformed action model, group table or unknown mover label.
class ModelError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

// Interval enclosures too wide to decide; retry with more precision.
class InconclusiveError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace paradoxkit
