#pragma once

#include <stdexcept>
#include <string>

namespace lowdeg {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain (bad parameters, a failed
/// precondition, an undefined projection, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Values from two different fields were combined.
class FieldMismatchError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Two objects live in projective spaces of different dimension.
class AmbientMismatchError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Input text (JSON, number literals) could not be parsed.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace lowdeg
