#pragma once

#include <stdexcept>
#include <string>

namespace kinconv {

/// Base class for all kinconv errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A model or value violates a type invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A document could not be parsed into a model.
class ParseError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// A geometric operation has no solution for the given input
/// (e.g. common perpendicular of coincident lines).
class GeometryError : public Error {
public:
    using Error::Error;
};

/// A conversion between representations is infeasible.
class ConversionError : public Error {
public:
    using Error::Error;
};

/// File system failure while reading or writing documents.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace kinconv
