#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace phtk {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidSimplex : public Error {
public:
    using Error::Error;
};

class InvalidComplex : public Error {
public:
    using Error::Error;
};

class InvalidPointCloud : public Error {
public:
    using Error::Error;
};

class NotSquare : public Error {
public:
    using Error::Error;
};

class DimensionTooLarge : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class InvalidFiltration : public Error {
public:
    using Error::Error;
};

class NotACycle : public Error {
public:
    using Error::Error;
};

class EmptyDiagram : public Error {
public:
    using Error::Error;
};

class InvalidOptions : public Error {
public:
    using Error::Error;
};

/// Input text could not be turned into a domain object. `line()` is 1-based,
/// 0 when the error is not tied to a particular line.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class MalformedRecord : public ParseError {
public:
    using ParseError::ParseError;
};

class EmptySelection : public ParseError {
public:
    explicit EmptySelection(const std::string& what) : ParseError(what, 0) {}
};

class RaggedRows : public ParseError {
public:
    using ParseError::ParseError;
};

class NonNumeric : public ParseError {
public:
    using ParseError::ParseError;
};

}  // namespace phtk
