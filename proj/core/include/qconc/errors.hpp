#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qconc {

// Error categories. The CLI maps them to exit codes: parse=2, domain=3, io=4.
enum class ErrorKind { parse, domain, io };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class DomainError : public Error {
public:
    explicit DomainError(std::string message)
        : Error(ErrorKind::domain, std::move(message)) {}
};

class IoError : public Error {
public:
    explicit IoError(std::string message)
        : Error(ErrorKind::io, std::move(message)) {}
};

// Input-text errors carry the byte offset of the failure.
class ParseError : public Error {
public:
    ParseError(std::string message, std::size_t offset)
        : Error(ErrorKind::parse, std::move(message)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_ = 0;
};

class ZeroState : public DomainError             { public: using DomainError::DomainError; };
class DimensionMismatch : public DomainError     { public: using DomainError::DomainError; };
class CapacityExceeded : public DomainError      { public: using DomainError::DomainError; };
class BadSubset : public DomainError             { public: using DomainError::DomainError; };
class BadPermutation : public DomainError        { public: using DomainError::DomainError; };
class BadDimension : public DomainError          { public: using DomainError::DomainError; };
class OddSubset : public DomainError             { public: using DomainError::DomainError; };
class NotDensityMatrix : public DomainError      { public: using DomainError::DomainError; };
class NotReal : public DomainError               { public: using DomainError::DomainError; };
class EigensolverFailure : public DomainError    { public: using DomainError::DomainError; };
class UnknownCode : public DomainError           { public: using DomainError::DomainError; };
class OutOfRange : public DomainError            { public: using DomainError::DomainError; };
class DegenerateInterpolant : public DomainError { public: using DomainError::DomainError; };

class SyntaxError : public ParseError            { public: using ParseError::ParseError; };
class WidthMismatch : public ParseError          { public: using ParseError::ParseError; };
class EmptyExpression : public ParseError        { public: using ParseError::ParseError; };

} // namespace qconc
