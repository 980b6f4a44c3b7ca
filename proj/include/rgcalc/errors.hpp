#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rgcalc
{

// Base class for every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Raised when a negative power (or a quotient) would require inverting a
// Laurent polynomial with more than one term.
class NonUnitInverse : public Error
{
public:
    using Error::Error;
};

class SyntaxError : public Error
{
public:
    SyntaxError(std::size_t line, std::size_t column, const std::string &message)
        : Error("syntax error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line), column_(column), message_(message)
    {
    }

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string &message() const noexcept { return message_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

class UnknownVariable : public Error
{
public:
    explicit UnknownVariable(const std::string &name)
        : Error("unknown variable '" + name + "'"), name_(name)
    {
    }

    const std::string &name() const noexcept { return name_; }

private:
    std::string name_;
};

class BoundExceeded : public Error
{
public:
    using Error::Error;
};

class InvalidVertex : public Error
{
public:
    using Error::Error;
};

class InvalidEdge : public Error
{
public:
    using Error::Error;
};

class NotImproperEdge : public Error
{
public:
    using Error::Error;
};

class InvalidTree : public Error
{
public:
    using Error::Error;
};

class TableTooSmall : public Error
{
public:
    using Error::Error;
};

class BadConstantTerm : public Error
{
public:
    using Error::Error;
};

class NonInvertibleLinearFactor : public Error
{
public:
    using Error::Error;
};

} // namespace rgcalc
