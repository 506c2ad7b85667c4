#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace heunfact {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& message, std::size_t position)
        : Error("syntax error at position " + std::to_string(position) + ": " + message),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class UnknownSymbol : public Error {
public:
    UnknownSymbol(const std::string& name, std::size_t position)
        : Error("unknown symbol '" + name + "' at position " + std::to_string(position)),
          name_(name), position_(position) {}

    const std::string& name() const noexcept { return name_; }
    std::size_t position() const noexcept { return position_; }

private:
    std::string name_;
    std::size_t position_;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

class SymbolTableMismatch : public Error {
public:
    SymbolTableMismatch() : Error("operands use different symbol tables") {}
};

class SingularSystem : public Error {
public:
    using Error::Error;
};

class CoincidentSingularities : public Error {
public:
    using Error::Error;
};

class MissingAccessory : public Error {
public:
    MissingAccessory() : Error("operator has no accessory parameters; q_low is undefined") {}
};

class DegreeOverflow : public Error {
public:
    using Error::Error;
};

class ConsistencyFailure : public Error {
public:
    using Error::Error;
};

class MaskMismatch : public Error {
public:
    using Error::Error;
};

class NotLame : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class SymbolicParameters : public Error {
public:
    using Error::Error;
};

class InvalidInput : public Error {
public:
    using Error::Error;
};

} // namespace heunfact
