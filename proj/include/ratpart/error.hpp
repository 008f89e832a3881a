#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ratpart {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& reason)
        : Error("line " + std::to_string(line) + ": " + reason), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class EmptyInitialSet : public Error {
public:
    EmptyInitialSet() : Error("transducer has no initial state") {}
};

class InvalidSymbol : public Error {
public:
    using Error::Error;
};

/// Structural problems: dangling edge endpoints, duplicate or malformed state names.
class InvalidTransducer : public Error {
public:
    using Error::Error;
};

class AlphabetMismatch : public Error {
public:
    AlphabetMismatch(unsigned left, unsigned right)
        : Error("alphabet mismatch: " + std::to_string(left) + " vs " + std::to_string(right)) {}
};

class NotAPath : public Error {
public:
    using Error::Error;
};

class NotLetterToLetter : public Error {
public:
    NotLetterToLetter() : Error("transducer is not letter-to-letter") {}
};

class HasEpsilonPair : public Error {
public:
    HasEpsilonPair() : Error("transducer has an edge labelled -/-") {}
};

class BoundTooSmall : public Error {
public:
    BoundTooSmall(unsigned required, unsigned given)
        : Error("bound " + std::to_string(given) + " is below the minimum bound " +
                std::to_string(required)),
          required_(required), given_(given) {}

    unsigned required() const noexcept { return required_; }
    unsigned given() const noexcept { return given_; }

private:
    unsigned required_;
    unsigned given_;
};

class ShapeViolation : public Error {
public:
    using Error::Error;
};

class CapMismatch : public Error {
public:
    CapMismatch(std::size_t a, std::size_t b)
        : Error("length caps differ: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

} // namespace ratpart
