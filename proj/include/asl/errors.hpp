#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace asl {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class ReduciblePolynomial : public Error {
  public:
    using Error::Error;
};

class DegreeMismatch : public Error {
  public:
    using Error::Error;
};

class ContextMismatch : public Error {
  public:
    using Error::Error;
};

class DivisionByZero : public Error {
  public:
    using Error::Error;
};

class PrecisionExhausted : public Error {
  public:
    using Error::Error;
};

class DomainError : public Error {
  public:
    using Error::Error;
};

class ParseError : public Error {
  public:
    ParseError(const std::string &what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

  private:
    std::size_t position_;
};

class UnknownSymbol : public ParseError {
  public:
    UnknownSymbol(const std::string &symbol, std::size_t position)
        : ParseError("unknown symbol '" + symbol + "'", position), symbol_(symbol) {}

    const std::string &symbol() const noexcept { return symbol_; }

  private:
    std::string symbol_;
};

class ZeroCoset : public Error {
  public:
    using Error::Error;
};

class DegeneratePlane : public Error {
  public:
    using Error::Error;
};

class NonIntegralExponent : public Error {
  public:
    using Error::Error;
};

class BudgetExceeded : public Error {
  public:
    using Error::Error;
};

} // namespace asl
