#pragma once

#include <stdexcept>
#include <string>

namespace hcss {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
  using Error::Error;
};

// Evaluation requested at (or too close to) a pole of a Gamma quotient.
class PoleError : public Error {
public:
  using Error::Error;
};

// Adaptive quadrature or a series failed to reach its target tolerance.
class ConvergenceError : public Error {
public:
  using Error::Error;
};

// Malformed CLI / config input.
class ParseError : public Error {
public:
  using Error::Error;
};

} // namespace hcss
