// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace fsig {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Caller violated a precondition (ring mismatch, bad arguments, ...).
class UsageError : public Error {
public:
  using Error::Error;
};

/// Exact arithmetic failed (inversion of zero, exponent overflow, ...).
class ArithmeticError : public Error {
public:
  using Error::Error;
};

/// A configured resource cap was exceeded (basis size, pair budget).
class ResourceError : public Error {
public:
  using Error::Error;
};

/// Instance falls outside the brute-force oracle's guard rails.
class OracleScopeError : public Error {
public:
  using Error::Error;
};

/// A divisor multiplier vanishes on the whole component under study.
class DegenerateDivisorError : public Error {
public:
  using Error::Error;
};

/// Text input could not be parsed; carries a 1-based source location.
class ParseError : public Error {
public:
  ParseError(const std::string& msg, int line, int column)
      : Error(msg), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

}  // namespace fsig
