/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <stdexcept>
#include <string>

namespace ahodge {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

/// Manifest or literal syntax error; carries a 1-based position when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line = 0, int column = 0)
      : Error(format(msg, line, column)), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(const std::string& msg, int line, int column) {
    if (line <= 0) return "parse error: " + msg;
    std::string where = "line " + std::to_string(line);
    if (column > 0) where += ", column " + std::to_string(column);
    return "parse error (" + where + "): " + msg;
  }
  int line_;
  int column_;
};

/// d^2 != 0 on a coframe element. `index` is 1-based.
class JacobiViolation : public Error {
 public:
  JacobiViolation(const std::string& coframe, int index, const std::string& residue)
      : Error("d^2 " + coframe + std::to_string(index) + " = " + residue + " != 0"),
        index_(index) {}
  int index() const { return index_; }

 private:
  int index_;
};

class NonInvertibleCoframe : public Error {
 public:
  using Error::Error;
};

class NotCompatible : public Error {
 public:
  using Error::Error;
};

class NotPositive : public Error {
 public:
  using Error::Error;
};

class NotAlmostKahler : public Error {
 public:
  using Error::Error;
};

class UndeterminedUnknowns : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace ahodge
