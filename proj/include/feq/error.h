#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace feq {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class UnknownIdentifier : public Error {
 public:
  using Error::Error;
};

/// A variable occurs outside the scope of every quantifier binding it.
class UnboundVariable : public Error {
 public:
  using Error::Error;
};

/// The input leaves the equational fragment handled by the internal pipeline.
class UnsupportedFragment : public Error {
 public:
  explicit UnsupportedFragment(std::string reason)
      : Error("unsupported fragment: " + reason), reason_(std::move(reason)) {}

  const std::string& reason() const { return reason_; }

 private:
  std::string reason_;
};

class EvaluationIncomplete : public Error {
 public:
  explicit EvaluationIncomplete(std::string symbol)
      : Error("no value for symbol '" + symbol + "'"), symbol_(std::move(symbol)) {}

  const std::string& symbol() const { return symbol_; }

 private:
  std::string symbol_;
};

/// An application of the unknown function survived where a polynomial was required.
class NotInlined : public Error {
 public:
  NotInlined() : Error("expression still contains an application of f") {}
};

class NoSolvedForm : public Error {
 public:
  explicit NoSolvedForm(std::string reason)
      : Error("no solved form: " + reason), reason_(std::move(reason)) {}

  const std::string& reason() const { return reason_; }

 private:
  std::string reason_;
};

class NotUnitEquational : public Error {
 public:
  explicit NotUnitEquational(std::string reason)
      : Error("not unit-equational: " + reason), reason_(std::move(reason)) {}

  const std::string& reason() const { return reason_; }

 private:
  std::string reason_;
};

}  // namespace feq
