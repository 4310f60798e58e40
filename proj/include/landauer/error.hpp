#pragma once

#include <stdexcept>
#include <string>

namespace landauer {

// Base for every error raised by the library. The CLI maps ParseError to exit
// status 1 and everything else to exit status 2.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Shapes of different lengths were compared.
class ComparabilityError : public Error {
public:
  using Error::Error;
};

// An argument lies outside the domain of a formula (log of a non-positive
// number, zero affinity, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

// Integration produced a non-finite state.
class DivergenceError : public Error {
public:
  DivergenceError(double time, const std::string& what)
      : Error(what), time_(time) {}

  double time() const noexcept { return time_; }

private:
  double time_;
};

// Scenario text could not be parsed. `line` is 1-based, `column` is 1-based
// or 0 when the whole line is at fault.
class ParseError : public Error {
public:
  ParseError(int line, int column, const std::string& message)
      : Error(format(line, column, message)), line_(line), column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

private:
  static std::string format(int line, int column, const std::string& message) {
    std::string out = "line " + std::to_string(line);
    if (column > 0) out += ", column " + std::to_string(column);
    return out + ": " + message;
  }

  int line_;
  int column_;
};

}  // namespace landauer
