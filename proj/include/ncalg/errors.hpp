#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncalg {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inconsistent configuration: unranked letters, mixed alphabets, bad bounds.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class NoLeadingTerm : public Error {
 public:
  NoLeadingTerm() : Error("zero element has no leading term") {}
};

/// A query needs canonical forms above the degree a truncated system certifies.
class TrustBoundExceeded : public Error {
 public:
  TrustBoundExceeded(std::size_t needed, std::size_t bound)
      : Error("degree " + std::to_string(needed) + " exceeds trust bound " +
              std::to_string(bound)),
        needed_(needed),
        bound_(bound) {}
  std::size_t needed() const noexcept { return needed_; }
  std::size_t bound() const noexcept { return bound_; }

 private:
  std::size_t needed_;
  std::size_t bound_;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A checked theorem contract failed. Signals an engine bug.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

class NotInImage : public Error {
 public:
  using Error::Error;
};

class RelatorCheckError : public Error {
 public:
  using Error::Error;
};

class NumericError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace ncalg
