#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sliceq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematical precondition does not hold (zero inverse, r outside [0,1], ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Invalid FockParams / RunConfig or mismatched grid.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Bad command-line usage or unknown check identifier.
class UsageError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace sliceq
