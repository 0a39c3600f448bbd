#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lpp {

// Every error raised by the library derives from Error so the CLI can map
// user-facing failures to exit codes without catching std::exception.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidFamilyParams : public Error { using Error::Error; };
class IndexOutOfRange : public Error { using Error::Error; };
class TooLarge : public Error { using Error::Error; };
class DuplicateNode : public Error { using Error::Error; };
class NonIntegralCoefficient : public Error { using Error::Error; };
class NonIntegralInversion : public Error { using Error::Error; };
class InvalidN : public Error { using Error::Error; };
class UnsupportedFamily : public Error { using Error::Error; };
class OutOfRange : public Error { using Error::Error; };
class CycleLimitExceeded : public Error { using Error::Error; };
class IoError : public Error { using Error::Error; };

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace lpp
