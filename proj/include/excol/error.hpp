#pragma once

#include <stdexcept>
#include <string>

namespace excol {

// Base of every error raised by the library. The CLI maps the subclasses to
// exit codes: FormatError -> 2, everything else -> 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input document, dangling index, unknown key value.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Input is well formed but violates a structural requirement.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A subquotient was requested with B not contained in Z.
class ContainmentError : public Error {
 public:
  using Error::Error;
};

// The assembled differential does not square to zero.
class ComplexError : public Error {
 public:
  using Error::Error;
};

}  // namespace excol
