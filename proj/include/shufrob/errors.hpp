#pragma once

#include <stdexcept>
#include <string>

namespace shufrob {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (words, word-set files, CLI arguments).
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Arguments outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured budget or safety limit was exceeded. The answer is unknown.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Raised when a result that should be guaranteed fails to materialize.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace shufrob
