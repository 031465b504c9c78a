// Exception types shared by every relsemi module.

#ifndef RELSEMI_ERROR_HPP_
#define RELSEMI_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace relsemi {

  // Base of everything thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed or inconsistent input: bad file syntax, ground-size mismatch,
  // non-associative tables, out-of-range indices.
  class InputError : public Error {
   public:
    using Error::Error;
  };

  // A documented precondition of an operation does not hold (for example,
  // asking for the factor map of two partitions that are not comparable).
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  // A configurable resource guard was exceeded (closure element cap,
  // enumeration size, search candidate budget).
  class GuardError : public Error {
   public:
    using Error::Error;
  };

}  // namespace relsemi

#endif  // RELSEMI_ERROR_HPP_
