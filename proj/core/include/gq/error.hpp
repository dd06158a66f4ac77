#ifndef GQ_ERROR_HPP_
#define GQ_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gq {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! An argument violates an operation's precondition (index out of range,
  //! mismatched universes, ragged rows, ...).
  class ArgumentError : public Error {
   public:
    using Error::Error;
  };

  //! A structural precondition on a value does not hold (e.g. a subset that is
  //! not invariant under a monoid).
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  //! A desk-scale guardrail was exceeded.
  class CapacityError : public Error {
   public:
    using Error::Error;
  };

  //! Malformed text input. `line()` is 1-based; 0 means "whole document".
  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::string const& what)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          _line(line) {}

    std::size_t line() const noexcept {
      return _line;
    }

   private:
    std::size_t _line;
  };

}  // namespace gq

#endif  // GQ_ERROR_HPP_
