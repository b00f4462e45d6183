#ifndef ARITYGAP_ERRORS_HPP
#define ARITYGAP_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aritygap {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its contract (bad field, undefined gap,
/// arity mismatch, malformed input file, ...).  The CLI maps these to exit
/// code 2.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// A theorem-backed runtime check failed.  This never indicates bad input;
/// it signals a bug in the implementation.  The CLI maps these to exit
/// code 1.
class VerificationError : public Error {
public:
  using Error::Error;
};

/// Text could not be parsed; `position` is the byte offset of the offending
/// character in the input.
class ParseError : public PreconditionError {
public:
  ParseError(const std::string& what, std::size_t position)
      : PreconditionError(what), position(position) {}
  std::size_t position;
};

}  // namespace aritygap

#endif
