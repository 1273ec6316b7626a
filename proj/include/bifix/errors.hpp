#ifndef BIFIX_ERRORS_HPP
#define BIFIX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bifix {

// Base class for all domain errors raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual const char* name() const noexcept { return "error"; }
};

// The depth-bounded window (factor set depth, prefix cap, ...) is too small
// to decide the question honestly. Callers may retry with a deeper window.
class WindowError : public Error {
public:
  using Error::Error;
  const char* name() const noexcept override { return "window_error"; }
};

// An operation precondition does not hold for the given arguments.
class PreconditionError : public Error {
public:
  using Error::Error;
  const char* name() const noexcept override { return "precondition_error"; }
};

// Malformed textual input (generator specs, code files, group words).
class ParseError : public Error {
public:
  using Error::Error;
  const char* name() const noexcept override { return "parse_error"; }
};

} // namespace bifix

#endif
