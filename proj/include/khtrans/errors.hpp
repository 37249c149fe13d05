#pragma once

#include <stdexcept>
#include <string>

namespace khtrans {

/// Malformed user input (braid word text, flags).
class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A configured resource guard was tripped (e.g. too many crossings).
class ResourceLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain (e.g. s on a link).
class PreconditionError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// An internal consistency check failed. Indicates a bug, not bad input.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace khtrans
