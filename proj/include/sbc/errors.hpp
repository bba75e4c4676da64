#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sbc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input. `position` is a byte offset when known.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::size_t position = npos)
      : Error(what), position_(position) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A well-formed request outside the domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Two paths whose endpoints do not meet.
class CompositionError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The truncation window is too small for the requested object.
class WindowOverflow : public Error {
 public:
  using Error::Error;
};

}  // namespace sbc
