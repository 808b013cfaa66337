#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace icosa {

/// Base class for every recoverable error raised by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Syntax or lookup error in cycle-notation input. Positions are 1-based
/// character offsets into the original text.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

}  // namespace icosa
