#pragma once

#include <stdexcept>
#include <string>

namespace bicomm {

// Violated precondition, dimension mismatch, or exceeded size cap.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input. position() is a 0-based byte offset when known.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what, std::size_t position = npos)
      : std::runtime_error(position == npos
                               ? what
                               : what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace bicomm
