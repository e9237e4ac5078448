#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace twords {

/// Base of every error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `position` is a 0-based character offset.
class parse_error : public error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Well-formed input that violates an operation's precondition.
class invalid_argument : public error {
 public:
  using error::error;
};

class space_mismatch : public invalid_argument {
 public:
  space_mismatch() : invalid_argument("operands live in different base spaces") {}
};

class unknown_point : public invalid_argument {
 public:
  explicit unknown_point(const std::string& name) : invalid_argument("unknown point '" + name + "'") {}
  unknown_point(const std::string& name, std::size_t position)
      : invalid_argument("unknown point '" + name + "' at position " + std::to_string(position)) {}
};

/// An internal contract that should hold for every representable input failed.
class invariant_violation : public error {
 public:
  using error::error;
};

}  // namespace twords
