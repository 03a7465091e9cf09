#pragma once

#include <stdexcept>
#include <string>

namespace edgegame {

// Failure categories; the numeric values double as CLI exit codes.
enum class ErrorKind : int {
  invariant = 1,
  input = 2,
  unsupported = 3,
  cap_exceeded = 4,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Malformed or invalid input (parse errors, bad indices, length mismatches).
class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(ErrorKind::input, what) {}
};

/// An internal consistency check failed. Always a bug somewhere upstream.
class InvariantError : public Error {
 public:
  explicit InvariantError(const std::string& what) : Error(ErrorKind::invariant, what) {}
};

class UnsupportedError : public Error {
 public:
  explicit UnsupportedError(const std::string& what) : Error(ErrorKind::unsupported, what) {}
};

class CapExceededError : public Error {
 public:
  explicit CapExceededError(const std::string& what) : Error(ErrorKind::cap_exceeded, what) {}
};

inline void check_invariant(bool ok, const std::string& what) {
  if (!ok) throw InvariantError(what);
}

}  // namespace edgegame
