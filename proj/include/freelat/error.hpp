#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace freelat {

/// Base of every error raised by the library. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConstructionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Input outside the meet-of-proper-joins shape on which E-sets are computed.
class UnsupportedShape : public Error {
 public:
  using Error::Error;
};

/// A maximal element with no incomparable minimal element: the inner sum of w_Q is empty.
class EmptyJoinError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Two routes that must agree did not. Never expected; indicates a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace freelat
